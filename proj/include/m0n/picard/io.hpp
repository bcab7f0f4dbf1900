#pragma once

#include <json.hpp>
#include <string>

#include "m0n/picard/divisor.hpp"

namespace m0n {

/// {"n": 6, "psi": {"1": "1/2"}, "boundary": {"[1,2]": "-1"}}; subsets are
/// canonicalized and repeated classes accumulate.
inline DivisorClass divisor_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("divisor document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("field 'n' missing or not an integer");
  const int n = doc["n"].get<int>();
  if (n < 4 || n > kMaxPoints) throw ParseError("field 'n' out of range");
  DivisorClass d(n);
  auto value = [](const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const ParseError&) {
        throw ParseError("field '" + field + "' is not a rational string");
      }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("field '" + field + "' must be a rational string \"p/q\"");
  };
  for (const auto& [key, v] : doc.items()) {
    if (key == "n") continue;
    if (key != "psi" && key != "boundary") throw ParseError("unknown field '" + key + "'");
    if (!v.is_object()) throw ParseError("field '" + key + "' must be an object");
  }
  if (doc.contains("psi"))
    for (const auto& [label, v] : doc["psi"].items()) {
      const std::string field = "psi." + label;
      if (label.empty() || label.size() > 3 || label.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("field '" + field + "' is not a label");
      const int i = std::stoi(label);
      if (i < 1 || i > n) throw ParseError("field '" + field + "' label out of range");
      d.add_psi(i, value(v, field));
    }
  if (doc.contains("boundary"))
    for (const auto& [subset, v] : doc["boundary"].items()) {
      const std::string field = "boundary." + subset;
      Mask s = 0;
      try {
        s = parse_subset(subset);
        d.add_delta(s, value(v, field));
      } catch (const DomainError& e) {
        throw ParseError("field '" + field + "': " + e.what());
      } catch (const ParseError& e) {
        throw ParseError("field '" + field + "': " + e.what());
      }
    }
  return d;
}

inline DivisorClass parse_divisor(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("divisor document is not valid JSON: ") + e.what());
  }
  return divisor_from_json(doc);
}

inline nlohmann::ordered_json divisor_to_json(const DivisorClass& d) {
  nlohmann::ordered_json doc;
  doc["n"] = d.n();
  doc["psi"] = nlohmann::ordered_json::object();
  doc["boundary"] = nlohmann::ordered_json::object();
  for (const auto& [s, c] : d.terms()) {
    if (s.is_psi)
      doc["psi"][std::to_string(s.label)] = to_string(c);
    else
      doc["boundary"][subset_string(s.rep)] = to_string(c);
  }
  return doc;
}

inline std::string format_divisor(const DivisorClass& d) { return divisor_to_json(d).dump(2) + "\n"; }

}  // namespace m0n
