#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "m0n/exactla/rational.hpp"

namespace m0n::cli {

enum class Format { human, machine };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Ordered key/value lines. Machine output is `key=value`, one per line.
/// Human output starts with the headline; `brief` suppresses the lines.
struct Report {
  std::string headline;
  std::vector<std::pair<std::string, std::string>> lines;
  bool brief = false;
  int status = kOk;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const Rational& v) { add(std::move(key), to_string(v)); }
  void add(std::string key, long long v) { add(std::move(key), std::to_string(v)); }
  void add(std::string key, std::size_t v) { add(std::move(key), std::to_string(v)); }
  void add(std::string key, int v) { add(std::move(key), std::to_string(v)); }
  void flag(std::string key, bool v) { add(std::move(key), std::string(v ? "yes" : "no")); }

  void write(std::ostream& os, Format f) const {
    if (f == Format::machine) {
      for (const auto& [k, v] : lines) os << k << '=' << v << '\n';
      return;
    }
    if (!headline.empty()) os << headline << '\n';
    if (brief) return;
    for (const auto& [k, v] : lines) os << "  " << k << ": " << v << '\n';
  }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline std::string vector_string(const RatVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

}  // namespace m0n::cli
