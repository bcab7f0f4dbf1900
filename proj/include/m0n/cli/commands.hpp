#pragma once

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "m0n/chambers6/decompose.hpp"
#include "m0n/chambers6/fibration.hpp"
#include "m0n/cli/report.hpp"
#include "m0n/picard/io.hpp"
#include "m0n/symscan/certify.hpp"
#include "m0n/symscan/scan.hpp"

namespace m0n::cli {

/// Raised for bad command lines and unreadable input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  int n = 0;
  std::string group = "none";
  std::string in, out;
  std::string curve;
  std::uint64_t seed = 1;
  int samples = 0;
  int force_branch = 0;
  bool verify = false;
  Format format = Format::human;
};

inline std::string read_input(const Options& o) {
  if (o.in.empty()) throw UsageError("field 'in': an input document is required (--in PATH, '-' for stdin)");
  if (o.in == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(o.in);
  if (!f) throw UsageError("field 'in': cannot read '" + o.in + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline DivisorClass read_divisor(const Options& o) {
  const std::string text = read_input(o);
  try {
    DivisorClass d = parse_divisor(text);
    if (o.n != 0 && o.n != d.n()) throw UsageError("field 'n': document has n = " + std::to_string(d.n()) + ", --n says " + std::to_string(o.n));
    return d;
  } catch (const ParseError& e) {
    throw UsageError(std::string("input '") + o.in + "': " + e.what());
  }
}

inline int require_n(const Options& o) {
  if (o.n == 0) throw UsageError("field 'n': --n is required");
  return o.n;
}

inline SymmetryGroup group_for(const Options& o, int n) {
  try {
    return SymmetryGroup::parse(n, o.group);
  } catch (const std::exception& e) {
    throw UsageError(std::string("field 'group': ") + e.what());
  }
}

inline std::string compact(const DivisorClass& d) { return divisor_to_json(d).dump(); }

inline void add_combination(Report& r, const std::string& prefix, const BoundaryCombination& c) {
  for (const auto& [b, v] : c.coeffs) r.add(prefix + b.str(), v);
}

inline void add_witness(Report& r, const FNefResult& f) {
  r.add("witness", f.witness->str());
  r.add("pairing", f.value);
}

inline FCurve parse_curve(int n, const std::string& spec) {
  std::array<Mask, 4> blocks{};
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t bar = spec.find('|', start);
    if ((k < 3) != (bar != std::string::npos)) throw UsageError("field 'curve': expected four blocks separated by '|'");
    try {
      blocks[static_cast<std::size_t>(k)] = parse_subset(spec.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      start = bar + 1;
    } catch (const ParseError& e) {
      throw UsageError(std::string("field 'curve': ") + e.what());
    }
  }
  try {
    return FCurve(n, blocks);
  } catch (const DomainError& e) {
    throw UsageError(std::string("field 'curve': ") + e.what());
  }
}

// ---- verbs ----

inline Report cmd_dim(const Options& o) {
  const int n = require_n(o);
  Report r;
  const auto d = pic_context(n).dim();
  r.headline = std::to_string(d);
  r.brief = true;
  r.add("n", n);
  r.add("dim", d);
  r.add("formula", picard_dimension_formula(n));
  r.add("boundary_classes", boundary_classes(n).size());
  return r;
}

inline Report cmd_intersect(const Options& o) {
  const DivisorClass d = read_divisor(o);
  Report r;
  if (!o.curve.empty()) {
    const FCurve f = parse_curve(d.n(), o.curve);
    const Rational v = dot(d, f);
    r.headline = to_string(v);
    r.brief = true;
    r.add(f.str(), v);
    return r;
  }
  const auto g = group_for(o, d.n());
  if (g.is_trivial()) {
    for (const auto& f : fcurves(d.n())) r.add(f.str(), dot(d, f));
  } else {
    require_group_invariant(d, g);
    for (const auto& [f, size] : g.fcurve_orbits()) r.add(f.str(), dot(d, f));
  }
  r.headline = std::to_string(r.lines.size()) + " curve pairings";
  return r;
}

inline Report cmd_fnef(const Options& o) {
  const DivisorClass d = read_divisor(o);
  const auto g = group_for(o, d.n());
  const FNefResult f = g.is_trivial() ? fnef(d) : fnef(d, g);
  Report r;
  r.headline = f.nef ? "yes" : "no";
  r.flag("fnef", f.nef);
  r.add("checked", f.checked);
  if (!f.nef) {
    add_witness(r, f);
    r.status = kNegative;
  }
  return r;
}

inline Report not_fnef_report(const DivisorClass& d, const SymmetryGroup& g) {
  const FNefResult f = g.is_trivial() ? fnef(d) : fnef(d, g);
  Report r;
  r.headline = "not F-nef";
  r.flag("fnef", false);
  if (f.witness) add_witness(r, f);
  r.status = kNegative;
  return r;
}

inline Report cmd_decompose(const Options& o) {
  const DivisorClass d = read_divisor(o);
  const int n = d.n();
  const auto g = group_for(o, n);
  Report r;
  try {
    if (n == 6) {
      const auto s = decompose_effective(d);
      r.add("method", std::string("six-point"));
      if (s.negative_triple) {
        r.add("negative_triple", subset_string(*s.negative_triple));
        r.add("rho", s.rho);
      }
      add_combination(r, "coef", s.decomposition.combination);
      r.flag("effective", s.decomposition.combination.nonnegative());
    } else if (n == 8 && g.cells() == SymmetryGroup::sym(8, 6).cells()) {
      const auto m = m62_decompose(d, o.force_branch);
      r.add("method", std::string("m62"));
      r.add("branch", m.branch);
      for (const auto& [name, v] : m.coefficients) r.add("class." + name, v);
      add_combination(r, "coef", m.combination);
      r.flag("effective", m.effective());
      if (m.falsified) {
        r.add("falsified", *m.falsified);
        r.status = kNegative;
      }
    } else if (n >= 5 && n <= kMaxContextN && g.cells() == SymmetryGroup::sym(n, n - 1).cells()) {
      const auto p = onepoint_decompose(d);
      r.add("method", std::string("onepoint"));
      const auto basis = onepoint_basis(n);
      for (std::size_t j = 0; j < p.coords.size(); ++j) r.add("class." + basis.names[j], p.coords[j]);
      add_combination(r, "coef", p.combination);
      r.flag("effective", p.effective());
      if (p.falsified) {
        r.add("falsified", *p.falsified);
        r.status = kNegative;
      }
    } else {
      const auto m = effective_membership(d, g);
      r.add("method", std::string("membership"));
      r.flag("effective", m.member);
      if (m.member) {
        add_combination(r, "coef", m.decomposition->combination);
      } else {
        r.add("separator.y", vector_string(m.separator->y));
        r.add("separator.value", m.separator->value);
        r.status = kNegative;
      }
    }
  } catch (const PreconditionError&) {
    return not_fnef_report(d, g);
  }
  r.headline = r.status == kOk ? "effective" : "not effective";
  return r;
}

inline Report cmd_chamber(const Options& o) {
  const DivisorClass d = read_divisor(o);
  if (d.n() != 6) throw UsageError("field 'n': chamber needs a six-point divisor");
  Report r;
  try {
    const auto c = chamber(d);
    r.headline = c.label();
    r.add("chamber", c.label());
    r.flag("in_central", c.in_central);
    r.flag("on_face", c.on_face());
    std::vector<std::string> t;
    for (Mask m : c.closure_triples) t.push_back(subset_string(m));
    r.add("closure_triples", join(t));
    std::vector<std::string> z;
    for (Mask m : c.vanishing) z.push_back(subset_string(m));
    r.add("vanishing", join(z));
    for (const auto& [m, v] : c.zeta.pair) r.add("zeta" + subset_string(m), v);
    for (const auto& [m, v] : c.zeta.triple) r.add("zeta" + subset_string(m), v);
  } catch (const PreconditionError&) {
    return not_fnef_report(d, SymmetryGroup::trivial(6));
  }
  return r;
}

inline Report cmd_classify(const Options& o) {
  const DivisorClass d = read_divisor(o);
  Report r;
  try {
    const auto c = classify_fibration(d);
    r.headline = to_string(c.tag);
    r.add("tag", std::string(to_string(c.tag)));
    std::vector<std::string> pts;
    for (int p : c.points) pts.push_back(std::to_string(p));
    if (!pts.empty()) r.add("points", join(pts));
    std::vector<std::string> pairs;
    for (Mask m : c.pairs) pairs.push_back(subset_string(m));
    if (!pairs.empty()) r.add("pairs", join(pairs));
    if (!c.weights.empty()) r.add("weights", vector_string(c.weights));
    if (c.image) r.add("image", compact(*c.image));
    if (c.witness) r.add("witness", c.witness->str());
    if (c.product) r.add("product", std::to_string(c.product->a) + "," + std::to_string(c.product->b) + " x=" +
                                        to_string(c.product->x) + " y=" + to_string(c.product->y));
    if (!c.note.empty()) r.add("note", c.note);
  } catch (const PreconditionError&) {
    return not_fnef_report(d, SymmetryGroup::trivial(d.n()));
  }
  return r;
}

inline Report cmd_sym_ineqs(const Options& o) {
  const int n = require_n(o);
  const auto q = sym_fineqs(n);
  Report r;
  r.headline = std::to_string(q.size()) + " inequalities";
  r.add("count", q.size());
  for (const auto& x : q) r.add("ineq" + shape_string(x.shape), x.str());
  return r;
}

inline std::string entry_key(int slice, int target) {
  return "slice" + std::to_string(slice) + ".r" + std::to_string(target);
}

inline Report cmd_sym_scan(const Options& o) {
  const int n = require_n(o);
  const auto s = scan_bounds(n);
  Report r;
  r.headline = std::to_string(s.inequalities.size()) + " inequalities, overall max " + to_string(s.overall_max()) + ", " +
               std::to_string(s.exceptional.size()) + " exceptional, " + std::to_string(s.violations.size()) + " above 1";
  r.add("inequalities", s.inequalities.size());
  for (const auto& x : s.inequalities) r.add("ineq" + shape_string(x.shape), x.str());
  for (const auto& e : s.entries)
    r.add(entry_key(e.slice, e.target), e.status == LPStatus::optimal ? to_string(e.max) + " at " + vector_string(e.vertex)
                                                                      : std::string(to_string(e.status)));
  std::vector<std::string> empty;
  for (int i : s.empty_slices()) empty.push_back(std::to_string(i));
  r.add("empty_slices", join(empty));
  r.add("overall_max", s.overall_max());
  r.add("exceptional", s.exceptional.size());
  for (std::size_t k = 0; k < s.exceptional.size(); ++k)
    r.add("exceptional." + std::to_string(k + 1), SymClass(n, s.exceptional[k], true).str());
  r.add("violations", s.violations.size());
  for (std::size_t k = 0; k < s.violations.size(); ++k) {
    const auto& v = s.violations[k];
    r.add("violation." + std::to_string(k + 1), entry_key(v.slice, v.target) + " max " + to_string(v.max) + " at " +
                                                    vector_string(v.vertex) + " range [" + to_string(v.low) + "," +
                                                    to_string(v.high) + "]");
  }
  return r;
}

inline Report cmd_m62(const Options& o) {
  if (!o.in.empty()) {
    Options p = o;
    p.group = "sym:6";
    const DivisorClass d = read_divisor(p);
    if (d.n() != 8) throw UsageError("field 'n': m62 takes an eight-point divisor");
    return cmd_decompose(p);
  }
  const auto c = m62_census();
  Report r;
  r.headline = std::to_string(c.orbits) + " orbit inequalities, " + std::to_string(c.facets.size()) + " facets, " +
               std::to_string(c.rays.size()) + " rays";
  r.add("orbits", c.orbits);
  r.add("duplicate_groups", c.duplicate_groups.size());
  r.add("zero_forms", c.zero_forms.size());
  r.add("facets", c.facets.size());
  for (const auto& red : c.redundant) {
    std::vector<std::string> parts;
    for (const auto& [k, l] : red.from_facets.forms) parts.push_back(to_string(l) + " " + c.labels[k]);
    r.add("redundant" + c.labels[red.index], join(parts, " + "));
  }
  r.add("rays", c.rays.size());
  const auto b2 = m62_b2_nonnegative();
  r.flag("b2_nonnegative_on_cone", b2.has_value());
  if (o.samples > 0) {
    std::mt19937_64 gen(o.seed);
    std::size_t ok = 0;
    for (int s = 0; s < o.samples; ++s) {
      DivisorClass d(8);
      for (const auto& ray : c.rays) {
        const long w = static_cast<long>(gen() % 4);
        if (w == 0) continue;
        for (std::size_t k = 0; k < ray.size(); ++k) d += Rational(w) * ray[k] * m62::named(m62::names()[k]);
      }
      const auto m = m62_decompose(d);
      const bool good = m.effective() && !check_decomposition(pic_context(8), {d, m.combination});
      ok += good;
      r.add("sample." + std::to_string(s + 1), std::string(good ? "effective" : "FAILED") + " branch " + std::to_string(m.branch));
    }
    r.add("samples_effective", ok);
    if (ok != static_cast<std::size_t>(o.samples)) r.status = kNegative;
  }
  return r;
}

inline std::string write_or_inline(const Options& o, const std::string& text) {
  if (o.out.empty()) return text;
  std::ofstream f(o.out);
  if (!f) throw UsageError("field 'out': cannot write '" + o.out + "'");
  f << text << '\n';
  return o.out;
}

inline Report cmd_certify(const Options& o) {
  Report r;
  if (o.verify) {
    const auto problems = verify_certificate_text(read_input(o));
    r.headline = problems.empty() ? "verified" : "rejected";
    r.flag("verified", problems.empty());
    for (std::size_t k = 0; k < problems.size(); ++k) r.add("problem." + std::to_string(k + 1), problems[k]);
    if (!problems.empty()) r.status = kNegative;
    return r;
  }
  const DivisorClass d = read_divisor(o);
  const auto g = group_for(o, d.n());
  NefCertificate c;
  try {
    c = certify_nef(d, g);
  } catch (const PreconditionError&) {
    return not_fnef_report(d, g);
  }
  const auto doc = certificate_to_json(c);
  const auto problems = verify_certificate(nlohmann::json::parse(doc.dump()));
  r.headline = c.certified && problems.empty() ? "certified" : "not certified";
  r.flag("certified", c.certified);
  r.add("root.method", c.root.method);
  r.add("children", c.children.size());
  for (std::size_t k = 0; k < c.children.size(); ++k) {
    const auto& ch = c.children[k];
    r.add("child." + std::to_string(k + 1), ch.nu->str() + " " + ch.method + (ch.ok ? " ok" : " FAILED"));
  }
  for (std::size_t k = 0; k < c.leaves.size(); ++k) r.add("leaf." + std::to_string(k + 1), c.leaves[k]);
  if (c.failure) r.add("failure", *c.failure);
  r.flag("reverified", problems.empty());
  r.add("certificate", write_or_inline(o, doc.dump()));
  if (!c.certified || !problems.empty()) r.status = kNegative;
  return r;
}

/// Invariant subspace spanned by orbit sums, pruned to a basis.
inline InvariantBasis orbit_sum_basis(const SymmetryGroup& g) {
  const auto& ctx = pic_context(g.n());
  InvariantBasis b{g, {}, {}};
  std::vector<RatVector> rows;
  for (const auto& [cls, size] : g.boundary_orbits()) {
    DivisorClass o = orbit_sum(g, cls);
    rows.push_back(ctx.normal_form(o));
    RatMatrix m(rows.size(), ctx.dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ctx.dim(); ++j) m(i, j) = rows[i][j];
    if (rref(m).rank < rows.size()) {
      rows.pop_back();
      continue;
    }
    b.names.push_back("o" + cls.str());
    b.classes.push_back(std::move(o));
  }
  return b;
}

inline Report cmd_rays(const Options& o) {
  const int n = require_n(o);
  const auto g = group_for(o, n);
  if (g.is_trivial() && n > 6) throw UsageError("field 'n': rays without symmetry are limited to n <= 6");
  const auto basis = orbit_sum_basis(g);
  std::vector<RatVector> rows;
  for (const auto& f : orbit_forms(basis)) rows.push_back(f.form);
  const auto gens = extreme_rays(rows, basis.classes.size());
  Report r;
  r.headline = std::to_string(gens.rays.size()) + " extremal rays in " + std::to_string(basis.classes.size()) + " coordinates";
  r.add("coordinates", join(basis.names));
  r.add("inequalities", rows.size());
  r.add("lineality", gens.lineality.size());
  r.add("rays", gens.rays.size());
  for (std::size_t k = 0; k < gens.rays.size(); ++k) {
    DivisorClass d(n);
    for (std::size_t j = 0; j < gens.rays[k].size(); ++j) d += gens.rays[k][j] * basis.classes[j];
    r.add("ray." + std::to_string(k + 1), compact(d));
  }
  return r;
}

}  // namespace m0n::cli
