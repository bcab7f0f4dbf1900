#pragma once

#include <json.hpp>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "m0n/intersect/fnef.hpp"
#include "m0n/picard/io.hpp"
#include "m0n/symscan/m62.hpp"
#include "m0n/symscan/membership.hpp"

namespace m0n {

/// A restriction orbit representative and the Young subgroup it induces on positions.
struct RestrictionOrbit {
  BoundaryRestriction nu;
  SymmetryGroup induced;
};

namespace detail {

/// Multisets of k nonzero count vectors (one entry per cell) summing to the cell sizes.
inline std::vector<std::vector<std::vector<int>>> count_multisets(const SymmetryGroup& g, int k) {
  std::vector<int> sizes;
  for (Mask c : g.cells()) sizes.push_back(popcount(c));
  std::vector<std::vector<int>> vectors;
  std::vector<int> v(sizes.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == sizes[i]) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
    vectors.push_back(v);
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rem = sizes;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      if (std::all_of(rem.begin(), rem.end(), [](int r) { return r == 0; })) {
        std::vector<std::vector<int>> rows;
        for (auto p : pick) rows.push_back(vectors[p]);
        out.push_back(std::move(rows));
      }
      return;
    }
    for (std::size_t i = from; i < vectors.size(); ++i) {
      bool fits = true;
      for (std::size_t c = 0; c < rem.size() && fits; ++c) fits = vectors[i][c] <= rem[c];
      if (!fits) continue;
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= vectors[i][c];
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] += vectors[i][c];
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// One representative per group orbit of restrictions M_{0,k} -> M_{0,n}.
/// Positions with equal count vectors form runs; longer runs come first.
inline std::vector<RestrictionOrbit> restriction_orbits(const SymmetryGroup& g, int k) {
  const int n = g.n();
  if (k < 4 || k > n) throw DomainError("restriction orbits need 4 <= k <= n");
  std::vector<RestrictionOrbit> out;
  for (auto rows : detail::count_multisets(g, k)) {
    std::map<std::vector<int>, int> runs;
    for (const auto& r : rows) ++runs[r];
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
      if (runs[a] != runs[b]) return runs[a] > runs[b];
      return a > b;
    });
    std::vector<Mask> blocks(rows.size(), 0);
    for (std::size_t c = 0; c < g.cells().size(); ++c) {
      const auto labels = labels_of(g.cells()[c]);
      std::size_t next = 0;
      for (std::size_t p = 0; p < rows.size(); ++p)
        for (int t = 0; t < rows[p][c]; ++t) blocks[p] |= label_bit(labels[next++]);
    }
    std::vector<Mask> cells;
    for (std::size_t p = 0; p < rows.size();) {
      std::size_t q = p;
      Mask cell = 0;
      while (q < rows.size() && rows[q] == rows[p]) cell |= label_bit(static_cast<int>(++q));
      cells.push_back(cell);
      p = q;
    }
    out.push_back({restriction(n, std::move(blocks)), SymmetryGroup(k, std::move(cells))});
  }
  return out;
}

struct CertNode {
  int k = 0;
  std::optional<BoundaryRestriction> nu;  // empty at the root
  SymmetryGroup group;
  DivisorClass divisor;
  std::string method;  // "m62", "onepoint", "lp", "b-coordinates"
  bool ok = false;
  std::string note;
  std::optional<BoundaryCombination> decomposition;
  std::vector<std::pair<std::string, Rational>> multipliers;  // basis element -> coefficient
  std::optional<SeparationCertificate> separator;
  std::optional<SymClass> b_coordinates;  // n > 10 only
};

struct NefCertificate {
  CertNode root;
  std::vector<CertNode> children;
  std::vector<std::string> leaves;  // external facts the tree stops at
  bool certified = false;
  std::optional<std::string> failure;
};

namespace detail {

inline bool same_group(const SymmetryGroup& a, const SymmetryGroup& b) { return a.n() == b.n() && a.cells() == b.cells(); }

inline CertNode certify_node(const DivisorClass& e, const SymmetryGroup& g, std::optional<BoundaryRestriction> nu) {
  CertNode node;
  node.k = e.n();
  node.nu = std::move(nu);
  node.group = g;
  node.divisor = e;
  const int k = e.n();
  if (k == 8 && same_group(g, SymmetryGroup::sym(8, 6))) {
    node.method = "m62";
    const auto r = m62_decompose(e);
    node.decomposition = r.combination;
    node.multipliers = r.coefficients;
    node.ok = r.effective();
    node.note = "branch " + std::to_string(r.branch) + (r.falsified ? "; " + *r.falsified : "");
    return node;
  }
  if (k >= 5 && same_group(g, SymmetryGroup::sym(k, k - 1))) {
    node.method = "onepoint";
    const auto r = onepoint_decompose(e);
    node.decomposition = r.combination;
    const auto names = onepoint_basis(k).names;
    for (std::size_t j = 0; j < r.coords.size(); ++j) node.multipliers.emplace_back(names[j], r.coords[j]);
    node.ok = r.effective();
    node.note = r.falsified.value_or("");
    return node;
  }
  node.method = "lp";
  const auto m = effective_membership(e, g);
  node.ok = m.member;
  if (m.decomposition) node.decomposition = m.decomposition->combination;
  for (const auto& [b, c] : m.orbit_coefficients) node.multipliers.emplace_back("orbit" + b.str(), c);
  node.separator = m.separator;
  if (!m.member) node.note = "membership LP infeasible; this does not show that the class fails to be nef";
  return node;
}

inline std::vector<std::string> small_leaves(int below) {
  std::vector<std::string> out;
  for (int k = 4; k <= std::min(7, below); ++k)
    out.push_back("M_{0," + std::to_string(k) + "}: F-curves generate the cone of curves (external fact)");
  return out;
}

}  // namespace detail

/// Certificate tree for nefness of an F-nef invariant class: effective
/// boundary expressions at the root and at every restriction with 8 <= k < n.
/// For n > 10 (full group) the root records the hypotheses of the
/// K + Delta_E contraction argument instead, which itself is cited.
inline NefCertificate certify_nef(const DivisorClass& d, const SymmetryGroup& g) {
  const int n = d.n();
  const auto nef = fnef(d, g);
  if (!nef.nef) throw PreconditionError("class is not F-nef: " + nef.witness->str() + " pairs to " + to_string(nef.value));
  NefCertificate cert;
  if (n > kMaxContextN) {
    if (g.cells().size() != 1) throw DomainError("certify_nef beyond n = 10 needs the full symmetric group");
    CertNode& root = cert.root;
    root.k = n;
    root.group = g;
    root.divisor = d;
    root.method = "b-coordinates";
    const SymClass delta_e = sym_coords(d, true);
    root.b_coordinates = delta_e;
    const auto m = effective_membership(d, g);
    root.separator = m.separator;
    const SymClass b = sym_coords(d);
    for (int j = 2; 2 * j <= n; ++j) root.multipliers.emplace_back("B" + std::to_string(j), b.at(j));
    bool in_box = true, on_face = false;
    for (const auto& r : delta_e.r) {
      if (sgn(r) < 0 || r > 1) in_box = false;
      if (sgn(r) == 0) on_face = true;
    }
    root.ok = m.member && in_box && on_face;
    root.note = std::string("K + Delta_E with ") + (in_box ? "0 <= r <= 1" : "r outside [0,1]") +
                (on_face ? ", some r_i = 0" : ", no r_i = 0");
    cert.leaves.push_back("contraction argument for K + Delta_E with 0 <= Delta_E <= Delta (external theorem)");
    cert.leaves.push_back("nontrivial nef classes on the symmetric quotient are big (external fact)");
  } else {
    cert.root = detail::certify_node(d, g, std::nullopt);
    for (int k = 8; k < n; ++k)
      for (const auto& o : restriction_orbits(g, k))
        cert.children.push_back(detail::certify_node(pullback(d, o.nu), o.induced, o.nu));
    cert.leaves = detail::small_leaves(n - 1);
  }
  cert.certified = cert.root.ok;
  if (!cert.root.ok) cert.failure = "root: " + cert.root.note;
  for (const auto& c : cert.children)
    if (!c.ok) {
      cert.certified = false;
      if (!cert.failure) cert.failure = "restriction " + c.nu->str() + ": " + c.note;
    }
  return cert;
}

// ---- serialization ---------------------------------------------------------

inline nlohmann::ordered_json group_to_json(const SymmetryGroup& g) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (Mask c : g.cells()) cells.push_back(labels_of(c));
  return cells;
}

inline SymmetryGroup group_from_json(int n, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("field 'group' must be a list of cells");
  std::vector<Mask> cells;
  for (const auto& c : j) {
    if (!c.is_array()) throw ParseError("field 'group' must be a list of label lists");
    cells.push_back(mask_of(c.get<std::vector<int>>()));
  }
  try {
    return SymmetryGroup(n, cells);
  } catch (const DomainError& e) {
    throw ParseError(std::string("field 'group': ") + e.what());
  }
}

inline nlohmann::ordered_json node_to_json(const CertNode& node) {
  nlohmann::ordered_json j;
  j["k"] = node.k;
  if (node.nu) {
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (Mask b : node.nu->blocks) blocks.push_back(labels_of(b));
    j["restriction"] = blocks;
  } else {
    j["restriction"] = nullptr;
  }
  j["group"] = group_to_json(node.group);
  j["divisor"] = divisor_to_json(node.divisor);
  j["method"] = node.method;
  j["status"] = node.ok ? "ok" : "failed";
  j["note"] = node.note;
  nlohmann::ordered_json mult = nlohmann::ordered_json::array();
  for (const auto& [name, c] : node.multipliers) mult.push_back({{"basis", name}, {"coefficient", to_string(c)}});
  j["multipliers"] = mult;
  if (node.decomposition) {
    nlohmann::ordered_json dec = nlohmann::ordered_json::object();
    for (const auto& [b, c] : node.decomposition->coeffs) dec[subset_string(b.rep)] = to_string(c);
    j["decomposition"] = dec;
  }
  if (node.b_coordinates) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& x : node.b_coordinates->r) r.push_back(to_string(x));
    j["delta_e"] = r;
  }
  if (node.separator) {
    nlohmann::ordered_json y = nlohmann::ordered_json::array();
    for (const auto& x : node.separator->y) y.push_back(to_string(x));
    j["separator"] = {{"y", y}, {"value", to_string(node.separator->value)}};
  }
  return j;
}

inline nlohmann::ordered_json certificate_to_json(const NefCertificate& c) {
  nlohmann::ordered_json j;
  j["format"] = "m0n-nef-certificate v1";
  j["n"] = c.root.k;
  j["certified"] = c.certified;
  if (c.failure) j["failure"] = *c.failure;
  j["root"] = node_to_json(c.root);
  nlohmann::ordered_json kids = nlohmann::ordered_json::array();
  for (const auto& k : c.children) kids.push_back(node_to_json(k));
  j["children"] = kids;
  j["leaves"] = c.leaves;
  return j;
}

// ---- independent verification ---------------------------------------------

namespace detail {

/// Orbit key of a set partition: the sorted list of per-cell counts of its blocks.
inline std::vector<std::vector<int>> partition_key(const SymmetryGroup& g, const std::vector<Mask>& blocks) {
  std::vector<std::vector<int>> key;
  for (Mask b : blocks) key.push_back(g.counts(b));
  std::sort(key.begin(), key.end());
  return key;
}

/// Every set partition of {1..n} into k blocks, by restricted growth strings.
inline void for_each_partition(int n, int k, const std::function<void(const std::vector<Mask>&)>& visit) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (n - i < k - used) return;
    if (i == n) {
      if (used != k) return;
      std::vector<Mask> blocks(static_cast<std::size_t>(k), 0);
      for (int l = 0; l < n; ++l) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(l)])] |= label_bit(l + 1);
      visit(blocks);
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
}

inline Rational json_rational(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string()) throw ParseError("field '" + field + "' must be a rational string");
  return parse_rational(v.get<std::string>());
}

inline void verify_node(const nlohmann::json& j, const DivisorClass& expected, std::vector<std::string>& problems,
                        const std::string& where) {
  const int k = expected.n();
  const DivisorClass e = divisor_from_json(j.at("divisor"));
  if (e.n() != k) {
    problems.push_back(where + ": divisor lives on n = " + std::to_string(e.n()));
    return;
  }
  if (k <= kMaxContextN) {
    const auto& ctx = pic_context(k);
    if (!ctx.equivalent(e, expected)) problems.push_back(where + ": divisor is not the pullback of the root class");
    if (j.at("status") != "ok") {
      problems.push_back(where + ": node reports failure");
      return;
    }
    if (!j.contains("decomposition")) {
      problems.push_back(where + ": no decomposition");
      return;
    }
    DivisorClass sum(k);
    for (const auto& [set, v] : j.at("decomposition").items()) {
      const Rational c = json_rational(v, "decomposition." + set);
      if (sgn(c) < 0) problems.push_back(where + ": negative coefficient on delta" + set);
      sum.add_delta(parse_subset(set), c);
    }
    if (!ctx.equivalent(sum, e)) problems.push_back(where + ": decomposition is not equivalent to the divisor");
    return;
  }
  // Beyond the context range: B-coordinates of the formally symmetric class.
  if (!(e == expected)) problems.push_back(where + ": divisor differs from the root class");
  if (j.at("status") != "ok") {
    problems.push_back(where + ": node reports failure");
    return;
  }
  const SymClass b = sym_coords(e), de = sym_coords(e, true);
  for (const auto& x : b.r)
    if (sgn(x) < 0) problems.push_back(where + ": negative B-coordinate");
  const auto& listed = j.at("delta_e");
  if (listed.size() != de.r.size()) {
    problems.push_back(where + ": delta_e has the wrong length");
    return;
  }
  bool zero = false;
  for (std::size_t i = 0; i < de.r.size(); ++i) {
    const Rational r = json_rational(listed[i], "delta_e");
    if (r != de.r[i]) problems.push_back(where + ": delta_e entry " + std::to_string(i + 2) + " is wrong");
    if (sgn(r) < 0 || r > 1) problems.push_back(where + ": delta_e entry " + std::to_string(i + 2) + " outside [0,1]");
    if (sgn(r) == 0) zero = true;
  }
  if (!zero) problems.push_back(where + ": no delta_e entry vanishes");
  for (const auto& q : sym_fineqs(k))
    if (sgn(q.evaluate(de.r)) < 0) problems.push_back(where + ": F-inequality " + shape_string(q.shape) + " fails");
}

}  // namespace detail

/// Re-checks a certificate document from scratch; returns the problems found.
inline std::vector<std::string> verify_certificate(const nlohmann::json& doc) {
  std::vector<std::string> problems;
  try {
    if (doc.at("format") != "m0n-nef-certificate v1") return {"unknown certificate format"};
    const int n = doc.at("n").get<int>();
    const auto& root = doc.at("root");
    const DivisorClass d = divisor_from_json(root.at("divisor"));
    if (d.n() != n) return {"root divisor lives on the wrong n"};
    const SymmetryGroup g = group_from_json(n, root.at("group"));
    if (!root.at("restriction").is_null()) problems.push_back("root carries a restriction");
    detail::verify_node(root, d, problems, "root");

    std::map<int, std::multiset<std::vector<std::vector<int>>>> seen;
    for (const auto& child : doc.at("children")) {
      std::vector<Mask> blocks;
      for (const auto& b : child.at("restriction")) blocks.push_back(mask_of(b.get<std::vector<int>>()));
      const auto nu = restriction(n, blocks);
      const std::string where = "restriction " + nu.str();
      if (child.at("k").get<int>() != nu.m()) problems.push_back(where + ": k does not match the block count");
      if (nu.m() < 8 || nu.m() >= n) problems.push_back(where + ": k outside 8..n-1");
      seen[nu.m()].insert(detail::partition_key(g, blocks));
      detail::verify_node(child, pullback(d, nu), problems, where);
    }
    if (n <= kMaxContextN)
      for (int k = 8; k < n; ++k) {
        std::set<std::vector<std::vector<int>>> all;
        detail::for_each_partition(n, k, [&](const std::vector<Mask>& b) { all.insert(detail::partition_key(g, b)); });
        const auto& got = seen[k];
        for (const auto& key : all)
          if (got.count(key) != 1)
            problems.push_back("k = " + std::to_string(k) + ": an orbit of restrictions is covered " +
                               std::to_string(got.count(key)) + " times");
        if (got.size() != all.size()) problems.push_back("k = " + std::to_string(k) + ": extra children");
      }
    else if (!doc.at("children").empty())
      problems.push_back("children beyond the context range cannot be checked");
    const bool claimed = doc.at("certified").get<bool>();
    if (claimed != problems.empty())
      problems.push_back(claimed ? "certificate claims success" : "certificate claims failure but every check passed");
  } catch (const std::exception& e) {
    problems.push_back(std::string("malformed certificate: ") + e.what());
  }
  return problems;
}

inline std::vector<std::string> verify_certificate_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return {std::string("certificate is not valid JSON: ") + e.what()};
  }
  return verify_certificate(doc);
}

}  // namespace m0n
