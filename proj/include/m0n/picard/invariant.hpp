#pragma once

#include <string>
#include <vector>

#include "m0n/combinat/symmetry.hpp"
#include "m0n/picard/named.hpp"

namespace m0n {

/// Orbit sums spanning the invariant part of Pic under `group`.
struct InvariantBasis {
  SymmetryGroup group;
  std::vector<std::string> names;
  std::vector<DivisorClass> classes;
};

struct InvariantCoords {
  InvariantBasis basis;
  RatVector coords;

  DivisorClass expand() const {
    DivisorClass d(basis.group.n());
    for (std::size_t k = 0; k < coords.size(); ++k) d += coords[k] * basis.classes[k];
    return d;
  }
};

/// Sum of the classes in the orbit of b, each class once.
inline DivisorClass orbit_sum(const SymmetryGroup& g, const BoundaryClass& b) {
  const BoundaryClass rep = g.canonical(b);
  DivisorClass d(g.n());
  for (const auto& c : boundary_classes(g.n()))
    if (g.canonical(c) == rep) d.add_delta(c, 1);
  return d;
}

/// Throws InvarianceError naming a generator that moves the class of d.
inline void require_invariant(const PicContext& ctx, const DivisorClass& d, const SymmetryGroup& g) {
  if (g.n() != ctx.n()) throw DomainError("group and context disagree on n");
  const RatVector base = ctx.normal_form(d);
  for (auto [a, b] : g.generators())
    if (ctx.normal_form(transpose_labels(d, a, b)) != base) {
      const std::string element = "(" + std::to_string(a) + " " + std::to_string(b) + ")";
      throw InvarianceError("class is not invariant under " + g.name() + ": moved by " + element, element);
    }
}

/// {delta^{x,1}_j : j = 1..n-3} for x = n and S_{n-1} permuting 1..n-1.
inline InvariantBasis onepoint_basis(int n) {
  InvariantBasis basis{SymmetryGroup::sym(n, n - 1), {}, {}};
  for (int j = 1; j <= n - 3; ++j) {
    basis.names.push_back("x" + std::to_string(j));
    basis.classes.push_back(class_sum(n, label_bit(n), 1, j));
  }
  return basis;
}

namespace m62 {

inline constexpr int kX = 7;
inline constexpr int kY = 8;
inline constexpr Mask kSix = 0x3f;  // labels 1..6

/// Orbit sum of delta_{T u U} with T in {x, y} fixed and |U| = k inside 1..6.
inline DivisorClass slice(Mask fixed, int k) {
  DivisorClass d(8);
  std::set<BoundaryClass> seen;
  for (Mask u : k_subsets(kSix, k)) seen.insert(BoundaryClass(8, fixed | u));
  for (const auto& c : seen) d.add_delta(c, 1);
  return d;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> v{"x1", "y1", "x2", "y2", "x3", "xy1", "xy2", "2", "3"};
  return v;
}

inline DivisorClass named(const std::string& name) {
  const Mask x = label_bit(kX), y = label_bit(kY);
  if (name == "x1") return slice(x, 1);
  if (name == "y1") return slice(y, 1);
  if (name == "x2") return slice(x, 2);
  if (name == "y2") return slice(y, 2);
  if (name == "x3") return slice(x, 3);
  if (name == "xy1") return slice(x | y, 1);
  if (name == "xy2") return slice(x | y, 2);
  if (name == "2") return slice(0, 2);
  if (name == "3") return slice(0, 3);
  if (name == "xy") return slice(x | y, 0);
  throw DomainError("unknown invariant class '" + name + "'");
}

}  // namespace m62

/// Nine orbit sums on M_{0,8} invariant under S_6 on 1..6 (x = 7, y = 8);
/// delta_xy is the tenth invariant class and is expressed through these.
inline InvariantBasis m62_basis() {
  InvariantBasis basis{SymmetryGroup::sym(8, 6), {}, {}};
  for (const auto& name : m62::names()) {
    basis.names.push_back(name);
    basis.classes.push_back(m62::named(name));
  }
  return basis;
}

/// Coordinates of an invariant class in an independent orbit-sum basis.
inline InvariantCoords invariant_coords(const PicContext& ctx, const DivisorClass& d, const InvariantBasis& basis) {
  require_invariant(ctx, d, basis.group);
  RatMatrix a(ctx.dim(), basis.classes.size());
  for (std::size_t k = 0; k < basis.classes.size(); ++k) {
    RatVector f = ctx.normal_form(basis.classes[k]);
    for (std::size_t r = 0; r < f.size(); ++r) a(r, k) = f[r];
  }
  LinearSolution sol = solve_linear(a, ctx.normal_form(d));
  if (!sol.kernel.empty()) throw InternalError("invariant basis is not independent");
  if (!sol.consistent) throw InternalError("invariant class outside the span of the invariant basis");
  return {basis, sol.particular};
}

}  // namespace m0n
