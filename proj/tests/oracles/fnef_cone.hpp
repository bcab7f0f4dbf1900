#pragma once

// Extreme rays of the F-nef cone, cached per process. The inequality rows are
// built from the pairing on basis symbols, so they are independent of any
// decomposition code under test.

#include "m0n/exactla/rays.hpp"
#include "m0n/intersect/pairing.hpp"
#include "m0n/picard/context.hpp"

namespace oracle {

inline std::vector<m0n::RatVector> fnef_rows(int n) {
  const auto& ctx = m0n::pic_context(n);
  std::vector<m0n::RatVector> rows;
  for (const auto& f : m0n::fcurves(n)) {
    m0n::RatVector r(ctx.dim());
    for (std::size_t k = 0; k < ctx.dim(); ++k) r[k] = m0n::dot(m0n::DivisorClass(n).add(ctx.basis()[k], 1), f);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline const std::vector<m0n::DivisorClass>& fnef_rays_six() {
  static const std::vector<m0n::DivisorClass> rays = [] {
    const auto& ctx = m0n::pic_context(6);
    std::vector<m0n::DivisorClass> out;
    for (const auto& r : m0n::extreme_rays(fnef_rows(6), ctx.dim()).rays) out.push_back(ctx.from_coords(r));
    return out;
  }();
  return rays;
}

}  // namespace oracle
