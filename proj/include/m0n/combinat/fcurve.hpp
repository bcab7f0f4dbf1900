#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "m0n/combinat/boundary.hpp"

namespace m0n {

/// Partition of {1..n} into four nonempty blocks, stored ordered by smallest label.
struct FCurve {
  int n = 0;
  std::array<Mask, 4> blocks{};

  FCurve() = default;
  FCurve(int n_, std::array<Mask, 4> b) : n(n_), blocks(b) {
    check_n(n);
    Mask seen = 0;
    for (Mask m : blocks) {
      if (m == 0) throw DomainError("F-curve block is empty");
      if (seen & m) throw DomainError("F-curve blocks overlap");
      seen |= m;
    }
    if (seen != full_mask(n)) throw DomainError("F-curve blocks do not cover {1..n}");
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return lowest_label(a) < lowest_label(b); });
  }
  FCurve(int n_, const std::vector<std::vector<int>>& b) : FCurve(n_, from_lists(b)) {}

  int singleton_blocks() const {
    int c = 0;
    for (Mask m : blocks) c += popcount(m) == 1;
    return c;
  }
  std::array<int, 4> shape() const {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = popcount(blocks[i]);
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }
  bool operator==(const FCurve& o) const { return n == o.n && blocks == o.blocks; }
  bool operator<(const FCurve& o) const { return n != o.n ? n < o.n : blocks < o.blocks; }
  std::string str() const {
    std::string s = "F(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + subset_string(blocks[i]);
    return s + ")";
  }

 private:
  static std::array<Mask, 4> from_lists(const std::vector<std::vector<int>>& b) {
    if (b.size() != 4) throw DomainError("an F-curve needs exactly 4 blocks");
    std::array<Mask, 4> out{};
    for (int i = 0; i < 4; ++i) {
      out[i] = mask_of(b[i]);
      if (popcount(out[i]) != static_cast<int>(b[i].size())) throw DomainError("repeated label in F-curve block");
    }
    return out;
  }
};

/// All partitions of {1..n} into 4 blocks, via restricted growth strings.
inline std::vector<FCurve> fcurves(int n) {
  check_n(n);
  std::vector<FCurve> out;
  std::array<Mask, 4> blocks{};
  int used = 0;
  auto rec = [&](auto&& self, int label) -> void {
    if (4 - used > n - label + 1) return;
    if (label > n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (int b = 0; b < used; ++b) {
      blocks[b] |= label_bit(label);
      self(self, label + 1);
      blocks[b] &= ~label_bit(label);
    }
    if (used < 4) {
      blocks[used++] = label_bit(label);
      self(self, label + 1);
      blocks[--used] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace m0n
