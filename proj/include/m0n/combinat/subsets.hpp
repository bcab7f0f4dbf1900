#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "m0n/errors.hpp"

namespace m0n {

/// Subset of {1..n}; label i lives in bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 30;

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline Mask label_bit(int label) { return Mask{1} << (label - 1); }
inline int popcount(Mask s) { return std::popcount(s); }
inline bool has_label(Mask s, int label) { return (s >> (label - 1)) & 1u; }
inline int lowest_label(Mask s) { return std::countr_zero(s) + 1; }

inline std::vector<int> labels_of(Mask s) {
  std::vector<int> out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<int>& labels) {
  Mask s = 0;
  for (int l : labels) {
    if (l < 1 || l > kMaxPoints) throw DomainError("label " + std::to_string(l) + " out of range");
    s |= label_bit(l);
  }
  return s;
}

/// Lexicographic order on the sorted label lists of two sets of equal size.
inline bool lex_less_same_size(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

/// Order by size, then lexicographically by sorted labels.
inline bool subset_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less_same_size(a, b);
}

/// "[1,2,5]"
inline std::string subset_string(Mask s) {
  std::string out = "[";
  bool first = true;
  for (int l : labels_of(s)) {
    if (!first) out += ',';
    out += std::to_string(l);
    first = false;
  }
  return out + "]";
}

/// Parses "[1,2,5]" (whitespace tolerated). Rejects repeats and empty lists.
inline Mask parse_subset(std::string_view text) {
  auto fail = [&]() { throw ParseError("malformed subset '" + std::string(text) + "'"); };
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') fail();
  ++i;
  Mask s = 0;
  for (;;) {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 3) fail();
    int label = std::stoi(std::string(text.substr(start, i - start)));
    if (label < 1 || label > kMaxPoints || has_label(s, label)) fail();
    s |= label_bit(label);
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    fail();
  }
  skip();
  if (i != text.size()) fail();
  return s;
}

/// All k-subsets of `universe`, in lexicographic order of their label lists.
inline std::vector<Mask> k_subsets(Mask universe, int k) {
  std::vector<int> pool = labels_of(universe);
  std::vector<Mask> out;
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask s = 0;
    for (int i : idx) s |= label_bit(pool[i]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace m0n
