#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "m0n/combinat/fcurve.hpp"
#include "m0n/exactla/rational.hpp"

namespace m0n {

/// Young subgroup of S_n: permutations preserving each cell.
class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  SymmetryGroup(int n, std::vector<Mask> cells) : n_(n), cells_(std::move(cells)) {
    check_n(n);
    Mask seen = 0;
    for (Mask c : cells_) {
      if (c == 0 || (seen & c)) throw DomainError("symmetry cells must be nonempty and disjoint");
      seen |= c;
    }
    if (seen != full_mask(n)) throw DomainError("symmetry cells must cover {1..n}");
    std::sort(cells_.begin(), cells_.end(), [](Mask a, Mask b) { return lowest_label(a) < lowest_label(b); });
  }

  static SymmetryGroup trivial(int n) {
    std::vector<Mask> cells;
    for (int i = 1; i <= n; ++i) cells.push_back(label_bit(i));
    return {n, cells};
  }
  static SymmetryGroup full(int n) { return {n, {full_mask(n)}}; }
  /// S_g on labels 1..g, the remaining labels fixed.
  static SymmetryGroup sym(int n, int g) {
    if (g < 1 || g > n) throw DomainError("sym:g needs 1 <= g <= n");
    std::vector<Mask> cells{full_mask(g)};
    for (int i = g + 1; i <= n; ++i) cells.push_back(label_bit(i));
    return {n, cells};
  }
  /// "full", "none" or "sym:g".
  static SymmetryGroup parse(int n, const std::string& spec) {
    if (spec == "full") return full(n);
    if (spec == "none" || spec == "trivial") return trivial(n);
    if (spec.rfind("sym:", 0) == 0) {
      const std::string g = spec.substr(4);
      if (g.empty() || g.size() > 3 || g.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed group spec '" + spec + "'");
      return sym(n, std::stoi(g));
    }
    throw ParseError("unknown group spec '" + spec + "'");
  }

  int n() const { return n_; }
  const std::vector<Mask>& cells() const { return cells_; }
  bool is_trivial() const { return static_cast<int>(cells_.size()) == n_; }

  std::string name() const {
    if (is_trivial()) return "none";
    if (cells_.size() == 1) return "full";
    std::string s;
    for (Mask c : cells_)
      if (popcount(c) > 1) s += (s.empty() ? "" : "x") + std::string("S") + subset_string(c);
    return s;
  }

  /// Adjacent transpositions inside each cell; they generate the group.
  std::vector<std::pair<int, int>> generators() const {
    std::vector<std::pair<int, int>> out;
    for (Mask c : cells_) {
      auto l = labels_of(c);
      for (std::size_t i = 1; i < l.size(); ++i) out.emplace_back(l[i - 1], l[i]);
    }
    return out;
  }

  static Mask swap_labels(Mask s, int a, int b) {
    bool ha = has_label(s, a), hb = has_label(s, b);
    if (ha == hb) return s;
    return s ^ label_bit(a) ^ label_bit(b);
  }

  /// Orbit representative of one side: the smallest labels of each cell.
  Mask pack(Mask s) const {
    Mask out = 0;
    for (Mask c : cells_) {
      int k = popcount(s & c);
      for (int l : labels_of(c)) {
        if (k-- <= 0) break;
        out |= label_bit(l);
      }
    }
    return out;
  }

  BoundaryClass canonical(const BoundaryClass& b) const {
    check_same_n(b.n);
    BoundaryClass x(n_, pack(b.rep)), y(n_, pack(b.complement()));
    return y < x ? y : x;
  }

  FCurve canonical(const FCurve& f) const {
    check_same_n(f.n);
    std::vector<std::vector<int>> rows;
    for (Mask blk : f.blocks) rows.push_back(counts(blk));
    return from_count_rows(std::move(rows));
  }

  /// Number of distinct boundary classes in the orbit of b.
  Integer orbit_size(const BoundaryClass& b) const {
    Integer sides = 1;
    for (Mask c : cells_) sides *= binomial_z(popcount(c), popcount(b.rep & c));
    bool self_paired = counts(b.rep) == counts(b.complement());
    if (self_paired) mpz_divexact_ui(sides.get_mpz_t(), sides.get_mpz_t(), 2);
    return sides;
  }

  Integer orbit_size(const FCurve& f) const {
    std::vector<std::vector<int>> rows;
    for (Mask blk : f.blocks) rows.push_back(counts(blk));
    return count_rows_orbit_size(rows);
  }

  std::vector<int> counts(Mask s) const {
    std::vector<int> v;
    for (Mask c : cells_) v.push_back(popcount(s & c));
    return v;
  }

  /// One representative per orbit of F-curves with its orbit size, without
  /// listing all F-curves; suitable for large symmetric groups.
  std::vector<std::pair<FCurve, Integer>> fcurve_orbits() const {
    std::vector<std::vector<int>> vectors;
    std::vector<int> sizes;
    for (Mask c : cells_) sizes.push_back(popcount(c));
    {
      std::vector<int> v(sizes.size(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == sizes[i]) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
        vectors.push_back(v);
      }
    }
    std::vector<std::pair<FCurve, Integer>> out;
    std::vector<int> rem = sizes;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (pick.size() == 4) {
        if (std::any_of(rem.begin(), rem.end(), [](int r) { return r != 0; })) return;
        std::vector<std::vector<int>> rows;
        for (auto p : pick) rows.push_back(vectors[p]);
        Integer sz = count_rows_orbit_size(rows);
        out.emplace_back(from_count_rows(std::move(rows)), sz);
        return;
      }
      for (std::size_t i = from; i < vectors.size(); ++i) {
        const auto& v = vectors[i];
        bool fits = true;
        for (std::size_t k = 0; k < v.size() && fits; ++k) fits = v[k] <= rem[k];
        if (!fits) continue;
        for (std::size_t k = 0; k < v.size(); ++k) rem[k] -= v[k];
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
        for (std::size_t k = 0; k < v.size(); ++k) rem[k] += v[k];
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  std::vector<std::pair<BoundaryClass, Integer>> boundary_orbits() const {
    std::set<BoundaryClass> reps;
    for (const auto& b : boundary_classes(n_)) reps.insert(canonical(b));
    std::vector<std::pair<BoundaryClass, Integer>> out;
    for (const auto& b : reps) out.emplace_back(b, orbit_size(b));
    return out;
  }

 private:
  void check_same_n(int n) const {
    if (n != n_) throw DomainError("object on n = " + std::to_string(n) + " but group acts on n = " + std::to_string(n_));
  }

  static Integer binomial_z(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }

  FCurve from_count_rows(std::vector<std::vector<int>> rows) const {
    std::sort(rows.begin(), rows.end(), std::greater<>());
    std::array<Mask, 4> blocks{};
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      auto l = labels_of(cells_[c]);
      std::size_t next = 0;
      for (int b = 0; b < 4; ++b)
        for (int k = 0; k < rows[b][c]; ++k) blocks[b] |= label_bit(l[next++]);
    }
    return FCurve(n_, blocks);
  }

  Integer count_rows_orbit_size(std::vector<std::vector<int>> rows) const {
    Integer total = 1;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      int left = popcount(cells_[c]);
      for (const auto& r : rows) {
        total *= binomial_z(left, r[c]);
        left -= r[c];
      }
    }
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      for (std::size_t f = 2; f <= j - i; ++f) mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), f);
      i = j;
    }
    return total;
  }

  int n_ = 0;
  std::vector<Mask> cells_;
};

/// Groups objects by orbit; returns (canonical representative, multiplicity in input).
template <class T>
std::vector<std::pair<T, Integer>> orbits(const std::vector<T>& objects, const SymmetryGroup& g) {
  std::map<T, Integer> acc;
  for (const auto& o : objects) acc[g.canonical(o)] += 1;
  return {acc.begin(), acc.end()};
}

}  // namespace m0n
