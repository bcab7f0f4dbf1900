#pragma once

#include <map>
#include <string>

#include "m0n/combinat/boundary.hpp"
#include "m0n/exactla/rational.hpp"

namespace m0n {

/// A generator of Pic(M_{0,n}) before relations: psi_i or delta_S (S canonical).
struct Symbol {
  bool is_psi = true;
  int label = 0;  // psi only
  Mask rep = 0;   // delta only

  static Symbol psi(int i) { return {true, i, 0}; }
  static Symbol delta(const BoundaryClass& b) { return {false, 0, b.rep}; }

  bool operator==(const Symbol& o) const { return is_psi == o.is_psi && label == o.label && rep == o.rep; }
  bool operator<(const Symbol& o) const {
    if (is_psi != o.is_psi) return is_psi;
    if (is_psi) return label < o.label;
    return subset_less(rep, o.rep);
  }
  std::string str() const { return is_psi ? "psi" + std::to_string(label) : "delta" + subset_string(rep); }
};

/// Formal rational combination of symbols on a fixed n; zero coefficients are dropped.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(int n) : n_(n) { check_n(n); }

  int n() const { return n_; }
  const std::map<Symbol, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  DivisorClass& add_psi(int i, const Rational& c) {
    if (i < 1 || i > n_) throw DomainError("psi index " + std::to_string(i) + " out of range for n = " + std::to_string(n_));
    return add(Symbol::psi(i), c);
  }
  DivisorClass& add_delta(Mask s, const Rational& c) { return add(Symbol::delta(BoundaryClass(n_, s)), c); }
  DivisorClass& add_delta(const BoundaryClass& b, const Rational& c) {
    if (b.n != n_) throw DomainError("boundary class on the wrong n");
    return add(Symbol::delta(b), c);
  }
  DivisorClass& add(const Symbol& s, const Rational& c) {
    if (sgn(c) == 0) return *this;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
    return *this;
  }

  Rational coefficient(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational psi(int i) const { return coefficient(Symbol::psi(i)); }
  Rational delta(Mask s) const { return coefficient(Symbol::delta(BoundaryClass(n_, s))); }

  DivisorClass& operator+=(const DivisorClass& o) {
    same_n(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    same_n(o);
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  DivisorClass& operator*=(const Rational& f) {
    if (sgn(f) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= f;
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& f, DivisorClass a) { return a *= f; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  bool operator==(const DivisorClass& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [sym, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += to_string(c) + "*" + sym.str();
    }
    return s;
  }

 private:
  void same_n(const DivisorClass& o) const {
    if (o.n_ != n_) throw DomainError("divisor classes on different n");
  }

  int n_ = 0;
  std::map<Symbol, Rational> terms_;
};

}  // namespace m0n
