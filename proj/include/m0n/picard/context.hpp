#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "m0n/exactla/matrix.hpp"
#include "m0n/picard/relations.hpp"

namespace m0n {

inline constexpr int kMinContextN = 4;
inline constexpr int kMaxContextN = 10;

inline long long picard_dimension_formula(int n) {
  return (1LL << (n - 1)) - binomial(n, 2) - 1;
}

/// Pic(M_{0,n}) over Q: symbols, relations, and coordinates in the basis
/// {psi_i} u {delta_S : |S|, |S^c| >= 3} (for n = 4, the class delta_[1,2]).
class PicContext {
 public:
  explicit PicContext(int n) : n_(n) {
    if (n < kMinContextN || n > kMaxContextN)
      throw DomainError("Picard context supports 4 <= n <= 10, got " + std::to_string(n));
    classes_ = boundary_classes(n);
    side_index_.assign(std::size_t{1} << n, -1);
    for (int i = 1; i <= n; ++i) symbols_.push_back(Symbol::psi(i));
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      symbols_.push_back(Symbol::delta(classes_[k]));
      side_index_[classes_[k].rep] = static_cast<int>(n + k);
      side_index_[classes_[k].complement()] = static_cast<int>(n + k);
    }
    for (std::size_t s = 0; s < symbols_.size(); ++s) {
      bool in_basis = n == 4 ? s == static_cast<std::size_t>(n)
                             : symbols_[s].is_psi || (popcount(symbols_[s].rep) >= 3 && n - popcount(symbols_[s].rep) >= 3);
      (in_basis ? basis_idx_ : nonbasis_idx_).push_back(s);
    }
    for (auto s : basis_idx_) basis_.push_back(symbols_[s]);
  }

  int n() const { return n_; }
  std::size_t dim() const { return basis_idx_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<Symbol>& basis() const { return basis_; }
  const std::vector<BoundaryClass>& classes() const { return classes_; }
  std::size_t rank_of_relations() const { return rank_; }

  std::size_t symbol_index(const Symbol& s) const {
    if (s.is_psi) {
      if (s.label < 1 || s.label > n_) throw DomainError("psi index out of range");
      return static_cast<std::size_t>(s.label - 1);
    }
    if (s.rep >= side_index_.size() || side_index_[s.rep] < 0) throw DomainError("unknown boundary symbol " + s.str());
    return static_cast<std::size_t>(side_index_[s.rep]);
  }

  /// Coordinates of a single symbol.
  const RatVector& form(const Symbol& s) const { return forms_[symbol_index(s)]; }

  RatVector normal_form(const DivisorClass& d) const {
    if (d.n() != n_) throw DomainError("divisor on n = " + std::to_string(d.n()) + " given to context n = " + std::to_string(n_));
    RatVector v(dim(), Rational(0));
    for (const auto& [s, c] : d.terms()) axpy(v, c, form(s));
    return v;
  }

  bool equivalent(const DivisorClass& a, const DivisorClass& b) const { return is_zero(normal_form(a - b)); }

  DivisorClass from_coords(const RatVector& v) const {
    if (v.size() != dim()) throw ShapeError("coordinate vector has wrong length");
    DivisorClass d(n_);
    for (std::size_t k = 0; k < v.size(); ++k) d.add(basis_[k], v[k]);
    return d;
  }

  std::vector<DivisorClass> relations() const {
    auto r = keel_relations(n_);
    auto p = psi_relations(n_);
    r.insert(r.end(), p.begin(), p.end());
    return r;
  }

  /// Row-reduces the relation matrix with the non-basis columns first; the
  /// pivots must be exactly those columns, which proves the basis claim.
  void compute() {
    const auto rels = relations();
    const std::size_t cols = symbols_.size();
    std::vector<std::size_t> column_of(cols);
    for (std::size_t k = 0; k < nonbasis_idx_.size(); ++k) column_of[nonbasis_idx_[k]] = k;
    for (std::size_t k = 0; k < basis_idx_.size(); ++k) column_of[basis_idx_[k]] = nonbasis_idx_.size() + k;
    RatMatrix m(rels.size(), cols);
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& [s, c] : rels[r].terms()) m(r, column_of[symbol_index(s)]) = c;
    RrefResult red = rref(std::move(m));
    rank_ = red.rank;
    const std::size_t nb = nonbasis_idx_.size();
    bool ok = red.rank == nb;
    for (std::size_t k = 0; ok && k < nb; ++k) ok = red.basis_columns[k] == k;
    if (!ok) throw InternalError("declared Picard basis is not a basis for n = " + std::to_string(n_));
    forms_.assign(cols, RatVector(dim(), Rational(0)));
    for (std::size_t k = 0; k < basis_idx_.size(); ++k) forms_[basis_idx_[k]][k] = 1;
    for (std::size_t k = 0; k < nb; ++k) {
      RatVector& f = forms_[nonbasis_idx_[k]];
      for (std::size_t j = 0; j < dim(); ++j) f[j] = -red.reduced(k, nb + j);
    }
  }

  /// Serialized non-basis forms (basis forms are unit vectors).
  std::string serialize_body() const {
    std::ostringstream os;
    for (auto s : nonbasis_idx_) {
      os << symbols_[s].str();
      for (std::size_t j = 0; j < dim(); ++j)
        if (sgn(forms_[s][j]) != 0) os << ' ' << j << ':' << forms_[s][j].get_str();
      os << '\n';
    }
    return os.str();
  }

  /// Loads forms from a cache body and re-verifies every relation; false on any mismatch.
  bool load_body(const std::string& body) {
    std::vector<RatVector> forms(symbols_.size(), RatVector(dim(), Rational(0)));
    for (std::size_t k = 0; k < basis_idx_.size(); ++k) forms[basis_idx_[k]][k] = 1;
    std::istringstream is(body);
    std::string line;
    std::size_t k = 0;
    try {
      while (std::getline(is, line)) {
        if (k >= nonbasis_idx_.size()) return false;
        std::istringstream ls(line);
        std::string name, tok;
        ls >> name;
        if (name != symbols_[nonbasis_idx_[k]].str()) return false;
        RatVector& f = forms[nonbasis_idx_[k]];
        while (ls >> tok) {
          auto colon = tok.find(':');
          if (colon == std::string::npos) return false;
          std::size_t j = std::stoul(tok.substr(0, colon));
          if (j >= dim()) return false;
          f[j] = parse_rational(tok.substr(colon + 1));
        }
        ++k;
      }
    } catch (const std::exception&) {
      return false;
    }
    if (k != nonbasis_idx_.size()) return false;
    forms_ = std::move(forms);
    for (const auto& r : relations())
      if (!is_zero(normal_form(r))) {
        forms_.clear();
        return false;
      }
    rank_ = nonbasis_idx_.size();
    return true;
  }

 private:
  int n_;
  std::vector<BoundaryClass> classes_;
  std::vector<Symbol> symbols_;
  std::vector<Symbol> basis_;
  std::vector<std::size_t> basis_idx_, nonbasis_idx_;
  std::vector<int> side_index_;
  std::vector<RatVector> forms_;
  std::size_t rank_ = 0;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline constexpr const char* kCacheTag = "m0n-pic-cache v1";

/// M0N_CACHE_DIR overrides the location; an empty value disables the disk cache.
inline std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("M0N_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "m0n";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "m0n";
  return {};
}

inline bool try_load_cache(PicContext& ctx, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::string tag, key, checksum;
  int n = 0;
  std::getline(in, tag);
  if (tag != kCacheTag) return false;
  if (!(in >> key >> n) || key != "n" || n != ctx.n()) return false;
  if (!(in >> key >> checksum) || key != "checksum") return false;
  in.ignore(1);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
  if (checksum != buf) return false;
  return ctx.load_body(body);
}

inline void write_cache(const PicContext& ctx, const std::filesystem::path& dir, const std::filesystem::path& file) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const std::string lock_path = (dir / "lock").string();
  int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd < 0) return;
  if (::flock(fd, LOCK_EX) == 0) {
    const std::string body = ctx.serialize_body();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    auto tmp = file;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << kCacheTag << "\nn " << ctx.n() << "\nchecksum " << buf << "\n" << body;
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    ::flock(fd, LOCK_UN);
  }
  ::close(fd);
}

inline std::unique_ptr<PicContext> build_context(int n) {
  auto ctx = std::make_unique<PicContext>(n);
  const auto dir = cache_dir();
  const auto file = dir.empty() ? dir : dir / ("pic-" + std::to_string(n) + ".txt");
  if (!dir.empty() && try_load_cache(*ctx, file)) return ctx;
  ctx->compute();
  if (!dir.empty()) write_cache(*ctx, dir, file);
  return ctx;
}

}  // namespace detail

/// Shared, lazily built context for n in [4, 10].
inline const PicContext& pic_context(int n) {
  if (n < kMinContextN || n > kMaxContextN)
    throw DomainError("Picard context supports 4 <= n <= 10, got " + std::to_string(n));
  static std::array<std::once_flag, kMaxContextN + 1> flags;
  static std::array<std::unique_ptr<PicContext>, kMaxContextN + 1> slots;
  std::call_once(flags[n], [n] { slots[n] = detail::build_context(n); });
  return *slots[n];
}

}  // namespace m0n
