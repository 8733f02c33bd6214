#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <utility>

#include "afflag/nilcoxeter.hpp"
#include "afflag/spoly.hpp"
#include "afflag/weight.hpp"

namespace afflag {

/// Element of the nilHecke ring in the A_w basis with polynomial
/// coefficients attached on the left; zero polynomials are never stored.
class NilHeckeElem {
 public:
  explicit NilHeckeElem(int n) : rank_(n) {}
  static NilHeckeElem basis(const AffinePerm& w);
  static NilHeckeElem basis(const AffinePerm& w, const SPoly& c);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  SPoly coeff(const AffinePerm& w) const;
  const std::map<AffinePerm, SPoly>& terms() const& { return terms_; }
  std::map<AffinePerm, SPoly> terms() const&& { return terms_; }

  NilHeckeElem& add(const AffinePerm& w, const SPoly& c);
  NilHeckeElem operator+(const NilHeckeElem&) const;
  NilHeckeElem operator-(const NilHeckeElem&) const;
  /// Left scalar multiplication.
  NilHeckeElem scale(const SPoly& p) const;
  bool operator==(const NilHeckeElem&) const = default;

 private:
  int rank_;
  std::map<AffinePerm, SPoly> terms_;
};

/// Element of A tensor_S A in the A_u (x) A_v basis, scalars attached on the
/// left of the pair.
class TensorElem {
 public:
  explicit TensorElem(int n) : rank_(n) {}
  static TensorElem unit(int n);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  SPoly coeff(const AffinePerm& u, const AffinePerm& v) const;
  const std::map<std::pair<AffinePerm, AffinePerm>, SPoly>& terms() const& { return terms_; }
  std::map<std::pair<AffinePerm, AffinePerm>, SPoly> terms() const&& { return terms_; }

  TensorElem& add(const AffinePerm& u, const AffinePerm& v, const SPoly& c);
  bool operator==(const TensorElem&) const = default;

 private:
  int rank_;
  std::map<std::pair<AffinePerm, AffinePerm>, SPoly> terms_;
};

/// Right multiplication by A_i: A_w goes to A_{w s_i} when the length
/// increases and drops otherwise; left scalars pass through.
NilHeckeElem rmul_a(const NilHeckeElem& x, int i);

/// Right multiplication by a degree-1 scalar, computed by recursion on a
/// reduced word via A_i lambda = (s_i . lambda) A_i + <alpha_i^v, lambda>.
/// The result is independent of the reduced word.
NilHeckeElem rmul_scalar(const NilHeckeElem& x, const Weight& lambda);

/// Right multiplication by the group element s_i = 1 - alpha_i A_i.
NilHeckeElem rmul_s(const NilHeckeElem& x, int i);

/// Coproduct of A_w expanded in the A_u (x) A_v basis, computed by folding
/// Delta(A_i) = A_i (x) 1 + s_i (x) A_i over a reduced word of w, with every
/// s_i factor eagerly expanded back into the A basis.
TensorElem coproduct(const AffinePerm& w);
/// Same, folding over a caller-supplied reduced word of w (must be reduced).
TensorElem coproduct_from_word(const AffinePerm& w, std::span<const int> word);

/// Equivariant structure constant p^w_{u1,u2} by the subset formula: sum
/// over position subsets of a reduced word of w whose selected subword is a
/// reduced word for u1, of the coefficient of A_{u2} in the mixed ordered
/// product with selected letters as s_i and the rest as A_i.
SPoly struct_const(const AffinePerm& w, const AffinePerm& u1, const AffinePerm& u2);
SPoly struct_const_from_word(const AffinePerm& w, std::span<const int> word,
                             const AffinePerm& u1, const AffinePerm& u2);

/// Thread-safe memo for coproducts keyed by (rank, window), optionally
/// persisted as one JSON document per element in a cache directory.  Purely
/// an optimization: results are identical to recomputation.
class CoproductCache {
 public:
  CoproductCache() = default;
  explicit CoproductCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::shared_ptr<const TensorElem> get(const AffinePerm& w);

  /// Directory from AFFLAG_CACHE_DIR, else XDG_CACHE_HOME/afflag, else
  /// ~/.cache/afflag.
  static std::filesystem::path default_directory();

 private:
  std::shared_mutex mutex_;
  std::map<AffinePerm, std::shared_ptr<const TensorElem>> memo_;
  std::optional<std::filesystem::path> dir_;
};

/// Cap operator D_u applied to x: for each A_w in x, the evaluation at 0 of
/// the coproduct coefficients p^w_{u,v} collected against A_v.
NilCoxElem cap(const AffinePerm& u, const NilCoxElem& x, CoproductCache* cache = nullptr);

/// Pieri operator D_i = D_{rho_i}.
NilCoxElem pieri_cap(int i, const NilCoxElem& x, CoproductCache* cache = nullptr);

/// Evaluation at 0 of every coefficient; zero entries dropped.
std::map<std::pair<AffinePerm, AffinePerm>, Int> eval_zero_tensor(const TensorElem& t);

}  // namespace afflag
