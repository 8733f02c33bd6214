#pragma once

#include <map>
#include <optional>
#include <span>

#include "afflag/affine_perm.hpp"
#include "afflag/base.hpp"

namespace afflag {

/// Integer combination of nilCoxeter basis elements A_w, stored as a sparse
/// map with deterministic (window-sorted) iteration; zero coefficients are
/// never stored.
class NilCoxElem {
 public:
  explicit NilCoxElem(int n) : rank_(n) {}
  static NilCoxElem unit(int n) { return basis(AffinePerm::identity(n)); }
  static NilCoxElem basis(const AffinePerm& w, Int c = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const AffinePerm& w) const;
  const std::map<AffinePerm, Int>& terms() const& { return terms_; }
  std::map<AffinePerm, Int> terms() const&& { return terms_; }

  NilCoxElem& add(const AffinePerm& w, Int c);
  NilCoxElem operator+(const NilCoxElem&) const;
  NilCoxElem operator-(const NilCoxElem&) const;
  NilCoxElem operator*(Int c) const;
  NilCoxElem& operator+=(const NilCoxElem&);
  bool operator==(const NilCoxElem&) const = default;

 private:
  int rank_;
  std::map<AffinePerm, Int> terms_;
};

/// Basis product rule: uv when lengths add, nothing otherwise.
std::optional<AffinePerm> a_product(const AffinePerm& u, const AffinePerm& v);

/// Bilinear extension of a_product.
NilCoxElem elem_product(const NilCoxElem& x, const NilCoxElem& y);

/// The unique cyclically decreasing element with letter set J, a proper
/// subset of Z/nZ: each letter once, s_{i+1} always preceding s_i.
AffinePerm cyclically_decreasing(int n, std::span<const int> J);

/// Fomin-Stanley generator h_i: the sum of A_{w_J} over all i-subsets J of
/// Z/nZ.  h_0 = 1, h_i = 0 for i < 0; requires i < n.
NilCoxElem h_generator(int n, int i);

/// Ordered product h_{lambda_1} * h_{lambda_2} * ...; parts must be < n.
NilCoxElem h_lambda(int n, std::span<const int> lambda);

/// Coefficient of A_w in x; the pairing <x, A_w>.
Int coeff(const NilCoxElem& x, const AffinePerm& w);

/// Basis relabeling along the Dynkin rotation psi^k; a ring automorphism.
NilCoxElem apply_psi(const NilCoxElem& x, int k);

/// Basis relabeling along the Dynkin flip omega; a ring automorphism.
NilCoxElem apply_omega(const NilCoxElem& x);

}  // namespace afflag
