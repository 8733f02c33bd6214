#pragma once

#include <map>
#include <vector>

#include "afflag/base.hpp"
#include "afflag/weight.hpp"

namespace afflag {

/// Exponent vector over the variables y_1, ..., y_{n-1} (the images of
/// e_1, ..., e_{n-1}; e_n maps to zero).
using Monomial = std::vector<int>;

/// Canonical monomial order: graded lexicographic, largest first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact integer coefficients in the coefficient ring
/// S = Sym(P); never stores zero coefficients.
class SPoly {
 public:
  /// Zero polynomial in the variables of rank-n weights.
  explicit SPoly(int n);
  static SPoly constant(int n, Int c);

  int rank() const { return rank_; }
  int num_vars() const { return rank_ - 1; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Monomial& m) const;
  /// Constant term; the evaluation map at 0.
  Int constant_term() const;
  /// Maximal total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;
  const std::map<Monomial, Int, GrlexDescending>& terms() const& { return terms_; }
  std::map<Monomial, Int, GrlexDescending> terms() const&& { return terms_; }

  SPoly& add_term(const Monomial& m, Int c);
  SPoly operator+(const SPoly&) const;
  SPoly operator-(const SPoly&) const;
  SPoly operator-() const;
  SPoly operator*(const SPoly&) const;
  SPoly operator*(Int c) const;
  SPoly& operator+=(const SPoly&);
  bool operator==(const SPoly&) const = default;

 private:
  int rank_;
  std::map<Monomial, Int, GrlexDescending> terms_;
};

/// Linear embedding of a weight: sum of coord(i) * y_i over i < n.
SPoly weight_to_poly(const Weight& lambda);

/// Evaluation map at 0 (constant term).
Int eval_zero(const SPoly& p);

}  // namespace afflag
