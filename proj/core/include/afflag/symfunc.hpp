#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "afflag/base.hpp"
#include "afflag/nilcoxeter.hpp"

namespace afflag {

/// Weakly decreasing sequence of positive parts.
using Partition = std::vector<int>;

/// Output order for symmetric function terms: by degree ascending, then
/// reverse-lexicographic within a degree (so [2] precedes [1,1]).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// Symmetric function in the monomial basis, truncated above a fixed degree
/// bound; exact integer coefficients, no zero terms stored.
class SymFunc {
 public:
  explicit SymFunc(int degree_bound);
  static SymFunc one(int degree_bound);

  int degree_bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Partition& p) const;
  const std::map<Partition, Int, PartitionOrder>& terms() const& { return terms_; }
  std::map<Partition, Int, PartitionOrder> terms() const&& { return terms_; }

  SymFunc& add(const Partition& p, Int c);
  SymFunc operator+(const SymFunc&) const;
  SymFunc operator-(const SymFunc&) const;
  SymFunc operator*(Int c) const;
  bool operator==(const SymFunc&) const = default;

 private:
  int bound_;
  std::map<Partition, Int, PartitionOrder> terms_;
};

/// Exact product in the monomial basis, truncated at the smaller degree
/// bound.  Computed by the convolution rule: for padded rearrangements
/// alpha of lambda and beta of mu, the weakly decreasing sums alpha + beta
/// collect into monomial terms.
SymFunc sym_product(const SymFunc& f, const SymFunc& g);

/// Complete homogeneous h_lambda expanded in the monomial basis.
SymFunc h_to_m(const Partition& lambda, int degree_bound);

/// Weak Schur function: sum over k-bounded lambda of
/// coeff(h_lambda A_u, A_w) m_lambda.
SymFunc weak_schur(const AffinePerm& w, const AffinePerm& u);

struct CauchyDegreeResult {
  int degree = 0;
  bool pass = false;
  std::string detail;  // differing coefficients on failure
};

struct CauchyReport {
  int n = 0;
  int max_degree = 0;
  std::vector<CauchyDegreeResult> per_degree;
  bool pass() const;
};

/// Verifies, degree by degree up to d, that the affine Cauchy kernel
/// sum_{lambda_1 < n} h_lambda(x) m_lambda(y) equals
/// sum_{w 0-Grassmannian} Strong_w(x) Weak_w(y).
CauchyReport cauchy_check(int n, int d);

class CoproductCache;

/// Coefficients of Strong_{w/u} on k-Schur functions: v -> phi(p^w_{u,v})
/// over 0-Grassmannian v of length l(w) - l(u), zeros included.
std::map<AffinePerm, Int> strong_expand(const AffinePerm& w, const AffinePerm& u,
                                        CoproductCache* cache = nullptr);

/// All partitions of m, reverse-lexicographic.
std::vector<Partition> partitions_of(int m);
/// All partitions of m with parts at most max_part.
std::vector<Partition> partitions_of_bounded(int m, int max_part);
/// All compositions of m into positive parts.
std::vector<std::vector<int>> compositions_of(int m);
/// Distinct rearrangements of the parts of a partition.
std::vector<std::vector<int>> distinct_rearrangements(const Partition& lambda);

}  // namespace afflag
