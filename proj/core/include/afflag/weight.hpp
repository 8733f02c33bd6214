#pragma once

#include <vector>

#include "afflag/affine_perm.hpp"
#include "afflag/base.hpp"

namespace afflag {

/// Level-zero weight of SL(n): an element of Z^n modulo the all-ones vector,
/// stored in the e-basis with the representative normalized so the last
/// coordinate is 0.
class Weight {
 public:
  explicit Weight(int n);
  static Weight from_coords(std::vector<Int> coords);
  /// Basis weight e_i (1 <= i <= n), normalized.
  static Weight basis(int n, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  /// Normalized coordinate, 1-indexed; coord(n) is always 0.
  Int coord(int i) const { return coords_[i - 1]; }
  const std::vector<Int>& coords() const& { return coords_; }
  std::vector<Int> coords() const&& { return coords_; }
  bool is_zero() const;

  Weight operator+(const Weight&) const;
  Weight operator-(const Weight&) const;
  Weight operator-() const;
  Weight operator*(Int c) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

 private:
  void normalize();
  std::vector<Int> coords_;
};

/// Simple root alpha_i for i in 0..n-1.  For i >= 1 this is e_i - e_{i+1};
/// alpha_0 maps to -theta = e_n - e_1 under the projection sending the null
/// root to zero.
Weight simple_root(int n, int i);

/// Coroot pairing with a simple index: <alpha_i^v, lambda>, with the i = 0
/// case given by the highest-root coroot at level zero.
Int pair_coroot(int i, const Weight& lambda);

/// Coroot pairing with the reflection t_{a,b}: lambda_ra - lambda_rb where
/// ra, rb are the residues of a, b in 1..n.
Int pair_coroot(const Reflection& t, const Weight& lambda);

/// Level-zero simple reflection: s_i swaps coordinates i, i+1 (s_0 swaps
/// 1 and n), then renormalizes.
Weight reflect_weight(int i, const Weight& lambda);

/// Level-zero action of w: only the finite part of w acts, by permuting
/// coordinates through the window residues.
Weight act(const AffinePerm& w, const Weight& lambda);

}  // namespace afflag
