#pragma once

#include <span>
#include <vector>

#include "afflag/nilcoxeter.hpp"
#include "afflag/symfunc.hpp"

namespace afflag {

/// Marked strong cover inside -> outside: outside = inside * t_{i,j} with
/// i <= 0 < j, the length dropping by one, labeled by a = inside(j).
struct MarkedCover {
  AffinePerm inside;
  AffinePerm outside;
  Int i = 0;
  Int j = 0;
  Int a = 0;

  bool operator==(const MarkedCover&) const = default;
  auto operator<=>(const MarkedCover&) const = default;
};

/// All marked strong covers below u: for each cover reflection t_{a,b} in
/// canonical form the shifts k = 1 .. floor((b-1)/n) give (i,j) = (a-kn,
/// b-kn).  Sorted by descending marking, then outside window.
std::vector<MarkedCover> marked_lower_covers(const AffinePerm& u);

/// Chain of marked covers with strictly decreasing markings.
struct StrongStrip {
  AffinePerm start;
  std::vector<MarkedCover> covers;

  const AffinePerm& inside() const { return start; }
  const AffinePerm& outside() const { return covers.empty() ? start : covers.back().outside; }
  int size() const { return static_cast<int>(covers.size()); }

  bool operator==(const StrongStrip&) const = default;
};

/// All strong strips of the given size with inside = w; size 0 yields the
/// empty strip at w.
std::vector<StrongStrip> strong_strips(const AffinePerm& w, int size);

/// Strip-based Pieri operator: A_w goes to the sum of A_{outside(S)} over
/// strips S of size i from w.
NilCoxElem pieri_prime(int i, const NilCoxElem& x);

/// Number of strong tableaux with inside w, outside u and weight alpha
/// (zero parts are transparent).  Zero when the parts do not sum to
/// l(w) - l(u).
Int strong_tableau_count(const AffinePerm& w, const AffinePerm& u, std::span<const int> alpha);

/// Strong Schur function of shape w/u in the monomial basis, of degree
/// l(w) - l(u).  Tableau counts are computed for every rearrangement of
/// each partition and must agree (symmetry is a theorem; disagreement
/// signals a bug and throws std::logic_error).
SymFunc strong_schur(const AffinePerm& w, const AffinePerm& u);

/// k-Schur function indexed by a k-bounded partition (k = n-1):
/// strong_schur of the associated 0-Grassmannian element over the identity.
SymFunc kschur(int n, std::span<const int> lambda);

/// 0-Grassmannian element associated to a k-bounded partition: the product
/// of s_{(c-r) mod n} over cells (r,c) read from the last row to the first,
/// right to left within each row.
AffinePerm grassmannian_from_partition(int n, std::span<const int> lambda);

/// Inverse of grassmannian_from_partition; requires a 0-Grassmannian input.
std::vector<int> partition_from_grassmannian(const AffinePerm& w);

/// The 0-Grassmannian elements of the given length, sorted.
std::vector<AffinePerm> grassmannian_elements(int n, int length);

}  // namespace afflag
