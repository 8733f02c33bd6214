#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "afflag/base.hpp"

namespace afflag {

/// Element of the affine symmetric group of type A_{n-1} in window notation:
/// the values [w(1),...,w(n)] of an n-periodic bijection of the integers,
/// w(i+n) = w(i)+n, normalized by sum(w(i)-i) = 0.  Values are immutable
/// after construction; the Coxeter length is computed eagerly from the
/// window by the inversion formula and cached.
class AffinePerm {
 public:
  /// Validates the window invariants (distinct residues mod n, zero sum)
  /// and throws std::invalid_argument naming the violated invariant.
  explicit AffinePerm(std::vector<Int> window);

  static AffinePerm identity(int n);
  /// Simple generator s_i, 0 <= i <= n-1.
  static AffinePerm simple(int n, int i);
  /// Product s_{letters[0]} * ... * s_{letters[k-1]}; the word need not be
  /// reduced.  Letters outside 0..n-1 are rejected.
  static AffinePerm from_word(int n, std::span<const int> letters);
  /// The transposition t_{a,b} swapping a+kn and b+kn for every k.
  /// Requires a < b and a != b (mod n).
  static AffinePerm transposition(int n, Int a, Int b);
  /// Pieri element s_{i-1} s_{i-2} ... s_1 s_0, letters taken mod n; i >= 1.
  static AffinePerm rho(int n, int i);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<Int>& window() const& { return window_; }
  std::vector<Int> window() const&& { return window_; }

  /// Value at an arbitrary integer via the periodic extension.
  Int operator()(Int i) const;

  int length() const { return length_; }
  bool is_identity() const;
  AffinePerm inverse() const;

  /// True iff l(w s_i) < l(w), i.e. w(i) > w(i+1) in the periodic extension.
  bool right_descent(int i) const;
  /// Smallest right descent index, or -1 for the identity.
  int first_right_descent() const;

  /// Deterministic reduced word: repeatedly strip the smallest right
  /// descent, letters accumulating right to left.  from_word of the result
  /// reproduces the element.
  std::vector<int> canonical_reduced_word() const;

  /// Composition (uv)(i) = u(v(i)); left factor acts last.
  friend AffinePerm operator*(const AffinePerm& u, const AffinePerm& v);

  bool operator==(const AffinePerm& o) const { return window_ == o.window_; }
  std::strong_ordering operator<=>(const AffinePerm& o) const;

 private:
  struct Unchecked {};
  AffinePerm(std::vector<Int> window, Unchecked);
  void compute_length();

  std::vector<Int> window_;
  int length_ = 0;
};

/// Affine transposition t_{a,b} in canonical form: 1 <= a <= n, a < b,
/// a != b (mod n).  Shifting both entries by n yields the same group
/// element; the canonical representative fixes that freedom.
struct Reflection {
  int n = 0;
  Int a = 0;
  Int b = 0;

  static Reflection canonical(int n, Int a, Int b);
  AffinePerm to_perm() const { return AffinePerm::transposition(n, a, b); }

  bool operator==(const Reflection&) const = default;
  auto operator<=>(const Reflection&) const = default;
};

/// Bruhat order test, via the lifting property along the canonical reduced
/// word of w.
bool bruhat_leq(const AffinePerm& u, const AffinePerm& w);

/// All pairs (v, t) with v = w*t and l(v) = l(w) - 1, t canonical, sorted by
/// (v, t).  Candidates are enumerated over 1 <= a <= n,
/// a < b <= a + n*(l(w)+1), which is a safe bound for covers.
std::vector<std::pair<AffinePerm, Reflection>> lower_covers(const AffinePerm& w);

/// Unique decomposition w = w0 * wfin with w0 0-Grassmannian and wfin in the
/// finite symmetric group, lengths adding.
std::pair<AffinePerm, AffinePerm> grassmannian_decompose(const AffinePerm& w);

/// True iff w is a minimal-length coset representative of W_af / W,
/// equivalently the window is strictly increasing.
bool is_grassmannian(const AffinePerm& w);

/// Dynkin rotation psi^k, s_i -> s_{i-k mod n}; length preserving.
AffinePerm dynkin_psi(const AffinePerm& w, int k);

/// Dynkin flip omega, s_i -> s_{n-i mod n}; an involution.
AffinePerm dynkin_omega(const AffinePerm& w);

/// Elements grouped by length, levels 0..max_len, each level sorted.
std::vector<std::vector<AffinePerm>> elements_by_length(int n, int max_len);

/// All reduced words of w (letters multiply left to right).
std::vector<std::vector<int>> reduced_words(const AffinePerm& w);

/// True iff the window is a permutation of 1..n (no s_0 in a reduced word).
bool is_finite(const AffinePerm& w);

}  // namespace afflag
