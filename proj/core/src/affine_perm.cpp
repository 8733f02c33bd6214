#include "afflag/affine_perm.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace afflag {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

AffinePerm::AffinePerm(std::vector<Int> window, Unchecked)
    : window_(std::move(window)) {
  compute_length();
}

AffinePerm::AffinePerm(std::vector<Int> window) : window_(std::move(window)) {
  const int n = rank();
  require(n >= 2, "window invariant violated: rank must be at least 2");
  Int sum = 0;
  std::set<Int> residues;
  for (int i = 1; i <= n; ++i) {
    sum = checked_add(sum, checked_sub(window_[i - 1], i));
    residues.insert(pos_mod(window_[i - 1], n));
  }
  require(sum == 0, "window invariant violated: sum(w(i)-i) = " +
                        std::to_string(sum) + ", expected 0");
  require(static_cast<int>(residues.size()) == n,
          "window invariant violated: entries must be distinct mod n");
  compute_length();
}

void AffinePerm::compute_length() {
  const int n = rank();
  Int len = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Int d = floor_div(window_[j - 1] - window_[i - 1], n);
      len = checked_add(len, d < 0 ? -d : d);
    }
  length_ = static_cast<int>(len);
}

AffinePerm AffinePerm::identity(int n) {
  require(n >= 2, "rank must be at least 2");
  std::vector<Int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return AffinePerm(std::move(w), Unchecked{});
}

AffinePerm AffinePerm::simple(int n, int i) {
  require(n >= 2, "rank must be at least 2");
  require(0 <= i && i < n, "generator index out of range 0..n-1");
  std::vector<Int> w(n);
  for (int p = 0; p < n; ++p) w[p] = p + 1;
  if (i == 0) {
    w[0] = 0;
    w[n - 1] = n + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePerm(std::move(w), Unchecked{});
}

AffinePerm AffinePerm::from_word(int n, std::span<const int> letters) {
  AffinePerm acc = identity(n);
  for (int letter : letters) {
    require(0 <= letter && letter < n, "word letter out of range 0..n-1");
    acc = acc * simple(n, letter);
  }
  return acc;
}

AffinePerm AffinePerm::transposition(int n, Int a, Int b) {
  require(n >= 2, "rank must be at least 2");
  require(a < b, "transposition requires a < b");
  require(pos_mod(a, n) != pos_mod(b, n),
          "transposition requires a != b (mod n)");
  std::vector<Int> w(n);
  const Int ra = residue1(a, n), rb = residue1(b, n);
  for (Int i = 1; i <= n; ++i) {
    if (i == ra)
      w[i - 1] = checked_add(b, i - a);
    else if (i == rb)
      w[i - 1] = checked_add(a, i - b);
    else
      w[i - 1] = i;
  }
  return AffinePerm(std::move(w), Unchecked{});
}

AffinePerm AffinePerm::rho(int n, int i) {
  require(i >= 1, "Pieri element index must be positive");
  std::vector<int> letters;
  letters.reserve(i);
  for (int p = i - 1; p >= 0; --p) letters.push_back(static_cast<int>(pos_mod(p, n)));
  return from_word(n, letters);
}

Int AffinePerm::operator()(Int i) const {
  const int n = rank();
  const Int r = residue1(i, n);
  const Int q = (i - r) / n;
  return checked_add(window_[r - 1], checked_mul(q, n));
}

bool AffinePerm::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

AffinePerm AffinePerm::inverse() const {
  const int n = rank();
  std::vector<Int> w(n);
  for (Int i = 1; i <= n; ++i) {
    const Int x = window_[i - 1];
    const Int p = residue1(x, n);
    w[p - 1] = i - x + p;
  }
  return AffinePerm(std::move(w), Unchecked{});
}

bool AffinePerm::right_descent(int i) const {
  const int n = rank();
  if (i == 0) return window_[n - 1] - n > window_[0];
  return window_[i - 1] > window_[i];
}

int AffinePerm::first_right_descent() const {
  for (int i = 0; i < rank(); ++i)
    if (right_descent(i)) return i;
  return -1;
}

std::vector<int> AffinePerm::canonical_reduced_word() const {
  std::vector<int> letters;
  AffinePerm w = *this;
  while (true) {
    int i = w.first_right_descent();
    if (i < 0) break;
    letters.push_back(i);
    w = w * simple(rank(), i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

AffinePerm operator*(const AffinePerm& u, const AffinePerm& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rank mismatch in group product");
  const int n = u.rank();
  std::vector<Int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = u(v.window_[i - 1]);
  return AffinePerm(std::move(w), AffinePerm::Unchecked{});
}

std::strong_ordering AffinePerm::operator<=>(const AffinePerm& o) const {
  if (auto c = rank() <=> o.rank(); c != 0) return c;
  for (int i = 0; i < rank(); ++i)
    if (auto c = window_[i] <=> o.window_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Reflection Reflection::canonical(int n, Int a, Int b) {
  if (a > b) std::swap(a, b);
  if (a == b || pos_mod(a, n) == pos_mod(b, n))
    throw std::invalid_argument("reflection requires a != b (mod n)");
  const Int shift = residue1(a, n) - a;
  return Reflection{n, a + shift, b + shift};
}

bool bruhat_leq(const AffinePerm& u, const AffinePerm& w) {
  if (u.rank() != w.rank())
    throw std::invalid_argument("rank mismatch in Bruhat comparison");
  const int n = u.rank();
  AffinePerm x = u, y = w;
  // Lifting property: strip right descents of w; mirror them on u when they
  // are descents there too.
  while (x.length() <= y.length()) {
    if (x.is_identity()) return true;
    int i = y.first_right_descent();
    if (i < 0) return false;
    y = y * AffinePerm::simple(n, i);
    if (x.right_descent(i)) x = x * AffinePerm::simple(n, i);
  }
  return false;
}

std::vector<std::pair<AffinePerm, Reflection>> lower_covers(const AffinePerm& w) {
  const int n = w.rank();
  const int target = w.length() - 1;
  std::vector<std::pair<AffinePerm, Reflection>> covers;
  if (target < 0) return covers;
  const Int bmax_off = checked_mul(n, w.length() + 1);
  for (Int a = 1; a <= n; ++a)
    for (Int b = a + 1; b <= a + bmax_off; ++b) {
      if (pos_mod(b, n) == pos_mod(a, n)) continue;
      AffinePerm v = w * AffinePerm::transposition(n, a, b);
      if (v.length() == target) covers.emplace_back(std::move(v), Reflection{n, a, b});
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::pair<AffinePerm, AffinePerm> grassmannian_decompose(const AffinePerm& w) {
  const int n = w.rank();
  AffinePerm w0 = w;
  std::vector<int> stripped;
  while (true) {
    int descent = -1;
    for (int i = 1; i < n; ++i)
      if (w0.right_descent(i)) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    stripped.push_back(descent);
    w0 = w0 * AffinePerm::simple(n, descent);
  }
  std::reverse(stripped.begin(), stripped.end());
  return {w0, AffinePerm::from_word(n, stripped)};
}

bool is_grassmannian(const AffinePerm& w) {
  const auto& win = w.window();
  for (size_t i = 0; i + 1 < win.size(); ++i)
    if (win[i] > win[i + 1]) return false;
  return true;
}

namespace {

AffinePerm relabel_letters(const AffinePerm& w, const std::vector<int>& image) {
  std::vector<int> letters = w.canonical_reduced_word();
  for (int& l : letters) l = image[l];
  return AffinePerm::from_word(w.rank(), letters);
}

}  // namespace

AffinePerm dynkin_psi(const AffinePerm& w, int k) {
  const int n = w.rank();
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = static_cast<int>(pos_mod(i - k, n));
  return relabel_letters(w, image);
}

AffinePerm dynkin_omega(const AffinePerm& w) {
  const int n = w.rank();
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = static_cast<int>(pos_mod(n - i, n));
  return relabel_letters(w, image);
}

std::vector<std::vector<AffinePerm>> elements_by_length(int n, int max_len) {
  std::vector<std::vector<AffinePerm>> levels;
  std::set<AffinePerm> seen;
  levels.push_back({AffinePerm::identity(n)});
  seen.insert(levels[0][0]);
  for (int len = 1; len <= max_len; ++len) {
    std::set<AffinePerm> next;
    for (const AffinePerm& w : levels[len - 1])
      for (int i = 0; i < n; ++i) {
        AffinePerm z = w * AffinePerm::simple(n, i);
        if (z.length() == len && !seen.count(z)) next.insert(std::move(z));
      }
    seen.insert(next.begin(), next.end());
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

std::vector<std::vector<int>> reduced_words(const AffinePerm& w) {
  if (w.is_identity()) return {{}};
  const int n = w.rank();
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (!w.right_descent(i)) continue;
    for (auto& word : reduced_words(w * AffinePerm::simple(n, i))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool is_finite(const AffinePerm& w) {
  for (Int x : w.window())
    if (x < 1 || x > w.rank()) return false;
  return true;
}

}  // namespace afflag
