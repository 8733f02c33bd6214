#include "afflag/weight.hpp"

#include <stdexcept>

namespace afflag {

Weight::Weight(int n) : coords_(n, 0) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

Weight Weight::from_coords(std::vector<Int> coords) {
  Weight w(static_cast<int>(coords.size()));
  w.coords_ = std::move(coords);
  w.normalize();
  return w;
}

Weight Weight::basis(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("basis index out of range 1..n");
  Weight w(n);
  w.coords_[i - 1] = 1;
  w.normalize();
  return w;
}

void Weight::normalize() {
  const Int last = coords_.back();
  if (last == 0) return;
  for (Int& c : coords_) c = checked_sub(c, last);
}

bool Weight::is_zero() const {
  for (Int c : coords_)
    if (c != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in weight sum");
  std::vector<Int> c(coords_);
  for (int i = 0; i < rank(); ++i) c[i] = checked_add(c[i], o.coords_[i]);
  return from_coords(std::move(c));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  std::vector<Int> c(coords_);
  for (Int& x : c) x = checked_neg(x);
  return from_coords(std::move(c));
}

Weight Weight::operator*(Int k) const {
  std::vector<Int> c(coords_);
  for (Int& x : c) x = checked_mul(x, k);
  return from_coords(std::move(c));
}

Weight simple_root(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("simple root index out of range 0..n-1");
  Weight w(n);
  std::vector<Int> c(n, 0);
  if (i == 0) {
    c[n - 1] = 1;
    c[0] = -1;
  } else {
    c[i - 1] = 1;
    c[i] = -1;
  }
  return Weight::from_coords(std::move(c));
}

Int pair_coroot(int i, const Weight& lambda) {
  const int n = lambda.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("coroot index out of range 0..n-1");
  if (i == 0) return checked_sub(lambda.coord(n), lambda.coord(1));
  return checked_sub(lambda.coord(i), lambda.coord(i + 1));
}

Int pair_coroot(const Reflection& t, const Weight& lambda) {
  if (t.n != lambda.rank()) throw std::invalid_argument("rank mismatch in coroot pairing");
  const Int ra = residue1(t.a, t.n), rb = residue1(t.b, t.n);
  return checked_sub(lambda.coord(static_cast<int>(ra)), lambda.coord(static_cast<int>(rb)));
}

Weight reflect_weight(int i, const Weight& lambda) {
  const int n = lambda.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("reflection index out of range 0..n-1");
  std::vector<Int> c(lambda.coords());
  if (i == 0)
    std::swap(c[0], c[n - 1]);
  else
    std::swap(c[i - 1], c[i]);
  return Weight::from_coords(std::move(c));
}

Weight act(const AffinePerm& w, const Weight& lambda) {
  const int n = w.rank();
  if (n != lambda.rank()) throw std::invalid_argument("rank mismatch in weight action");
  std::vector<Int> c(n, 0);
  for (int i = 1; i <= n; ++i) {
    const Int target = residue1(w.window()[i - 1], n);
    c[target - 1] = lambda.coord(i);
  }
  return Weight::from_coords(std::move(c));
}

}  // namespace afflag
