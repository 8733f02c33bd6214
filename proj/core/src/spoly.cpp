#include "afflag/spoly.hpp"

#include <numeric>
#include <stdexcept>

namespace afflag {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    d += e;
    if (d < 0) throw std::overflow_error("exponent overflow in monomial degree");
  }
  return d;
}

}  // namespace

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

SPoly::SPoly(int n) : rank_(n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

SPoly SPoly::constant(int n, Int c) {
  SPoly p(n);
  p.add_term(Monomial(n - 1, 0), c);
  return p;
}

Int SPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Int SPoly::constant_term() const { return coeff(Monomial(num_vars(), 0)); }

int SPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool SPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

SPoly& SPoly::add_term(const Monomial& m, Int c) {
  if (static_cast<int>(m.size()) != num_vars())
    throw std::invalid_argument("monomial has wrong number of variables");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

SPoly SPoly::operator+(const SPoly& o) const {
  SPoly r(*this);
  r += o;
  return r;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch in polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SPoly SPoly::operator-() const {
  SPoly r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, checked_neg(c));
  return r;
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch in polynomial product");
  SPoly r(rank_);
  Monomial m(num_vars());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (int v = 0; v < num_vars(); ++v) {
        long long e = static_cast<long long>(ma[v]) + mb[v];
        if (e > 1 << 20) throw std::overflow_error("exponent overflow in polynomial product");
        m[v] = static_cast<int>(e);
      }
      r.add_term(m, checked_mul(ca, cb));
    }
  return r;
}

SPoly SPoly::operator*(Int c) const {
  SPoly r(rank_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, checked_mul(k, c));
  return r;
}

SPoly weight_to_poly(const Weight& lambda) {
  const int n = lambda.rank();
  SPoly p(n);
  for (int i = 1; i < n; ++i) {
    if (lambda.coord(i) == 0) continue;
    Monomial m(n - 1, 0);
    m[i - 1] = 1;
    p.add_term(m, lambda.coord(i));
  }
  return p;
}

Int eval_zero(const SPoly& p) { return p.constant_term(); }

}  // namespace afflag
