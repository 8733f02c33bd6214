#include "afflag/nilcoxeter.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace afflag {

NilCoxElem NilCoxElem::basis(const AffinePerm& w, Int c) {
  NilCoxElem x(w.rank());
  x.add(w, c);
  return x;
}

Int NilCoxElem::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

NilCoxElem& NilCoxElem::add(const AffinePerm& w, Int c) {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch in nilCoxeter element");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

NilCoxElem& NilCoxElem::operator+=(const NilCoxElem& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch in nilCoxeter sum");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NilCoxElem NilCoxElem::operator+(const NilCoxElem& o) const {
  NilCoxElem r(*this);
  r += o;
  return r;
}

NilCoxElem NilCoxElem::operator-(const NilCoxElem& o) const { return *this + o * -1; }

NilCoxElem NilCoxElem::operator*(Int c) const {
  NilCoxElem r(rank_);
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, checked_mul(k, c));
  return r;
}

std::optional<AffinePerm> a_product(const AffinePerm& u, const AffinePerm& v) {
  AffinePerm uv = u * v;
  if (uv.length() == u.length() + v.length()) return uv;
  return std::nullopt;
}

NilCoxElem elem_product(const NilCoxElem& x, const NilCoxElem& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch in nilCoxeter product");
  NilCoxElem r(x.rank());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      if (auto uv = a_product(u, v)) r.add(*uv, checked_mul(cu, cv));
  return r;
}

AffinePerm cyclically_decreasing(int n, std::span<const int> J) {
  std::vector<bool> in(n, false);
  int count = 0;
  for (int j : J) {
    if (j < 0 || j >= n) throw std::invalid_argument("letter out of range 0..n-1");
    if (!in[j]) ++count;
    in[j] = true;
  }
  if (count == n)
    throw std::invalid_argument("cyclically decreasing element requires a proper subset of Z/nZ");
  // Split J into maximal cyclic runs [start..end]; within a run the letters
  // appear in decreasing order, distinct runs commute.
  std::vector<int> word;
  std::vector<bool> used(n, false);
  for (int start = 0; start < n; ++start) {
    if (!in[start] || used[start]) continue;
    if (in[pos_mod(start - 1, n)]) continue;  // not the start of a run
    int end = start;
    while (in[pos_mod(end + 1, n)]) end = static_cast<int>(pos_mod(end + 1, n));
    for (int l = end;; l = static_cast<int>(pos_mod(l - 1, n))) {
      word.push_back(l);
      used[l] = true;
      if (l == start) break;
    }
  }
  AffinePerm w = AffinePerm::from_word(n, word);
  if (w.length() != count)
    throw std::logic_error("cyclically decreasing word is not reduced");
  return w;
}

namespace {

void subsets_rec(int n, int from, int remaining, std::vector<int>& J, NilCoxElem& acc) {
  if (remaining == 0) {
    acc.add(cyclically_decreasing(n, J), 1);
    return;
  }
  for (int j = from; j <= n - remaining; ++j) {
    J.push_back(j);
    subsets_rec(n, j + 1, remaining - 1, J, acc);
    J.pop_back();
  }
}

}  // namespace

NilCoxElem h_generator(int n, int i) {
  if (i >= n) throw std::invalid_argument("h_i requires i < n");
  NilCoxElem acc(n);
  if (i < 0) return acc;
  std::vector<int> J;
  subsets_rec(n, 0, i, J, acc);
  return acc;
}

NilCoxElem h_lambda(int n, std::span<const int> lambda) {
  NilCoxElem acc = NilCoxElem::unit(n);
  for (int part : lambda) {
    if (part >= n) throw std::invalid_argument("h_lambda requires parts < n");
    acc = elem_product(acc, h_generator(n, part));
  }
  return acc;
}

Int coeff(const NilCoxElem& x, const AffinePerm& w) { return x.coeff(w); }

namespace {

NilCoxElem map_basis(const NilCoxElem& x, auto&& f) {
  NilCoxElem r(x.rank());
  for (const auto& [w, c] : x.terms()) {
    AffinePerm fw = f(w);
    if (fw.length() != w.length()) throw std::logic_error("basis relabeling must preserve length");
    r.add(fw, c);
  }
  return r;
}

}  // namespace

NilCoxElem apply_psi(const NilCoxElem& x, int k) {
  return map_basis(x, [k](const AffinePerm& w) { return dynkin_psi(w, k); });
}

NilCoxElem apply_omega(const NilCoxElem& x) {
  return map_basis(x, [](const AffinePerm& w) { return dynkin_omega(w); });
}

}  // namespace afflag
