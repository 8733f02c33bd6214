#include "afflag/strong_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace afflag {

std::vector<MarkedCover> marked_lower_covers(const AffinePerm& u) {
  const int n = u.rank();
  std::vector<MarkedCover> out;
  for (const auto& [v, t] : lower_covers(u)) {
    const Int kmax = floor_div(t.b - 1, n);
    for (Int k = 1; k <= kmax; ++k) {
      const Int i = t.a - k * n;
      const Int j = t.b - k * n;
      out.push_back(MarkedCover{u, v, i, j, u(j)});
    }
  }
  std::sort(out.begin(), out.end(), [](const MarkedCover& x, const MarkedCover& y) {
    if (x.a != y.a) return x.a > y.a;
    if (x.outside != y.outside) return x.outside < y.outside;
    return x.i < y.i;
  });
  return out;
}

namespace {

void strips_rec(const AffinePerm& cur, bool bounded, Int last_mark, int remaining,
                std::vector<MarkedCover>& chain, const AffinePerm& start,
                std::vector<StrongStrip>& out) {
  if (remaining == 0) {
    out.push_back(StrongStrip{start, chain});
    return;
  }
  for (const MarkedCover& mc : marked_lower_covers(cur)) {
    if (bounded && mc.a >= last_mark) continue;  // markings strictly decrease
    chain.push_back(mc);
    strips_rec(mc.outside, true, mc.a, remaining - 1, chain, start, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<StrongStrip> strong_strips(const AffinePerm& w, int size) {
  if (size < 0) throw std::invalid_argument("strip size must be nonnegative");
  std::vector<StrongStrip> out;
  std::vector<MarkedCover> chain;
  strips_rec(w, false, 0, size, chain, w, out);
  return out;
}

NilCoxElem pieri_prime(int i, const NilCoxElem& x) {
  if (i < 1) throw std::invalid_argument("Pieri operator index must be positive");
  NilCoxElem out(x.rank());
  for (const auto& [w, c] : x.terms())
    for (const StrongStrip& s : strong_strips(w, i)) out.add(s.outside(), c);
  return out;
}

namespace {

Int tableau_count_rec(const AffinePerm& cur, const AffinePerm& target,
                      std::span<const int> sizes) {
  if (sizes.empty()) return cur == target ? 1 : 0;
  Int total = 0;
  for (const StrongStrip& s : strong_strips(cur, sizes.front()))
    total = checked_add(total, tableau_count_rec(s.outside(), target, sizes.subspan(1)));
  return total;
}

}  // namespace

Int strong_tableau_count(const AffinePerm& w, const AffinePerm& u,
                         std::span<const int> alpha) {
  if (w.rank() != u.rank()) throw std::invalid_argument("rank mismatch in tableau count");
  std::vector<int> sizes;
  long long total = 0;
  for (int part : alpha) {
    if (part < 0) throw std::invalid_argument("tableau weight parts must be nonnegative");
    if (part > 0) sizes.push_back(part);  // empty strips are unique: zeros drop out
    total += part;
  }
  if (total != w.length() - u.length()) return 0;
  return tableau_count_rec(w, u, sizes);
}

SymFunc strong_schur(const AffinePerm& w, const AffinePerm& u) {
  const int d = w.length() - u.length();
  if (d < 0 || !bruhat_leq(u, w)) return SymFunc(std::max(d, 0));
  SymFunc out(d);
  for (const Partition& lambda : partitions_of(d)) {
    Int count = -1;
    for (const auto& alpha : distinct_rearrangements(lambda)) {
      Int c = strong_tableau_count(w, u, alpha);
      if (count >= 0 && c != count)
        throw std::logic_error("strong tableau counts are not symmetric across compositions");
      count = c;
    }
    out.add(lambda, count);
  }
  return out;
}

AffinePerm grassmannian_from_partition(int n, std::span<const int> lambda) {
  std::vector<int> word;
  for (size_t r = 0; r < lambda.size(); ++r) {
    if (lambda[r] <= 0 || lambda[r] > n - 1)
      throw std::invalid_argument("partition parts must lie in 1..n-1");
    if (r + 1 < lambda.size() && lambda[r] < lambda[r + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  for (size_t r = lambda.size(); r-- > 0;)
    for (int c = lambda[r]; c >= 1; --c)
      word.push_back(static_cast<int>(pos_mod(c - static_cast<int>(r) - 1, n)));
  return AffinePerm::from_word(n, word);
}

SymFunc kschur(int n, std::span<const int> lambda) {
  return strong_schur(grassmannian_from_partition(n, lambda), AffinePerm::identity(n));
}

std::vector<int> partition_from_grassmannian(const AffinePerm& w) {
  if (!is_grassmannian(w))
    throw std::invalid_argument("element is not 0-Grassmannian");
  const int n = w.rank();
  for (const Partition& lambda : partitions_of_bounded(w.length(), n - 1))
    if (grassmannian_from_partition(n, lambda) == w) return lambda;
  throw std::logic_error("no k-bounded partition maps to this 0-Grassmannian element");
}

std::vector<AffinePerm> grassmannian_elements(int n, int length) {
  std::vector<AffinePerm> out;
  const auto levels = elements_by_length(n, length);
  for (const AffinePerm& w : levels.at(length))
    if (is_grassmannian(w)) out.push_back(w);
  return out;
}

}  // namespace afflag
