#include "afflag/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "afflag/nilhecke.hpp"
#include "afflag/strong_order.hpp"

namespace afflag {

namespace {

int weight_of(const Partition& p) {
  int w = 0;
  for (int part : p) w += part;
  return w;
}

void check_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  const int wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa < wb;
  return a > b;  // within a degree: [m] first, [1,...,1] last
}

SymFunc::SymFunc(int degree_bound) : bound_(degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

SymFunc SymFunc::one(int degree_bound) {
  SymFunc f(degree_bound);
  f.add({}, 1);
  return f;
}

Int SymFunc::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

SymFunc& SymFunc::add(const Partition& p, Int c) {
  check_partition(p);
  if (c == 0 || weight_of(p) > bound_) return *this;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r(std::min(bound_, o.bound_));
  for (const auto& [p, c] : terms_) r.add(p, c);
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + o * -1; }

SymFunc SymFunc::operator*(Int c) const {
  SymFunc r(bound_);
  if (c == 0) return r;
  for (const auto& [p, k] : terms_) r.terms_.emplace(p, checked_mul(k, c));
  return r;
}

namespace {

// Distinct arrangements of the parts of lambda in a vector of fixed length,
// padded with zeros.
std::vector<std::vector<int>> padded_arrangements(const Partition& lambda, int len) {
  std::vector<int> v(len, 0);
  std::copy(lambda.begin(), lambda.end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

SymFunc sym_product(const SymFunc& f, const SymFunc& g) {
  SymFunc r(std::min(f.degree_bound(), g.degree_bound()));
  for (const auto& [lam, cl] : f.terms())
    for (const auto& [mu, cm] : g.terms()) {
      if (weight_of(lam) + weight_of(mu) > r.degree_bound()) continue;
      const int len = static_cast<int>(lam.size() + mu.size());
      if (len == 0) {
        r.add({}, checked_mul(cl, cm));
        continue;
      }
      // Coefficient of m_nu: pairs of padded rearrangements summing to the
      // weakly decreasing vector nu itself.
      const auto alphas = padded_arrangements(lam, len);
      const auto betas = padded_arrangements(mu, len);
      std::vector<int> sum(len);
      for (const auto& alpha : alphas)
        for (const auto& beta : betas) {
          bool sorted = true;
          for (int p = 0; p < len; ++p) {
            sum[p] = alpha[p] + beta[p];
            if (p > 0 && sum[p] > sum[p - 1]) {
              sorted = false;
              break;
            }
          }
          if (!sorted) continue;
          Partition nu(sum.begin(), std::find(sum.begin(), sum.end(), 0));
          r.add(nu, checked_mul(cl, cm));
        }
    }
  return r;
}

SymFunc h_to_m(const Partition& lambda, int degree_bound) {
  check_partition(lambda);
  SymFunc acc = SymFunc::one(degree_bound);
  for (int part : lambda) {
    SymFunc hr(degree_bound);
    for (const Partition& mu : partitions_of(part)) hr.add(mu, 1);
    acc = sym_product(acc, hr);
  }
  return acc;
}

SymFunc weak_schur(const AffinePerm& w, const AffinePerm& u) {
  if (w.rank() != u.rank()) throw std::invalid_argument("rank mismatch in weak Schur function");
  const int n = w.rank();
  const int d = w.length() - u.length();
  if (d < 0) return SymFunc(0);
  SymFunc out(d);
  const NilCoxElem au = NilCoxElem::basis(u);
  for (const Partition& lambda : partitions_of_bounded(d, n - 1))
    out.add(lambda, coeff(elem_product(h_lambda(n, lambda), au), w));
  return out;
}

bool CauchyReport::pass() const {
  for (const auto& r : per_degree)
    if (!r.pass) return false;
  return true;
}

namespace {

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

}  // namespace

CauchyReport cauchy_check(int n, int d) {
  CauchyReport report{n, d, {}};
  for (int m = 0; m <= d; ++m) {
    using Key = std::pair<Partition, Partition>;
    std::map<Key, Int> lhs, rhs;
    for (const Partition& lambda : partitions_of_bounded(m, n - 1)) {
      const SymFunc hm = h_to_m(lambda, m);
      for (const auto& [mu, c] : hm.terms())
        if (c != 0) lhs[{mu, lambda}] += c;
    }
    for (const AffinePerm& w : grassmannian_elements(n, m)) {
      const SymFunc strong = strong_schur(w, AffinePerm::identity(n));
      const SymFunc weak = weak_schur(w, AffinePerm::identity(n));
      for (const auto& [p1, c1] : strong.terms())
        for (const auto& [p2, c2] : weak.terms()) rhs[{p1, p2}] += checked_mul(c1, c2);
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    CauchyDegreeResult res{m, lhs == rhs, ""};
    if (!res.pass) {
      std::ostringstream os;
      for (const auto& [key, c] : lhs)
        if (!rhs.count(key) || rhs.at(key) != c)
          os << "m" << partition_str(key.first) << "(x)m" << partition_str(key.second)
             << ": kernel " << c << ", strips " << (rhs.count(key) ? rhs.at(key) : 0) << "; ";
      for (const auto& [key, c] : rhs)
        if (!lhs.count(key))
          os << "m" << partition_str(key.first) << "(x)m" << partition_str(key.second)
             << ": kernel 0, strips " << c << "; ";
      res.detail = os.str();
    }
    report.per_degree.push_back(std::move(res));
  }
  return report;
}

std::map<AffinePerm, Int> strong_expand(const AffinePerm& w, const AffinePerm& u,
                                        CoproductCache* cache) {
  if (w.rank() != u.rank()) throw std::invalid_argument("rank mismatch in strong expansion");
  std::map<AffinePerm, Int> out;
  const int d = w.length() - u.length();
  if (d < 0) return out;
  std::shared_ptr<const TensorElem> owned;
  const TensorElem* delta;
  if (cache) {
    owned = cache->get(w);
    delta = owned.get();
  } else {
    owned = std::make_shared<const TensorElem>(coproduct(w));
    delta = owned.get();
  }
  for (const AffinePerm& v : grassmannian_elements(w.rank(), d))
    out[v] = eval_zero(delta->coeff(u, v));
  return out;
}

std::vector<Partition> partitions_of(int m) { return partitions_of_bounded(m, m); }

namespace {

void partitions_rec(int m, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(m, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(m - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_bounded(int m, int max_part) {
  if (m < 0) throw std::invalid_argument("partition size must be nonnegative");
  std::vector<Partition> out;
  Partition cur;
  if (m == 0) {
    out.push_back(cur);
    return out;
  }
  if (max_part >= 1) partitions_rec(m, max_part, cur, out);
  return out;
}

std::vector<std::vector<int>> compositions_of(int m) {
  if (m < 0) throw std::invalid_argument("composition size must be nonnegative");
  if (m == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= m; ++first)
    for (auto rest : compositions_of(m - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<std::vector<int>> distinct_rearrangements(const Partition& lambda) {
  std::vector<int> v(lambda);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace afflag
