#include "afflag/nilhecke.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "afflag/json_io.hpp"

namespace afflag {

NilHeckeElem NilHeckeElem::basis(const AffinePerm& w) {
  return basis(w, SPoly::constant(w.rank(), 1));
}

NilHeckeElem NilHeckeElem::basis(const AffinePerm& w, const SPoly& c) {
  NilHeckeElem x(w.rank());
  x.add(w, c);
  return x;
}

SPoly NilHeckeElem::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? SPoly(rank_) : it->second;
}

NilHeckeElem& NilHeckeElem::add(const AffinePerm& w, const SPoly& c) {
  if (w.rank() != rank_ || c.rank() != rank_)
    throw std::invalid_argument("rank mismatch in nilHecke element");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

NilHeckeElem NilHeckeElem::operator+(const NilHeckeElem& o) const {
  NilHeckeElem r(*this);
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

NilHeckeElem NilHeckeElem::operator-(const NilHeckeElem& o) const {
  NilHeckeElem r(*this);
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

NilHeckeElem NilHeckeElem::scale(const SPoly& p) const {
  NilHeckeElem r(rank_);
  for (const auto& [w, c] : terms_) r.add(w, p * c);
  return r;
}

TensorElem TensorElem::unit(int n) {
  TensorElem t(n);
  t.add(AffinePerm::identity(n), AffinePerm::identity(n), SPoly::constant(n, 1));
  return t;
}

SPoly TensorElem::coeff(const AffinePerm& u, const AffinePerm& v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? SPoly(rank_) : it->second;
}

TensorElem& TensorElem::add(const AffinePerm& u, const AffinePerm& v, const SPoly& c) {
  if (u.rank() != rank_ || v.rank() != rank_ || c.rank() != rank_)
    throw std::invalid_argument("rank mismatch in tensor element");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(std::make_pair(u, v), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

NilHeckeElem rmul_a(const NilHeckeElem& x, int i) {
  const int n = x.rank();
  NilHeckeElem r(n);
  const AffinePerm si = AffinePerm::simple(n, i);
  for (const auto& [w, c] : x.terms()) {
    AffinePerm ws = w * si;
    if (ws.length() > w.length()) r.add(ws, c);
  }
  return r;
}

namespace {

// A_w * lambda by recursion on the canonical reduced word:
// A_{w' s_i} lambda = (A_{w'} (s_i . lambda)) A_i + <alpha_i^v, lambda> A_{w'}.
NilHeckeElem rmul_scalar_basis(const AffinePerm& w, const Weight& lambda) {
  const int n = w.rank();
  if (w.is_identity())
    return NilHeckeElem::basis(w, weight_to_poly(lambda));
  const int i = w.first_right_descent();
  const AffinePerm wp = w * AffinePerm::simple(n, i);
  NilHeckeElem r = rmul_a(rmul_scalar_basis(wp, reflect_weight(i, lambda)), i);
  r.add(wp, SPoly::constant(n, pair_coroot(i, lambda)));
  return r;
}

}  // namespace

NilHeckeElem rmul_scalar(const NilHeckeElem& x, const Weight& lambda) {
  if (x.rank() != lambda.rank()) throw std::invalid_argument("rank mismatch in scalar product");
  NilHeckeElem r(x.rank());
  for (const auto& [w, c] : x.terms()) {
    const NilHeckeElem moved = rmul_scalar_basis(w, lambda);
    for (const auto& [v, q] : moved.terms()) r.add(v, c * q);
  }
  return r;
}

NilHeckeElem rmul_s(const NilHeckeElem& x, int i) {
  return x - rmul_a(rmul_scalar(x, simple_root(x.rank(), i)), i);
}

namespace {

std::vector<int> checked_word(const AffinePerm& w, std::span<const int> word) {
  std::vector<int> letters(word.begin(), word.end());
  if (static_cast<int>(letters.size()) != w.length() ||
      AffinePerm::from_word(w.rank(), letters) != w)
    throw std::invalid_argument("word is not a reduced word of the element");
  return letters;
}

}  // namespace

TensorElem coproduct_from_word(const AffinePerm& w, std::span<const int> word) {
  const int n = w.rank();
  const std::vector<int> letters = checked_word(w, word);
  TensorElem t = TensorElem::unit(n);
  for (int i : letters) {
    const AffinePerm si = AffinePerm::simple(n, i);
    TensorElem next(n);
    for (const auto& [uv, c] : t.terms()) {
      const auto& [u, v] = uv;
      // (A_u (x) A_v)(A_i (x) 1)
      AffinePerm us = u * si;
      if (us.length() > u.length()) next.add(us, v, c);
      // (A_u (x) A_v)(s_i (x) A_i)
      AffinePerm vs = v * si;
      if (vs.length() > v.length()) {
        const NilHeckeElem us = rmul_s(NilHeckeElem::basis(u, c), i);
        for (const auto& [x, q] : us.terms()) next.add(x, vs, q);
      }
    }
    t = std::move(next);
  }
  return t;
}

TensorElem coproduct(const AffinePerm& w) {
  return coproduct_from_word(w, w.canonical_reduced_word());
}

namespace {

// DFS over position subsets, left to right.  x is the product of the
// selected letters (must stay reduced and below u1 in Bruhat order), acc the
// mixed ordered product so far.
void struct_const_rec(const std::vector<int>& letters, size_t p, const AffinePerm& x,
                      const NilHeckeElem& acc, const AffinePerm& u1, const AffinePerm& u2,
                      SPoly& out) {
  if (acc.is_zero()) return;
  if (p == letters.size()) {
    if (x == u1) out += acc.coeff(u2);
    return;
  }
  // Prune when selecting every remaining position cannot reach l(u1).
  if (x.length() + static_cast<int>(letters.size() - p) < u1.length()) return;
  const int i = letters[p];
  struct_const_rec(letters, p + 1, x, rmul_a(acc, i), u1, u2, out);
  AffinePerm xs = x * AffinePerm::simple(x.rank(), i);
  if (xs.length() == x.length() + 1 && bruhat_leq(xs, u1))
    struct_const_rec(letters, p + 1, xs, rmul_s(acc, i), u1, u2, out);
}

}  // namespace

SPoly struct_const_from_word(const AffinePerm& w, std::span<const int> word,
                             const AffinePerm& u1, const AffinePerm& u2) {
  const int n = w.rank();
  if (u1.rank() != n || u2.rank() != n)
    throw std::invalid_argument("rank mismatch in structure constant");
  const std::vector<int> letters = checked_word(w, word);
  SPoly out(n);
  struct_const_rec(letters, 0, AffinePerm::identity(n),
                   NilHeckeElem::basis(AffinePerm::identity(n)), u1, u2, out);
  return out;
}

SPoly struct_const(const AffinePerm& w, const AffinePerm& u1, const AffinePerm& u2) {
  return struct_const_from_word(w, w.canonical_reduced_word(), u1, u2);
}

std::filesystem::path CoproductCache::default_directory() {
  if (const char* env = std::getenv("AFFLAG_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "afflag";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "afflag";
  return std::filesystem::current_path() / ".afflag-cache";
}

namespace {

std::string cache_file_name(const AffinePerm& w) {
  std::ostringstream name;
  name << "coproduct_n" << w.rank() << "_w";
  for (size_t i = 0; i < w.window().size(); ++i)
    name << (i ? "_" : "") << w.window()[i];
  name << ".json";
  return name.str();
}

std::shared_ptr<const TensorElem> load_from_disk(const std::filesystem::path& file,
                                                 const AffinePerm& w) {
  std::ifstream in(file);
  if (!in) return nullptr;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return std::make_shared<const TensorElem>(coproduct_cache_from_json(w, buf.str()));
  } catch (const std::exception&) {
    return nullptr;  // stale or corrupt entry: recompute
  }
}

void store_to_disk(const std::filesystem::path& dir, const AffinePerm& w,
                   const TensorElem& t) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const std::filesystem::path final_path = dir / cache_file_name(w);
  const std::filesystem::path tmp_path =
      final_path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << coproduct_cache_to_json(w, t);
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace

std::shared_ptr<const TensorElem> CoproductCache::get(const AffinePerm& w) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  std::shared_ptr<const TensorElem> result;
  if (dir_) result = load_from_disk(*dir_ / cache_file_name(w), w);
  if (!result) {
    result = std::make_shared<const TensorElem>(coproduct(w));
    if (dir_) store_to_disk(*dir_, w, *result);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.emplace(w, std::move(result));
  return it->second;
}

NilCoxElem cap(const AffinePerm& u, const NilCoxElem& x, CoproductCache* cache) {
  if (u.rank() != x.rank()) throw std::invalid_argument("rank mismatch in cap operator");
  NilCoxElem out(x.rank());
  for (const auto& [w, c] : x.terms()) {
    std::shared_ptr<const TensorElem> owned;
    const TensorElem* delta;
    if (cache) {
      owned = cache->get(w);
      delta = owned.get();
    } else {
      owned = std::make_shared<const TensorElem>(coproduct(w));
      delta = owned.get();
    }
    for (const auto& [uv, p] : delta->terms()) {
      if (uv.first != u) continue;
      if (Int k = eval_zero(p); k != 0) out.add(uv.second, checked_mul(c, k));
    }
  }
  return out;
}

NilCoxElem pieri_cap(int i, const NilCoxElem& x, CoproductCache* cache) {
  if (i < 1) throw std::invalid_argument("Pieri operator index must be positive");
  return cap(AffinePerm::rho(x.rank(), i), x, cache);
}

std::map<std::pair<AffinePerm, AffinePerm>, Int> eval_zero_tensor(const TensorElem& t) {
  std::map<std::pair<AffinePerm, AffinePerm>, Int> out;
  for (const auto& [uv, p] : t.terms())
    if (Int k = eval_zero(p); k != 0) out.emplace(uv, k);
  return out;
}

}  // namespace afflag
