#include "afflag/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace afflag {

namespace {

using ojson = nlohmann::ordered_json;

ojson window_value(const AffinePerm& w) { return ojson(w.window()); }

ojson spoly_value(const SPoly& p) {
  ojson terms = ojson::array();
  for (const auto& [m, c] : p.terms()) {
    ojson term;
    term["coeff"] = c;
    term["exps"] = m;
    terms.push_back(std::move(term));
  }
  return terms;
}

ojson tensor_value(const TensorElem& t) {
  ojson terms = ojson::array();
  for (const auto& [uv, p] : t.terms()) {
    ojson term;
    term["u"] = window_value(uv.first);
    term["v"] = window_value(uv.second);
    term["poly"] = spoly_value(p);
    terms.push_back(std::move(term));
  }
  return terms;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string spoly_json(const SPoly& p) { return dump(spoly_value(p)); }

std::string weight_json(const Weight& lambda) { return dump(ojson(lambda.coords())); }

std::string nilcox_json(const NilCoxElem& x) {
  ojson terms = ojson::array();
  for (const auto& [w, c] : x.terms()) {
    ojson term;
    term["window"] = window_value(w);
    term["coeff"] = c;
    terms.push_back(std::move(term));
  }
  return dump(terms);
}

std::string tensor_json(const TensorElem& t) { return dump(tensor_value(t)); }

std::string covers_json(const std::vector<std::pair<AffinePerm, Reflection>>& covers) {
  ojson out = ojson::array();
  for (const auto& [v, t] : covers) {
    ojson item;
    item["v"] = window_value(v);
    item["t"] = ojson::array({t.a, t.b});
    out.push_back(std::move(item));
  }
  return dump(out);
}

std::string marked_covers_json(const std::vector<MarkedCover>& covers) {
  ojson out = ojson::array();
  for (const MarkedCover& c : covers) {
    ojson item;
    item["outside"] = window_value(c.outside);
    item["i"] = c.i;
    item["j"] = c.j;
    item["a"] = c.a;
    out.push_back(std::move(item));
  }
  return dump(out);
}

std::string strips_json(const std::vector<StrongStrip>& strips) {
  ojson out = ojson::array();
  for (const StrongStrip& s : strips) {
    ojson item;
    item["inside"] = window_value(s.inside());
    item["outside"] = window_value(s.outside());
    ojson covers = ojson::array();
    for (const MarkedCover& c : s.covers) {
      ojson cover;
      cover["i"] = c.i;
      cover["j"] = c.j;
      cover["a"] = c.a;
      covers.push_back(std::move(cover));
    }
    item["covers"] = std::move(covers);
    out.push_back(std::move(item));
  }
  return dump(out);
}

std::string symfunc_json(const SymFunc& f) {
  ojson out;
  out["degree"] = f.degree_bound();
  ojson terms = ojson::array();
  for (const auto& [p, c] : f.terms()) {
    ojson term;
    term["partition"] = p;
    term["coeff"] = c;
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return dump(out);
}

std::string grass_expansion_json(const std::map<AffinePerm, Int>& expansion) {
  ojson out = ojson::array();
  for (const auto& [v, c] : expansion) {
    ojson item;
    item["v"] = window_value(v);
    item["coeff"] = c;
    out.push_back(std::move(item));
  }
  return dump(out);
}

std::string coproduct_cache_to_json(const AffinePerm& w, const TensorElem& t) {
  ojson out;
  out["n"] = w.rank();
  out["window"] = window_value(w);
  out["coproduct"] = tensor_value(t);
  return dump(out);
}

TensorElem coproduct_cache_from_json(const AffinePerm& w, const std::string& text) {
  const ojson doc = ojson::parse(text);
  const int n = w.rank();
  if (!doc.is_object() || doc.value("n", -1) != n ||
      doc.at("window").get<std::vector<Int>>() != w.window())
    throw std::invalid_argument("cache document does not match the requested element");
  TensorElem t(n);
  for (const ojson& term : doc.at("coproduct")) {
    AffinePerm u(term.at("u").get<std::vector<Int>>());
    AffinePerm v(term.at("v").get<std::vector<Int>>());
    SPoly p(n);
    for (const ojson& mono : term.at("poly")) {
      Monomial m = mono.at("exps").get<Monomial>();
      p.add_term(m, mono.at("coeff").get<Int>());
    }
    t.add(u, v, p);
  }
  return t;
}

}  // namespace afflag
