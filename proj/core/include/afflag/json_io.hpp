#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "afflag/nilhecke.hpp"
#include "afflag/strong_order.hpp"
#include "afflag/symfunc.hpp"

namespace afflag {

// Deterministic JSON forms: fixed key order, canonical term order, two-space
// indent.  Identical inputs always serialize to identical bytes.

/// List of {"coeff": int, "exps": [int,...]} in the canonical monomial order.
std::string spoly_json(const SPoly& p);

/// Coordinate list.
std::string weight_json(const Weight& lambda);

/// List of {"window": [...], "coeff": int}, window-sorted.
std::string nilcox_json(const NilCoxElem& x);

/// List of {"u": window, "v": window, "poly": SPoly form}.
std::string tensor_json(const TensorElem& t);

/// List of {"v": window, "t": [a, b]}.
std::string covers_json(const std::vector<std::pair<AffinePerm, Reflection>>& covers);

/// List of {"outside": window, "i": int, "j": int, "a": int}.
std::string marked_covers_json(const std::vector<MarkedCover>& covers);

/// List of {"inside": window, "outside": window, "covers": [{"i","j","a"}]}.
std::string strips_json(const std::vector<StrongStrip>& strips);

/// {"degree": d, "terms": [{"partition": [...], "coeff": int}]}, partitions
/// in degree-then-reverse-lex order.
std::string symfunc_json(const SymFunc& f);

/// List of {"v": window, "coeff": int}.
std::string grass_expansion_json(const std::map<AffinePerm, Int>& expansion);

/// On-disk coproduct cache document: {"n":..., "window":..., "coproduct":...}.
std::string coproduct_cache_to_json(const AffinePerm& w, const TensorElem& t);

/// Parses a cache document and validates it against the expected element;
/// throws std::invalid_argument on any mismatch or malformed input.
TensorElem coproduct_cache_from_json(const AffinePerm& w, const std::string& text);

}  // namespace afflag
