#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "afflag/affine_perm.hpp"
#include "afflag/nilcoxeter.hpp"
#include "afflag/spoly.hpp"
#include "afflag/symfunc.hpp"
#include "afflag/weight.hpp"

namespace afflag {

/// Parses the shared element grammar: reduced-word form "s1 s0" or "1,0",
/// window form "[-1,4]", or "id"/"e" for the identity.  Window inputs are
/// validated against the window invariants; diagnostics name the violated
/// invariant.
AffinePerm parse_element(int n, std::string_view text);

/// Parses a partition: "2,1", "[2,1]", "(2,1)", or "[]"/"()"/"" for the
/// empty partition.
std::vector<int> parse_partition(std::string_view text);

/// Window form, e.g. "[-1,4]".
std::string window_string(const AffinePerm& w);

/// Reduced-word form of the canonical word, e.g. "s1 s0"; "id" for the
/// identity.
std::string word_string(const AffinePerm& w);

std::string reflection_string(const Reflection& t);
std::string weight_string(const Weight& lambda);
std::string spoly_string(const SPoly& p);
std::string nilcox_string(const NilCoxElem& x);
std::string partition_string(const std::vector<int>& p);
std::string symfunc_string(const SymFunc& f);

}  // namespace afflag
