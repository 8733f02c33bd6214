#pragma once

#include <initializer_list>
#include <vector>

#include "afflag/affine_perm.hpp"

namespace afflag::test {

// Element from a word, e.g. P(2, {1, 0}).
inline AffinePerm P(int n, std::initializer_list<int> letters) {
  std::vector<int> v(letters);
  return AffinePerm::from_word(n, v);
}

// Element from a window, e.g. W({-1, 4}).
inline AffinePerm W(std::initializer_list<Int> window) {
  return AffinePerm(std::vector<Int>(window));
}

}  // namespace afflag::test
