#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <tuple>

#include "afflag/nilhecke.hpp"
#include "afflag/strong_order.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace afflag;
using afflag::test::P;
using afflag::test::W;

namespace {

std::vector<AffinePerm> ball(int n, int max_len) {
  std::vector<AffinePerm> out;
  for (const auto& level : elements_by_length(n, max_len))
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

// Brute-force marked cover oracle: search every pair i <= 0 < j in a window
// wide enough to contain all covers.
std::set<std::tuple<AffinePerm, Int, Int, Int>> brute_marked_covers(const AffinePerm& u) {
  const int n = u.rank();
  const Int bound = static_cast<Int>(n) * (u.length() + 1);
  std::set<std::tuple<AffinePerm, Int, Int, Int>> out;
  for (Int i = -bound; i <= 0; ++i)
    for (Int j = 1; j <= bound; ++j) {
      if (pos_mod(i, n) == pos_mod(j, n)) continue;
      const AffinePerm v = u * AffinePerm::transposition(n, i, j);
      if (v.length() == u.length() - 1) out.insert({v, i, j, u(j)});
    }
  return out;
}

std::vector<int> parts(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

TEST_CASE("marked covers, spot values") {
  const auto covers_s0 = marked_lower_covers(AffinePerm::simple(2, 0));
  REQUIRE(covers_s0.size() == 1);
  CHECK(covers_s0[0].outside == AffinePerm::identity(2));
  CHECK(covers_s0[0].i == 0);
  CHECK(covers_s0[0].j == 1);
  CHECK(covers_s0[0].a == 0);

  CHECK(marked_lower_covers(AffinePerm::simple(2, 1)).empty());

  const auto covers = marked_lower_covers(P(2, {1, 0}));
  REQUIRE(covers.size() == 3);
  // Sorted by decreasing marking.
  CHECK(covers[0].outside == W({0, 3}));
  CHECK(covers[0].i == 0);
  CHECK(covers[0].j == 3);
  CHECK(covers[0].a == 1);
  CHECK(covers[1].outside == W({0, 3}));
  CHECK(covers[1].i == -2);
  CHECK(covers[1].j == 1);
  CHECK(covers[1].a == -1);
  CHECK(covers[2].outside == W({2, 1}));
  CHECK(covers[2].i == 0);
  CHECK(covers[2].j == 1);
  CHECK(covers[2].a == -1);
}

TEST_CASE("marked covers against the brute-force oracle") {
  for (int n : {2, 3})
    for (const AffinePerm& u : ball(n, n == 2 ? 5 : 4)) {
      const auto expected = brute_marked_covers(u);
      std::set<std::tuple<AffinePerm, Int, Int, Int>> got;
      for (const MarkedCover& c : marked_lower_covers(u)) {
        CHECK(c.inside == u);
        CHECK(c.i <= 0);
        CHECK(c.j >= 1);
        CHECK(c.outside == u * AffinePerm::transposition(n, c.i, c.j));
        CHECK(c.a == u(c.j));
        CHECK(c.a == c.outside(c.i));
        got.insert({c.outside, c.i, c.j, c.a});
      }
      CHECK(got == expected);
      CHECK(marked_lower_covers(u).size() == got.size());

      // Marking count formula: one marking per shift of each cover.
      size_t shifts = 0;
      for (const auto& [v, t] : lower_covers(u)) shifts += floor_div(t.b - 1, n);
      CHECK(marked_lower_covers(u).size() == shifts);
    }
}

TEST_CASE("strong strips") {
  const auto w = P(2, {1, 0});
  CHECK(strong_strips(w, 0).size() == 1);
  CHECK(strong_strips(w, 0)[0].inside() == w);
  CHECK(strong_strips(w, 0)[0].outside() == w);
  CHECK(strong_strips(w, 1).size() == 3);

  const auto strips2 = strong_strips(w, 2);
  REQUIRE(strips2.size() == 1);
  CHECK(strips2[0].covers[0].a == 1);
  CHECK(strips2[0].covers[1].a == 0);
  CHECK(strips2[0].outside() == AffinePerm::identity(2));
  CHECK_THROWS_AS(strong_strips(w, -1), std::invalid_argument);
}

TEST_CASE("strip-based Pieri operator") {
  const auto id = AffinePerm::identity(2);
  const auto s0 = AffinePerm::simple(2, 0);
  const auto s1 = AffinePerm::simple(2, 1);
  CHECK(pieri_prime(1, NilCoxElem::basis(s1)).is_zero());
  NilCoxElem expected(2);
  expected.add(s0, 2);
  expected.add(s1, 1);
  CHECK(pieri_prime(1, NilCoxElem::basis(s1 * s0)) == expected);
  CHECK(pieri_prime(2, NilCoxElem::basis(s1 * s0)) == NilCoxElem::basis(id));
  CHECK(pieri_prime(1, expected) ==
        NilCoxElem::basis(id, 2));  // linear extension: only s_0 -> id
}

TEST_CASE("strong tableau counts") {
  const auto id = AffinePerm::identity(2);
  const auto w = P(2, {1, 0});
  CHECK(strong_tableau_count(w, w, parts({})) == 1);
  CHECK(strong_tableau_count(w, id, parts({2})) == 1);
  CHECK(strong_tableau_count(w, id, parts({1, 1})) == 2);
  CHECK(strong_tableau_count(w, id, parts({1})) == 0);  // sizes must sum to l(w)-l(u)
  // Zero parts are transparent.
  CHECK(strong_tableau_count(w, id, parts({1, 0, 1})) == 2);
  CHECK(strong_tableau_count(w, id, parts({0, 2, 0})) == 1);
  CHECK_THROWS_AS(strong_tableau_count(w, id, parts({-1, 3})), std::invalid_argument);
}

TEST_CASE("strong Schur functions") {
  const auto id = AffinePerm::identity(2);
  const auto w = P(2, {1, 0});
  CHECK(strong_schur(w, w) == SymFunc::one(0));

  SymFunc expected(2);
  expected.add({2}, 1);
  expected.add({1, 1}, 2);
  CHECK(strong_schur(w, id) == expected);

  CHECK(strong_schur(AffinePerm::simple(2, 1), id).is_zero());
  CHECK(strong_schur(id, w).is_zero());
}

TEST_CASE("k-Schur functions") {
  CHECK(kschur(2, parts({})) == SymFunc::one(0));
  SymFunc m1(1);
  m1.add({1}, 1);
  CHECK(kschur(2, parts({1})) == m1);
  SymFunc expected(2);
  expected.add({2}, 1);
  expected.add({1, 1}, 2);
  CHECK(kschur(2, parts({1, 1})) == expected);
  CHECK_THROWS_AS(kschur(2, parts({2})), std::invalid_argument);
}

TEST_CASE("partition to 0-Grassmannian bijection, spot values") {
  CHECK(grassmannian_from_partition(2, parts({1})) == AffinePerm::simple(2, 0));
  CHECK(grassmannian_from_partition(2, parts({1, 1})) == P(2, {1, 0}));
  CHECK(grassmannian_from_partition(3, parts({2, 1})) == P(3, {2, 1, 0}));
  CHECK_THROWS_AS(grassmannian_from_partition(3, parts({3})), std::invalid_argument);
  CHECK_THROWS_AS(grassmannian_from_partition(3, parts({1, 2})), std::invalid_argument);
}

TEST_CASE("partition bijection is a degree-wise bijection") {
  for (int n : {2, 3})
    for (int m = 0; m <= 6; ++m) {
      const auto lambdas = partitions_of_bounded(m, n - 1);
      const auto grass = grassmannian_elements(n, m);
      std::set<AffinePerm> images;
      for (const auto& lambda : lambdas) {
        const AffinePerm w = grassmannian_from_partition(n, lambda);
        CHECK(is_grassmannian(w));
        CHECK(w.length() == m);
        images.insert(w);
        CHECK(partition_from_grassmannian(w) == lambda);
      }
      CHECK(images.size() == lambdas.size());  // injective
      CHECK(images == std::set<AffinePerm>(grass.begin(), grass.end()));  // onto
    }
}

TEST_CASE("partition_from_grassmannian rejects other elements") {
  CHECK_THROWS_AS(partition_from_grassmannian(AffinePerm::simple(2, 1)), std::invalid_argument);
  CHECK(partition_from_grassmannian(AffinePerm::identity(3)).empty());
}

TEST_CASE("strips longer than the length are impossible") {
  CHECK(strong_strips(AffinePerm::simple(2, 0), 2).empty());
  CHECK(strong_strips(AffinePerm::identity(3), 1).empty());
}

TEST_CASE("cap and strip operators also agree at rank 4") {
  CoproductCache cache;
  for (const AffinePerm& w : ball(4, 3))
    for (int i = 1; i <= w.length(); ++i)
      CHECK(pieri_cap(i, NilCoxElem::basis(w), &cache) ==
            pieri_prime(i, NilCoxElem::basis(w)));
}

TEST_CASE("strip Pieri operators commute, small sweep") {
  for (int n : {2, 3})
    for (const AffinePerm& w : ball(n, 4)) {
      const NilCoxElem x = NilCoxElem::basis(w);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          CHECK(pieri_prime(i, pieri_prime(j, x)) == pieri_prime(j, pieri_prime(i, x)));
    }
}
