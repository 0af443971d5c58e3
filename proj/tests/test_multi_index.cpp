#include "serendipity/multi_index.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "serendipity/combinatorics.hpp"

using namespace serendipity;

TEST_CASE("total degree") {
  CHECK(MultiIndex({0, 0, 0}).total_degree() == 0);
  CHECK(MultiIndex({2, 1, 3}).total_degree() == 6);
  CHECK(MultiIndex({5}).total_degree() == 5);
}

TEST_CASE("superlinear degree ignores linear entries") {
  CHECK(MultiIndex({1, 1, 1}).superlinear_degree() == 0);
  CHECK(MultiIndex({2, 1, 3}).superlinear_degree() == 5);
  // |1_n + 1_n|' = |2_n|' = 2n for n = 2
  const MultiIndex doubled = MultiIndex::ones(2) + MultiIndex::ones(2);
  CHECK(doubled == MultiIndex({2, 2}));
  CHECK(doubled.superlinear_degree() == 4);
}

TEST_CASE("superlinear degree is monotone under the partial order") {
  // exhaustive over the 3-D box {0..4}^3
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        const MultiIndex alpha({a, b, c});
        for (int da = 0; a + da <= 4; ++da)
          for (int db = 0; b + db <= 4; ++db)
            for (int dc = 0; c + dc <= 4; ++dc) {
              const MultiIndex beta({a + da, b + db, c + dc});
              REQUIRE(componentwise_leq(alpha, beta));
              REQUIRE(alpha.superlinear_degree() <= beta.superlinear_degree());
            }
      }
}

TEST_CASE("superlinear degree is permutation symmetric") {
  std::vector<int> entries{0, 1, 2, 5};
  std::sort(entries.begin(), entries.end());
  const int expected = MultiIndex(entries).superlinear_degree();
  do {
    CHECK(MultiIndex(entries).superlinear_degree() == expected);
  } while (std::next_permutation(entries.begin(), entries.end()));
}

TEST_CASE("multiplicity counts equal entries") {
  CHECK(MultiIndex({0, 2, 0}).multiplicity(0) == 2);
  CHECK(MultiIndex({1, 1, 1}).multiplicity(1) == 3);
  CHECK(MultiIndex({3, 1, 2}).multiplicity(1) == 1);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(FaceIndex({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(FaceIndex({-1}), std::invalid_argument);
}

TEST_CASE("face assignment beta_j = min(alpha_j, 2)") {
  CHECK(face_of(MultiIndex({0, 1, 5})) == FaceIndex({0, 1, 2}));
  CHECK(face_of(MultiIndex({1, 1})) == FaceIndex({1, 1}));
  CHECK(face_of(MultiIndex({1, 1})).face_dim() == 0);
  CHECK(face_of(MultiIndex({3, 2})) == FaceIndex({2, 2}));
  CHECK(face_of(MultiIndex({3, 2})).face_dim() == 2);
}

TEST_CASE("all_faces enumerates the 3^n faces") {
  const auto faces = all_faces(2);
  REQUIRE(faces.size() == 9);
  std::set<FaceIndex> unique(faces.begin(), faces.end());
  CHECK(unique.size() == 9);
  int by_dim[3] = {0, 0, 0};
  for (const auto& beta : faces) ++by_dim[beta.face_dim()];
  CHECK(by_dim[0] == 4);  // vertices
  CHECK(by_dim[1] == 4);  // edges
  CHECK(by_dim[2] == 1);  // interior
}

TEST_CASE("block membership") {
  const Block block(MultiIndex({1, 1}));
  CHECK(block.size() == 4);
  const auto members = block.members();
  REQUIRE(members.size() == 4);
  CHECK(std::count(members.begin(), members.end(), MultiIndex({0, 0})) == 1);
  CHECK(std::count(members.begin(), members.end(), MultiIndex({1, 1})) == 1);
  CHECK(Block(MultiIndex({2, 1, 3})).size() == 3 * 2 * 4);
  CHECK(std::is_sorted(members.begin(), members.end()));
}

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(checked_mul(INT64_C(1) << 62, 4), std::overflow_error);
}
