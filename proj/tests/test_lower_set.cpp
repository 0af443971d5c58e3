#include "serendipity/lower_set.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "serendipity/combinatorics.hpp"

using namespace serendipity;

namespace {

// independent oracle: brute-force scan of the full box {0..cap}^n with
// the superlinear-degree filter applied directly
std::set<MultiIndex> brute_force_serendipity(int n, int r) {
  const int cap = std::max(1, r);
  std::set<MultiIndex> out;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  while (true) {
    if (MultiIndex(alpha).superlinear_degree() <= r) out.insert(MultiIndex(alpha));
    int j = n - 1;
    while (j >= 0 && alpha[static_cast<std::size_t>(j)] == cap) alpha[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++alpha[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

TEST_CASE("univariate S_r is the full degree range") {
  const LowerSet s = serendipity_set(1, 3);
  REQUIRE(s.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(s.contains(MultiIndex({k})));
}

TEST_CASE("S_2 in two variables has the expected 8 members") {
  const LowerSet s = serendipity_set(2, 2);
  const std::set<MultiIndex> expected = brute_force_serendipity(2, 2);
  REQUIRE(expected.size() == 8);
  REQUIRE(s.size() == 8);
  for (const auto& alpha : expected) CHECK(s.contains(alpha));
  // the listing from the definition: {0,1}^2 plus (2,0),(0,2),(2,1),(1,2)
  CHECK(s.contains(MultiIndex({2, 0})));
  CHECK(s.contains(MultiIndex({1, 2})));
  CHECK_FALSE(s.contains(MultiIndex({2, 2})));
}

TEST_CASE("order 1 admits only the multilinear box") {
  const LowerSet s = serendipity_set(2, 1);
  CHECK(s.size() == 4);
  for (const auto& alpha : s.members()) CHECK(alpha.superlinear_degree() == 0);
}

TEST_CASE("serendipity_set matches the brute-force oracle") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 7; ++r) {
      const LowerSet s = serendipity_set(n, r);
      const auto expected = brute_force_serendipity(n, r);
      REQUIRE(s.size() == expected.size());
      for (const auto& alpha : expected) REQUIRE(s.contains(alpha));
    }
}

TEST_CASE("downward closure holds exhaustively for n <= 4, r <= 10") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 10; ++r) {
      const LowerSet s = serendipity_set(n, r);
      REQUIRE(LowerSet::is_downward_closed(n, s.members()));
      REQUIRE(s.contains(MultiIndex::zeros(n)));
    }
}

TEST_CASE("cardinality equals the dimension formula for n <= 4, r <= 10") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 10; ++r)
      REQUIRE(static_cast<std::int64_t>(serendipity_set(n, r).size()) ==
              serendipity_dimension(n, r));
}

TEST_CASE("dimension formula spot values") {
  CHECK(serendipity_dimension(2, 2) == 8);
  CHECK(serendipity_dimension(2, 4) == 17);
  CHECK(serendipity_dimension(3, 2) == 20);
  for (int r = 1; r <= 10; ++r) CHECK(serendipity_dimension(1, r) == r + 1);
}

TEST_CASE("membership cap: entries never exceed max(1, r)") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 6; ++r) {
      const LowerSet s = serendipity_set(n, r);
      for (const auto& alpha : s.members())
        for (int j = 0; j < n; ++j) REQUIRE(alpha[j] <= std::max(1, r));
    }
}

TEST_CASE("face counts") {
  CHECK(face_count(3, 0) == 8);
  CHECK(face_count(3, 1) == 12);
  CHECK(face_count(2, 2) == 1);
  CHECK_THROWS_AS(face_count(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(face_count(2, -1), std::invalid_argument);
  // sum over all dimensions: 3^n faces
  for (int n = 1; n <= 5; ++n) {
    std::int64_t total = 0;
    std::int64_t cube = 1;
    for (int d = 0; d <= n; ++d) total += face_count(n, d);
    for (int i = 0; i < n; ++i) cube *= 3;
    CHECK(total == cube);
  }
}

TEST_CASE("face partition is a partition with the stated cell sizes") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 6; ++r) {
      const auto cells = face_partition(n, r);
      const LowerSet s = serendipity_set(n, r);
      std::size_t covered = 0;
      std::set<MultiIndex> seen;
      for (const auto& [beta, members] : cells) {
        const int d = beta.face_dim();
        const std::int64_t expected = r >= 2 * d ? binomial(r - d, d) : 0;
        REQUIRE(static_cast<std::int64_t>(members.size()) == expected);
        covered += members.size();
        for (const auto& alpha : members) {
          REQUIRE(face_of(alpha) == beta);
          REQUIRE(seen.insert(alpha).second);  // pairwise disjoint
          REQUIRE(s.contains(alpha));
        }
      }
      CHECK(covered == s.size());
    }
}

TEST_CASE("face partition named cells") {
  const auto cells = face_partition(2, 4);
  CHECK(cells.at(FaceIndex({2, 1})).size() == 3);  // C(3,1)
  CHECK(cells.at(FaceIndex({2, 2})).size() == 1);  // C(2,2)
  // vertex cells hold exactly the vertex index itself
  for (const auto& [beta, members] : cells) {
    if (beta.face_dim() != 0) continue;
    REQUIRE(members.size() == 1);
    CHECK(members.front() == MultiIndex(beta.entries()));
  }
}

TEST_CASE("boundary points") {
  // n = 1: only the top index survives
  const auto b1 = boundary_points(serendipity_set(1, 4));
  REQUIRE(b1.size() == 1);
  CHECK(b1.front() == MultiIndex({4}));

  // in the 2x2 block only (0,0) survives the diagonal shift:
  // (0,0)+(1,1) = (1,1) stays inside, every other member leaves
  const LowerSet block(2, Block(MultiIndex({1, 1})).members());
  const auto bb = boundary_points(block);
  CHECK(bb.size() == 3);
  CHECK(std::find(bb.begin(), bb.end(), MultiIndex({0, 0})) == bb.end());
  CHECK(std::find(bb.begin(), bb.end(), MultiIndex({1, 1})) != bb.end());

  // S_2 in 2-D: (0,0), (1,0), (0,1) are interior
  const auto b2 = boundary_points(serendipity_set(2, 2));
  const std::set<MultiIndex> boundary(b2.begin(), b2.end());
  CHECK_FALSE(boundary.count(MultiIndex({0, 0})));
  CHECK_FALSE(boundary.count(MultiIndex({1, 0})));
  CHECK_FALSE(boundary.count(MultiIndex({0, 1})));
  CHECK(boundary.count(MultiIndex({1, 1})));
  CHECK(boundary.count(MultiIndex({2, 1})));
  CHECK(boundary.size() == 5);
}

TEST_CASE("guard rails and validation") {
  CHECK_THROWS_AS(serendipity_set(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(serendipity_set(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(serendipity_set(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(serendipity_set(2, 17), std::invalid_argument);
  Limits raised;
  raised.max_n = 9;
  CHECK_NOTHROW(serendipity_set(9, 2, raised));
  // constructing a non-closed set throws
  CHECK_THROWS_AS(LowerSet(2, {MultiIndex({0, 0}), MultiIndex({1, 1})}), std::invalid_argument);
  CHECK_NOTHROW(LowerSet(2, Block(MultiIndex({2, 1})).members()));
}
