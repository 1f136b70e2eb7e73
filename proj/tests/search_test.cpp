#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridcover/search.hpp"

#include <algorithm>

using namespace gridcover;

TEST_CASE("candidate enumeration on the boolean square") {
  CandidateSet c = enumerate_candidates(GridSpec(1, 2), {0, 0});
  REQUIRE(c.planes.size() == 3);
  // ordered by coefficient magnitude sum, then coefficients, then rhs
  CHECK(c.planes[0] == Hyperplane({0, 1}, 1));
  CHECK(c.planes[1] == Hyperplane({1, 0}, 1));
  CHECK(c.planes[2] == Hyperplane({1, 1}, 1));
  for (const auto& h : c.planes) CHECK_FALSE(h.contains(GridPoint{0, 0}));
}

TEST_CASE("candidate enumeration covers the curated planes") {
  CandidateSet c = enumerate_candidates(GridSpec(2, 2), {0, 0});
  CoverFamily fam = appendix_cover(2);
  for (const auto& [h, cnt] : fam.planes())
    CHECK(std::find(c.planes.begin(), c.planes.end(), h) != c.planes.end());
  // no duplicates after normalization
  for (size_t i = 0; i + 1 < c.planes.size(); ++i)
    for (size_t j = i + 1; j < c.planes.size(); ++j) CHECK_FALSE(c.planes[i] == c.planes[j]);
  // incidence lists point at covered grid points only
  auto pts = grid_points(GridSpec(2, 2));
  for (size_t i = 0; i < c.planes.size(); ++i)
    for (int p : c.incidence[i]) CHECK(c.planes[i].contains(pts[p]));
}

TEST_CASE("candidate enumeration in one dimension") {
  CandidateSet c = enumerate_candidates(GridSpec(1, 1), {0});
  REQUIRE(c.planes.size() == 1);
  CHECK(c.planes[0] == Hyperplane({1}, 1));

  CandidateSet c3 = enumerate_candidates(GridSpec(3, 1), {1});
  REQUIRE(c3.planes.size() == 3);
}

TEST_CASE("find_cover on tiny instances") {
  GridSpec g(1, 2);
  GridPoint origin{0, 0};

  CHECK_FALSE(find_cover(g, 1, 1, origin).has_value());

  auto found = find_cover(g, 1, 2, origin);
  REQUIRE(found.has_value());
  CHECK(found->total_size() == 2);
  CHECK(found->planes().count(Hyperplane({1, 0}, 1)) == 1);
  CHECK(found->planes().count(Hyperplane({0, 1}, 1)) == 1);
  CHECK(verify_almost_cover(g, 1, *found, origin).satisfied);
}

TEST_CASE("find_cover matches the curated size") {
  GridSpec g(2, 2);
  GridPoint origin{0, 0};
  auto found = find_cover(g, 3, 9, origin);
  REQUIRE(found.has_value());
  CHECK(found->total_size() == 9);
  CHECK(verify_almost_cover(g, 3, *found, origin).satisfied);
}

TEST_CASE("find_cover determinism") {
  GridSpec g(2, 2);
  GridPoint origin{0, 0};
  auto a = find_cover(g, 2, 6, origin);
  auto b = find_cover(g, 2, 6, origin);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}

TEST_CASE("pruning soundness") {
  GridSpec g(1, 2);
  GridPoint origin{0, 0};
  for (int k = 1; k <= 3; ++k)
    for (int size = 0; size <= 8; ++size) {
      auto pruned = find_cover(g, k, size, origin, {}, nullptr, true);
      auto plain = find_cover(g, k, size, origin, {}, nullptr, false);
      CHECK(pruned.has_value() == plain.has_value());
      if (pruned && plain) CHECK(*pruned == *plain);
    }
}

TEST_CASE("search budget is enforced") {
  GridSpec g(2, 2);
  SearchLimits tiny{5};
  CHECK_THROWS_AS(find_cover(g, 3, 9, {0, 0}, tiny), BudgetExceeded);
}

TEST_CASE("excluded point stays uncovered in every witness") {
  GridSpec g(1, 2);
  for (const GridPoint& a : grid_points(g)) {
    auto found = find_cover(g, 2, 3, a);
    REQUIRE(found.has_value());
    CHECK(coverage_count(*found, a) == 0);
    CHECK(verify_almost_cover(g, 2, *found, a).satisfied);
  }
}

TEST_CASE("certify small exact values") {
  SearchStats stats;
  Certificate c = certify(2, 2, 3, {}, &stats);
  CHECK(c.value == 9);
  CHECK(c.status == CertStatus::kExact);
  CHECK(c.lower.tag == BoundTag::kNullstellensatz);
  CHECK(verify_almost_cover(GridSpec(2, 2), 3, c.witness, {0, 0}).satisfied);
  CHECK(stats.nodes > 0);

  for (int m = 1; m <= 3; ++m) {
    Certificate c2 = certify(m, 2, 2);
    CHECK(c2.value == 3 * m);
    CHECK(c2.status == CertStatus::kExact);
  }

  Certificate c3 = certify(1, 2, 3);
  CHECK(c3.value == 5);
  CHECK(c3.status == CertStatus::kExact);

  // one dimension: k copies of each point-plane
  Certificate c4 = certify(2, 1, 3);
  CHECK(c4.value == 6);
  CHECK(c4.status == CertStatus::kExact);

  // k=1 axis family
  Certificate c5 = certify(2, 3, 1);
  CHECK(c5.value == 6);
  CHECK(c5.status == CertStatus::kExact);
}
