#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridcover/cover.hpp"

#include <fstream>
#include <algorithm>
#include <sstream>

using namespace gridcover;

TEST_CASE("grid enumeration") {
  GridSpec g(1, 2);
  auto pts = grid_points(g);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == GridPoint{0, 0});
  CHECK(pts[1] == GridPoint{0, 1});
  CHECK(pts[2] == GridPoint{1, 0});
  CHECK(pts[3] == GridPoint{1, 1});
  CHECK(GridSpec(2, 3).point_count() == 27);
  CHECK_THROWS_AS(GridSpec(0, 1), std::invalid_argument);
}

TEST_CASE("hyperplane normalization") {
  Hyperplane a({2, 2}, 2);
  Hyperplane b({1, 1}, 1);
  CHECK(a == b);
  // idempotent
  CHECK(Hyperplane(a.coeffs(), a.rhs()) == a);
  // first nonzero coefficient positive
  Hyperplane c({-1, 1}, -2);
  CHECK(c.coeffs() == std::vector<long>{1, -1});
  CHECK(c.rhs() == 2);
  // gcd includes the right-hand side
  Hyperplane d({2, 0}, 4);
  CHECK(d.coeffs() == std::vector<long>{1, 0});
  CHECK(d.rhs() == 2);
  // but a non-divisible rhs is kept
  Hyperplane e({2, 4}, 3);
  CHECK(e.coeffs() == std::vector<long>{2, 4});
  CHECK_THROWS_AS(Hyperplane({0, 0}, 1), std::invalid_argument);
  CHECK(b.contains(GridPoint{0, 1}));
  CHECK_FALSE(b.contains(GridPoint{1, 1}));
  CHECK(b.pretty() == "x1 + x2 = 1");
}

TEST_CASE("coverage counting") {
  CoverFamily f = appendix_cover(2);
  CHECK(coverage_count(f, {1, 1}) == 3);
  CoverFamily empty;
  CHECK(coverage_count(empty, {1, 1}) == 0);
  CoverFamily weighted;
  weighted.add(Hyperplane({1, 0}, 1), 5);
  CHECK(coverage_count(weighted, {1, 0}) == 5);
}

TEST_CASE("verify almost cover") {
  GridSpec g22(2, 2);
  GridPoint origin2{0, 0};
  CoverReport r = verify_almost_cover(g22, 3, appendix_cover(2), origin2);
  CHECK(r.satisfied);
  CHECK(r.excluded_cover == 0);
  CHECK(r.min_cover_excluding == 3);

  GridSpec g23(2, 3);
  CoverReport r3 = verify_almost_cover(g23, 3, appendix_cover(3), GridPoint{0, 0, 0});
  CHECK(r3.satisfied);
  CHECK(r3.excluded_cover == 0);

  // k=1 toy cover of {0,1}^2 \ {0}
  CoverFamily f;
  f.add(Hyperplane({1, 0}, 1));
  f.add(Hyperplane({0, 1}, 1));
  CoverReport r1 = verify_almost_cover(GridSpec(1, 2), 1, f, origin2);
  CHECK(r1.satisfied);

  // an excluded point that gets covered fails even if everything else is fine
  CoverReport r_bad = verify_almost_cover(GridSpec(1, 2), 1, f, GridPoint{1, 0});
  CHECK_FALSE(r_bad.satisfied);

  CHECK_THROWS_AS(verify_almost_cover(g22, 3, appendix_cover(3), origin2),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_almost_cover(g22, 3, appendix_cover(2), GridPoint{3, 0}),
                  std::invalid_argument);
}

TEST_CASE("a deficient family is reported with the failing point") {
  CoverFamily full = appendix_cover(2);
  CoverFamily f;
  for (const auto& [h, c] : full.planes())
    if (!(h == Hyperplane({1, 1}, 2))) f.add(h, c);
  CoverReport r = verify_almost_cover(GridSpec(2, 2), 3, f, {0, 0});
  CHECK_FALSE(r.satisfied);
  // Every point of the removed line x1+x2=2 drops below k.
  auto bad = r.violations();
  REQUIRE(bad.size() == 3);
  CHECK(std::find(bad.begin(), bad.end(), GridPoint{1, 1}) != bad.end());
  for (const auto& [p, c] : r.per_point)
    if (p == GridPoint{1, 1}) CHECK(c == 2);
}

TEST_CASE("two-cover construction") {
  GridSpec g(1, 2);
  CoverFamily f = construct_two_cover(g, {0, 0});
  CHECK(f.total_size() == 3);
  CHECK(f.planes().count(Hyperplane({1, 0}, 1)) == 1);
  CHECK(f.planes().count(Hyperplane({0, 1}, 1)) == 1);
  CHECK(f.planes().count(Hyperplane({1, 1}, 1)) == 1);

  CoverFamily f2 = construct_two_cover(GridSpec(2, 2), {0, 0});
  CHECK(f2.total_size() == 6);
  CHECK(verify_almost_cover(GridSpec(2, 2), 2, f2, {0, 0}).satisfied);

  CoverFamily f3 = construct_two_cover(g, {1, 1});
  CHECK(f3.total_size() == 3);
  CHECK(f3.planes().count(Hyperplane({1, 1}, 1)) == 1);
  CHECK(verify_almost_cover(g, 2, f3, {1, 1}).satisfied);

  CHECK_THROWS_AS(construct_two_cover(GridSpec(1, 1), {0}), std::invalid_argument);
}

TEST_CASE("two-cover sweep over all excluded points") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      GridSpec g(m, n);
      for (const GridPoint& a : grid_points(g)) {
        CoverFamily f = construct_two_cover(g, a);
        CHECK(f.total_size() == m * n + m);
        CHECK(verify_almost_cover(g, 2, f, a).satisfied);
      }
    }
}

TEST_CASE("layered construction") {
  CoverFamily f = construct_layered_cover(GridSpec(1, 2), 3);
  CHECK(f.total_size() == 5);
  CHECK(f.planes().at(Hyperplane({1, 1}, 1)) == 2);
  CHECK(f.planes().at(Hyperplane({1, 1}, 2)) == 1);
  CHECK(f.planes().at(Hyperplane({1, 0}, 1)) == 1);
  CHECK(f.planes().at(Hyperplane({0, 1}, 1)) == 1);

  for (int m = 1; m <= 2; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int k = 2; k <= 4; ++k) {
        GridSpec g(m, n);
        CoverFamily lf = construct_layered_cover(g, k);
        CHECK(lf.total_size() == m * n + m * k * (k - 1) / 2);
        CHECK(verify_almost_cover(g, k, lf, GridPoint(n, 0)).satisfied);
      }
  CHECK_THROWS_AS(construct_layered_cover(GridSpec(1, 2), 1), std::invalid_argument);
}

TEST_CASE("curated families") {
  int sizes[] = {9, 11, 13};
  for (int n = 2; n <= 4; ++n) {
    CoverFamily f = appendix_cover(n);
    CHECK(f.total_size() == sizes[n - 2]);
    CoverReport r = verify_almost_cover(GridSpec(2, n), 3, f, GridPoint(n, 0));
    CHECK(r.satisfied);
    CHECK(r.excluded_cover == 0);
  }
  CHECK(appendix_cover(3).planes().count(Hyperplane({1, 1, -1}, 1)) == 1);
  CHECK(appendix_cover(3).planes().count(Hyperplane({1, 1, 2}, 2)) == 1);
  CHECK(appendix_cover(4).planes().count(Hyperplane({1, -1, 1, 1}, 1)) == 1);
  CHECK(appendix_cover(4).planes().count(Hyperplane({1, 2, 1, 1}, 2)) == 1);
  CHECK_THROWS_AS(appendix_cover(5), std::invalid_argument);
}

TEST_CASE("lower bounds") {
  LowerBound b = lower_bound(2, 3, 3);
  CHECK(b.value == 11);
  CHECK(b.tag == BoundTag::kNullstellensatz);

  b = lower_bound(1, 5, 1);
  CHECK(b.value == 5);
  CHECK(b.tag == BoundTag::kBallSerra);

  b = lower_bound(3, 2, 2);
  CHECK(b.value == 9);
  CHECK(b.tag == BoundTag::kTwoCoverExact);

  // k=4 needs n >= 3 for the stronger bound
  CHECK(lower_bound(1, 2, 4).tag == BoundTag::kBallSerra);
  CHECK(lower_bound(1, 3, 4).tag == BoundTag::kNullstellensatz);
  CHECK(lower_bound(1, 3, 4).value == 3 + 2 * 3 - 1);
  // k=5 has no proven strengthening
  CHECK(lower_bound(1, 5, 5).tag == BoundTag::kBallSerra);
}

TEST_CASE("cover file round-trip and data files match the built-ins") {
  for (int n = 2; n <= 4; ++n) {
    CoverFamily f = appendix_cover(n);
    std::stringstream ss(cover_file_string(f));
    CHECK(parse_cover_file(ss, n) == f);

    std::ifstream data(std::string(GRIDCOVER_DATA_DIR) + "/appendix-n" + std::to_string(n) +
                       ".cover");
    REQUIRE(data.good());
    CHECK(parse_cover_file(data, n) == f);
  }
}

TEST_CASE("cover file errors") {
  std::istringstream missing_eq("1 0 1 x 1\n");
  CHECK_THROWS_AS(parse_cover_file(missing_eq, 2), CoverParseError);
  std::istringstream bad_int("1 z = 1 x 1\n");
  CHECK_THROWS_AS(parse_cover_file(bad_int, 2), CoverParseError);
  std::istringstream zero_normal("0 0 = 1 x 1\n");
  CHECK_THROWS_AS(parse_cover_file(zero_normal, 2), CoverParseError);
  std::istringstream bad_count("1 0 = 1 x 0\n");
  CHECK_THROWS_AS(parse_cover_file(bad_count, 2), CoverParseError);
  std::istringstream ok("# comment\n\n2 2 = 2 x 3\n");
  CoverFamily f = parse_cover_file(ok, 2);
  CHECK(f.planes().at(Hyperplane({1, 1}, 1)) == 3);
}
