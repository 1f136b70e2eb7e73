#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridcover/polynomial.hpp"

#include <functional>
#include <random>
#include <sstream>

using namespace gridcover;

namespace {

Polynomial x_times_y() {
  Polynomial p(2);
  p.add_term({1, 1}, 1);
  return p;
}

// Random dense-ish polynomial with small rational coefficients.
Polynomial random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> expd(0, maxdeg);
  std::uniform_int_distribution<long> numd(-6, 6);
  std::uniform_int_distribution<long> dend(1, 4);
  for (int t = 0; t < nterms; ++t) {
    MultiIndex e(nvars);
    int budget = maxdeg;
    for (int i = 0; i < nvars; ++i) {
      e[i] = expd(rng) % (budget + 1);
      budget -= e[i];
    }
    p.add_term(e, rat(numd(rng), dend(rng)));
  }
  return p;
}

RatPoint random_point(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<long> numd(-3, 3);
  std::uniform_int_distribution<long> dend(1, 3);
  RatPoint a(nvars);
  for (auto& v : a) v = rat(numd(rng), dend(rng));
  return a;
}

}  // namespace

TEST_CASE("grlex order") {
  GrlexLess less;
  CHECK(less({1, 0}, {2, 0}));   // degree first
  CHECK(less({0, 2}, {1, 1}));   // within a degree, lex with x1 heaviest
  CHECK(less({1, 1}, {2, 0}));
  CHECK_FALSE(less({1, 0}, {1, 0}));
}

TEST_CASE("evaluate") {
  Polynomial p = x_times_y();
  CHECK(p.evaluate(GridPoint{2, 3}) == 6);

  Polynomial zero(2);
  CHECK(zero.evaluate(GridPoint{5, 5}) == 0);

  // prod_i (x_i-1)(x_i-2) vanishes whenever some factor does
  Polynomial q = falling_factorial(0, 1, 2, 2) * falling_factorial(1, 1, 2, 2);
  CHECK(q.evaluate(GridPoint{1, 2}) == 0);
  CHECK(q.evaluate(GridPoint{0, 0}) == 4);

  CHECK_THROWS_AS(p.evaluate(GridPoint{1}), std::invalid_argument);
}

TEST_CASE("recenter") {
  Polynomial x2(1);
  x2.add_term({2}, 1);
  Polynomial shifted = x2.recenter(GridPoint{1});  // (x+1)^2
  CHECK(shifted.coeff({0}) == 1);
  CHECK(shifted.coeff({1}) == 2);
  CHECK(shifted.coeff({2}) == 1);

  Polynomial p = x_times_y();
  CHECK(p.recenter(GridPoint{0, 0}) == p);

  Polynomial q = p.recenter(GridPoint{1, 1});  // x1x2 + x1 + x2 + 1
  CHECK(q.coeff({1, 1}) == 1);
  CHECK(q.coeff({1, 0}) == 1);
  CHECK(q.coeff({0, 1}) == 1);
  CHECK(q.coeff({0, 0}) == 1);
}

TEST_CASE("partial derivatives") {
  Polynomial p(2);
  p.add_term({2, 1}, 1);  // x1^2 x2
  Polynomial d = p.partial_derivative({1, 0});
  CHECK(d.coeff({1, 1}) == 2);
  CHECK(d.term_count() == 1);
  CHECK(p.partial_derivative({3, 0}).is_zero());
  CHECK(p.partial_derivative({0, 0}) == p);
}

TEST_CASE("multiplicity") {
  Polynomial p(2);
  p.add_term({2, 1}, 1);
  CHECK(p.multiplicity_at(GridPoint{0, 0}) == 3);

  Polynomial q = pow(falling_factorial(0, 1, 1, 2), 2) * pow(falling_factorial(1, 1, 1, 2), 2);
  CHECK(q.multiplicity_at(GridPoint{1, 1}) == 4);

  Polynomial zero(2);
  CHECK(zero.multiplicity_at(GridPoint{0, 0}) == kInfiniteMultiplicity);

  // m=2, k=3, n=2 canonical factor: prod ((x_i-1)(x_i-2))^3 at a grid point
  // off the axes vanishes to order 3 per variable.
  Polynomial c = pow(falling_factorial(0, 1, 2, 2), 3) * pow(falling_factorial(1, 1, 2, 2), 3);
  CHECK(c.multiplicity_at(GridPoint{1, 2}) == 6);
  // Derivative-vanishing oracle for the same value: all partials of order
  // < 6 vanish at (1,2) and some order-6 partial does not.
  bool low_vanish = true;
  for (int d1 = 0; d1 <= 6; ++d1)
    for (int d2 = 0; d1 + d2 <= 6; ++d2) {
      if (d1 + d2 >= 6) continue;
      if (c.partial_derivative({d1, d2}).evaluate(GridPoint{1, 2}) != 0) low_vanish = false;
    }
  CHECK(low_vanish);
  bool order6_hit = false;
  for (int d1 = 0; d1 <= 6; ++d1) {
    int d2 = 6 - d1;
    if (c.partial_derivative({d1, d2}).evaluate(GridPoint{1, 2}) != 0) order6_hit = true;
  }
  CHECK(order6_hit);
}

TEST_CASE("falling factorial") {
  Polynomial f = falling_factorial(0, 0, 2, 1);  // x(x-1)
  CHECK(f.coeff({2}) == 1);
  CHECK(f.coeff({1}) == -1);

  Polynomial g = falling_factorial(0, 1, 2, 2);  // (x1-1)(x1-2)
  CHECK(g.coeff({2, 0}) == 1);
  CHECK(g.coeff({1, 0}) == -3);
  CHECK(g.coeff({0, 0}) == 2);

  CHECK(falling_factorial(1, 7, 0, 2) == Polynomial::constant(2, 1));
  CHECK_THROWS_AS(falling_factorial(3, 0, 1, 2), std::out_of_range);
}

TEST_CASE("homogeneous component") {
  Polynomial p(1);
  p.add_term({2}, 1);
  p.add_term({1}, 1);
  p.add_term({0}, 1);
  CHECK(p.homogeneous_component(1) == Polynomial::monomial({1}, 1));
  CHECK(p.homogeneous_component(5).is_zero());

  Polynomial q(2);
  q.add_term({1, 1}, 1);
  q.add_term({1, 0}, 1);
  CHECK(q.homogeneous_component(2) == Polynomial::monomial({1, 1}, 1));
}

TEST_CASE("multiplicity is additive over products") {
  std::mt19937_64 rng(20240811);
  int checked = 0;
  while (checked < 120) {
    int nvars = 1 + static_cast<int>(rng() % 3);
    Polynomial p = random_poly(rng, nvars, 3, 4);
    Polynomial q = random_poly(rng, nvars, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    RatPoint a = random_point(rng, nvars);
    CHECK((p * q).multiplicity_at(a) == p.multiplicity_at(a) + q.multiplicity_at(a));
    ++checked;
  }
}

TEST_CASE("multiplicity matches derivative vanishing") {
  std::mt19937_64 rng(987654321);
  int checked = 0;
  while (checked < 110) {
    int nvars = 1 + static_cast<int>(rng() % 3);
    Polynomial p = random_poly(rng, nvars, 4, 5);
    if (p.is_zero()) continue;
    RatPoint a = random_point(rng, nvars);
    int mult = p.multiplicity_at(a);
    REQUIRE(mult >= 0);
    // All derivatives of order < mult vanish at a; at least one of order
    // mult does not.
    bool ok = true;
    std::vector<MultiIndex> idx;
    MultiIndex e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
      if (pos == nvars) {
        idx.push_back(e);
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        e[pos] = v;
        rec(pos + 1, budget - v);
        e[pos] = 0;
      }
    };
    rec(0, mult);
    bool hit = false;
    for (const auto& j : idx) {
      Rat v = p.partial_derivative(j).evaluate(a);
      if (total_degree(j) < mult && v != 0) ok = false;
      if (total_degree(j) == mult && v != 0) hit = true;
    }
    CHECK(ok);
    CHECK(hit);
    ++checked;
  }
}

TEST_CASE("recenter round-trips") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 120; ++t) {
    int nvars = 1 + static_cast<int>(rng() % 3);
    Polynomial p = random_poly(rng, nvars, 6, 6);
    RatPoint a = random_point(rng, nvars);
    RatPoint na(nvars);
    for (int i = 0; i < nvars; ++i) na[i] = -a[i];
    CHECK(p.recenter(a).recenter(na) == p);
  }
}

TEST_CASE("derivative values agree with shifted coefficients") {
  // evaluate(d^j p, a) = j! * coefficient of x^j in recenter(p, a)
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 100; ++t) {
    int nvars = 1 + static_cast<int>(rng() % 2);
    Polynomial p = random_poly(rng, nvars, 5, 5);
    RatPoint a = random_point(rng, nvars);
    MultiIndex j(nvars);
    for (int i = 0; i < nvars; ++i) j[i] = static_cast<int>(rng() % 3);
    Rat lhs = p.partial_derivative(j).evaluate(a);
    Rat fact = 1;
    for (int i = 0; i < nvars; ++i) fact *= Rat(factorial(j[i]));
    Rat rhs = fact * p.recenter(a).coeff(j);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("text format round-trip") {
  Polynomial p(2);
  p.add_term({2, 1}, rat(-3, 2));
  p.add_term({0, 0}, 5);
  std::ostringstream os;
  write_polynomial(os, p);
  std::istringstream is(os.str());
  CHECK(parse_polynomial(is, 2) == p);

  std::istringstream commented("# a comment\n1/2 1 0\n\n-1 0 1 # trailing\n");
  Polynomial q = parse_polynomial(commented, 2);
  CHECK(q.coeff({1, 0}) == rat(1, 2));
  CHECK(q.coeff({0, 1}) == -1);

  std::istringstream bad("1.5 1 0\n");
  CHECK_THROWS_AS(parse_polynomial(bad, 2), std::invalid_argument);
  std::istringstream wrong_arity("1 1\n");
  CHECK_THROWS_AS(parse_polynomial(wrong_arity, 2), std::invalid_argument);
}

TEST_CASE("permute variables") {
  Polynomial p(2);
  p.add_term({2, 0}, 1);
  Polynomial q = p.permute_variables({1, 0});
  CHECK(q == Polynomial::monomial({0, 2}, 1));
}
