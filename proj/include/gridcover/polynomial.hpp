#pragma once

#include "gridcover/rational.hpp"

#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace gridcover {

using MultiIndex = std::vector<int>;  // exponent vector, one entry per variable
using GridPoint = std::vector<int>;   // integer coordinates
using RatPoint = std::vector<Rat>;

int total_degree(const MultiIndex& e);

// Graded lexicographic order: total degree first, then lex with x1 heaviest.
// This is the one term order used everywhere (canonical display, leading
// monomials, reduction).
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Multiplicity of the zero polynomial at any point.
inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no stored coefficient is zero. Immutable in spirit; the
// mutating operators exist for construction and always restore canonicity.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rat, GrlexLess>;

  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial monomial(const MultiIndex& exponents, const Rat& c);
  static Polynomial variable(int var, int nvars);  // var is 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  // -1 for the zero polynomial.
  int degree() const;
  Rat coeff(const MultiIndex& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& o) const = default;

  void add_term(const MultiIndex& e, const Rat& c);

  Rat evaluate(const RatPoint& a) const;
  Rat evaluate(const GridPoint& a) const;
  // Q with Q(x) = P(x + a).
  Polynomial recenter(const RatPoint& a) const;
  Polynomial recenter(const GridPoint& a) const;
  Polynomial partial_derivative(const MultiIndex& j) const;
  // Minimum total degree among terms of recenter(a); kInfiniteMultiplicity
  // for the zero polynomial.
  int multiplicity_at(const RatPoint& a) const;
  int multiplicity_at(const GridPoint& a) const;
  // Sum of the terms of total degree exactly d.
  Polynomial homogeneous_component(int d) const;
  // Variable relabeling x_i -> x_{perm[i]}; perm must be a permutation.
  Polynomial permute_variables(const std::vector<int>& perm) const;
  // True iff every term's exponent vector dominates e componentwise.
  bool divisible_by_monomial(const MultiIndex& e) const;

  std::string to_string() const;

 private:
  void check_dim(size_t got, const char* what) const;

  int nvars_;
  TermMap terms_;
};

// (x_var - start)(x_var - start - 1)...(x_var - start - count + 1), an
// n-variate polynomial; count = 0 gives the constant 1.
Polynomial falling_factorial(int var, const Rat& start, int count, int nvars);

Polynomial pow(const Polynomial& p, int e);

// Text format: one term per line, "c e1 e2 ... en" with c a rational "p/q"
// or "p"; blank lines and '#' comments ignored. Terms are written leading
// term first (graded lex descending).
void write_polynomial(std::ostream& os, const Polynomial& p);
Polynomial parse_polynomial(std::istream& is, int nvars);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace gridcover
