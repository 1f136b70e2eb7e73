#pragma once

#include "gridcover/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gridcover {

// Ordered sequence of positive integers.
using Composition = std::vector<int>;

// p_d = x_1^d + ... + x_n^d, d >= 1.
Polynomial power_sum(int d, int n);
// Product of power sums over the parts of lambda.
Polynomial power_sum_product(const Composition& lambda, int n);
// Sum over ordered tuples of distinct indices (i_1,...,i_t) of
// x_{i_1}^{lambda_1} ... x_{i_t}^{lambda_t}. Requires n >= len(lambda).
Polynomial monomial_sym(const Composition& lambda, int n);

// Expansion of monomial_sym(lambda) in products of power sums, keyed by the
// part multiset (sorted descending). Valid as a polynomial identity for
// every number of variables n >= 1.
std::map<Composition, Rat> m_to_p(const Composition& lambda);

// Coefficient of the single power sum p_{sum(lambda)} in m_to_p(lambda):
// (-1)^(t-1) (t-1)! with t = len(lambda).
Rat top_p_coeff(const Composition& lambda);

// Coefficients of the expansion of ((x-1)(x-2)...(x-m))^k in the
// degree-graded basis
//   degree m:            (x-1)(x-2)...(x-m)
//   degree (m+1)l + r:   (x(x-1)...(x-m))^l * (x-(m+1-r))...(x-m),
//                        1 <= l <= q, 0 <= r <= m
// where q = floor(mk/(m+1)). Each basis element is monic of its degree, so
// the expansion is a triangular solve from the top degree down.
struct ATable {
  int m;
  int k;
  int q;
  Rat a0m;                        // coefficient of the degree-m element
  std::vector<std::vector<Rat>> a;  // a[l-1][r] for 1 <= l <= q, 0 <= r <= m

  // a(0, m) = a0m; other l = 0 entries and l > q entries are zero.
  Rat value(int l, int r) const;
};
ATable a_table(int m, int k);

// Cross-check of a_table(m,k) against a_table(m,k-1) via the coefficient
// recurrences; an independent guard on the triangular solve.
bool a_recurrence_check(int m, int k);

// Single-index view of the a-coefficients: b[d] is the coefficient of the
// basis element of degree d + m, for 0 <= d <= (k-1)m; zero outside.
struct BTable {
  int m;
  int k;
  std::vector<Rat> b;
  Rat at(long d) const {
    if (d < 0 || d >= static_cast<long>(b.size())) return Rat(0);
    return b[d];
  }
};
BTable b_table(int m, int k);

Rat harmonic(int m);         // H_m = sum_{1<=i<=m} 1/i
Rat double_harmonic(int m);  // L_m = sum_{1<=i<j<=m} 1/(ij)

// Composition-sum formula: over compositions (l_1..l_t) of k-1,
//   sum (-1)^(t-1) b_0^(n-t) b_{(m+1)l_1-1} prod_{j>=2} b_{(m+1)l_j}.
// Requires k >= 2 and n >= k-1.
Rat y_sum(int m, int k, int n);

// Closed forms, defined for k = 2,3 (m >= 1) and k = 4 (m >= 2).
std::optional<Rat> y_closed(int m, int k, int n);

// Top homogeneous component of the canonical reduced polynomial, assembled
// directly from the b-table: sum over (lambda_1..lambda_n) with
// sum = (m+1)(k-1)-1, exactly one lambda_i = m (mod m+1) and the rest
// divisible by m+1, of b_{lambda_1}...b_{lambda_n} x^(lambda+m).
Polynomial phi_via_b(int m, int k, int n);

}  // namespace gridcover
