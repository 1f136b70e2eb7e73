#pragma once

#include "gridcover/cover.hpp"
#include "gridcover/polynomial.hpp"

#include <optional>
#include <vector>

namespace gridcover {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters of the reduced polynomial space on the grid {0..m}^n.
struct SpaceParams {
  int m;
  int n;
  int k;

  SpaceParams(int m_, int n_, int k_) : m(m_), n(n_), k(k_) {
    if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
    if (k < 2) throw std::invalid_argument("need k >= 2");
  }

  GridSpec grid() const { return GridSpec(m, n); }
  // Largest degree a reduced polynomial may have.
  long degree_cap() const { return static_cast<long>(m) * n + static_cast<long>(m + 1) * (k - 1) - 1; }
  // Number of derivatives of order < kk in n variables.
  Int order_count(int kk) const { return binomial(n + kk - 1, n); }
  // Profile length: ((m+1)^n - 1) * M_k + M_{k-1}.
  Int profile_length() const {
    Int pts = int_pow(Int(m + 1), n) - 1;
    return pts * order_count(k) + order_count(k - 1);
  }
};

// Multi-indices with total degree <= maxdeg, graded-lex ascending.
std::vector<MultiIndex> multi_indices_upto(int n, int maxdeg);

// The monomial basis of the reduced space: exponent vectors that decompose
// as e_i = (m+1) l_i + r_i with r_i in {0..m}, sum(l) < k, and total degree
// at most degree_cap(). Graded-lex ascending; the count equals
// profile_length().
std::vector<MultiIndex> reduced_basis(const SpaceParams& sp);

bool is_reduced_monomial(const MultiIndex& e, const SpaceParams& sp);
// Degree within cap and no monomial divisible by a product of k powers
// x_i^(m+1) (indices may repeat).
bool is_reduced(const Polynomial& p, const SpaceParams& sp);

// The unique reduced polynomial p0 such that p - p0 vanishes to order >= k
// at every nonzero grid point and to order >= k-1 at the origin. Computed
// by the leading-monomial subtraction loop against the two generator
// families (pure (m+1)-power products, and the off-origin family carrying
// one (x_i-1)...(x_i-m) per variable).
Polynomial reduce(const Polynomial& p, const SpaceParams& sp);

// Low-order derivative values: for each nonzero grid point in lexicographic
// order, all derivatives of order < k in graded-lex order; then the origin
// block with orders < k-1. Length = profile_length().
using DerivativeProfile = std::vector<Rat>;

// Slot layout of the profile as (point, derivative multi-index) pairs.
struct ProfileLayout {
  std::vector<std::pair<GridPoint, MultiIndex>> slots;
  long position(const GridPoint& b, const MultiIndex& j) const;  // -1 if absent
};
ProfileLayout profile_layout(const SpaceParams& sp);

DerivativeProfile psi(const Polynomial& p, const SpaceParams& sp);

// Integer matrix of psi over reduced_basis: rows follow the basis order,
// columns follow the profile layout.
std::vector<std::vector<Int>> psi_matrix(const SpaceParams& sp, long budget_cap = 500);

struct RankResult {
  long dimension;  // N
  long rank;
  bool is_isomorphism;
};
// Exact rank by fraction-free (Bareiss) elimination. Refuses instances with
// N above budget_cap.
RankResult psi_matrix_rank(const SpaceParams& sp, long budget_cap = 500);

// Fraction-free integer rank; exposed for reuse and cross-checking.
long fraction_free_rank(std::vector<std::vector<Int>> a);

// A polynomial (not reduced in general) whose profile equals `target`,
// built by back-substitution through the triangular interpolation family
//   (x-b)^i * prod_t prod_{s != b_t} (x_t - s)^k.
Polynomial interpolate(const SpaceParams& sp, const DerivativeProfile& target);

// Reduced and vanishing to order >= k at every nonzero grid point.
bool u_membership(const Polynomial& p, const SpaceParams& sp);

// Homogeneous spanning family of the top-degree image space: for every
// tuple l with sum(l) <= k-2, the element
//   prod x_i^(m + (m+1) l_i) * (x_1^d + ... + x_n^d),
// d = (m+1)(k-1) - 1 - (m+1) sum(l). Ordered by (sum(l) asc, lex on l);
// requires n >= k-1, count = C(n+k-2, n).
std::vector<Polynomial> w_basis(const SpaceParams& sp);

// Exact coordinates of q in w_basis, or nullopt when q is outside the span.
// q must be homogeneous of degree degree_cap() (or zero).
std::optional<std::vector<Rat>> expand_in_w(const Polynomial& q, const SpaceParams& sp);

// Homogeneous component of degree degree_cap().
Polynomial phi(const Polynomial& p, const SpaceParams& sp);

// Builds x_1^l * prod_i ((x_i-1)...(x_i-m))^k, reduces it, and returns the
// degree of the result (the contract value is degree_cap()). Requires
// 0 <= l <= k-2, k in {2,3,4}, n >= k-1.
int extremal_degree_check(const SpaceParams& sp, int l);

// prod_i ((x_i-1)...(x_i-m))^k, the canonical symmetric input.
Polynomial canonical_product(const SpaceParams& sp);

// Reduction of canonical_product computed by two independent routes: the
// generic subtraction loop, and the univariate mixed falling-factorial
// expansion (keep factor tuples with sum(l) <= k-1 and degree within cap).
// Disagreement is a hard failure.
Polynomial canonical_P0(const SpaceParams& sp);

}  // namespace gridcover
