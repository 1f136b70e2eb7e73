#include "gridcover/nss.hpp"

#include "gridcover/symfun.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace gridcover {

std::vector<MultiIndex> multi_indices_upto(int n, int maxdeg) {
  std::vector<MultiIndex> out;
  if (maxdeg < 0) return out;
  MultiIndex e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == n) {
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      e[pos] = v;
      rec(pos + 1, budget - v);
      e[pos] = 0;
    }
  };
  rec(0, maxdeg);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

namespace {

// e_i = (m+1) l_i + r_i; returns sum(l_i).
int power_level(const MultiIndex& e, int m) {
  int L = 0;
  for (int x : e) L += x / (m + 1);
  return L;
}

bool all_residues_maximal(const MultiIndex& e, int m) {
  for (int x : e)
    if (x % (m + 1) != m) return false;
  return true;
}

}  // namespace

std::vector<MultiIndex> reduced_basis(const SpaceParams& sp) {
  long cap = sp.degree_cap();
  std::vector<MultiIndex> out;
  MultiIndex e(sp.n, 0);
  // Enumerate by (l, r) decomposition; the map to exponents is injective.
  std::function<void(int, int, long)> rec = [&](int pos, int lbudget, long degleft) {
    if (pos == sp.n) {
      out.push_back(e);
      return;
    }
    for (int l = 0; l <= lbudget; ++l) {
      for (int r = 0; r <= sp.m; ++r) {
        long d = static_cast<long>(sp.m + 1) * l + r;
        if (d > degleft) break;
        e[pos] = static_cast<int>(d);
        rec(pos + 1, lbudget - l, degleft - d);
      }
    }
    e[pos] = 0;
  };
  rec(0, sp.k - 1, cap);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

bool is_reduced_monomial(const MultiIndex& e, const SpaceParams& sp) {
  if (static_cast<int>(e.size()) != sp.n) throw std::invalid_argument("dimension mismatch");
  return power_level(e, sp.m) < sp.k && total_degree(e) <= sp.degree_cap();
}

bool is_reduced(const Polynomial& p, const SpaceParams& sp) {
  if (p.nvars() != sp.n) throw std::invalid_argument("dimension mismatch");
  for (const auto& [e, c] : p.terms())
    if (!is_reduced_monomial(e, sp)) return false;
  return true;
}

Polynomial reduce(const Polynomial& p, const SpaceParams& sp) {
  if (p.nvars() != sp.n) throw std::invalid_argument("dimension mismatch");
  const int m = sp.m, n = sp.n, k = sp.k;
  Polynomial r = p;
  while (true) {
    // Offending monomials: level >= k (divisible by k powers x^(m+1)), or
    // level == k-1 with every residue equal to m (the top-degree family).
    // The graded-lex largest offender is eliminated first; the generator
    // subtracted below is monic with that exact leading monomial, so every
    // step replaces it by strictly smaller-degree terms.
    const MultiIndex* off = nullptr;
    bool form1 = false;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      int L = power_level(it->first, m);
      if (L >= k) {
        off = &it->first;
        form1 = true;
        break;
      }
      if (L == k - 1 && all_residues_maximal(it->first, m)) {
        off = &it->first;
        form1 = false;
        break;
      }
    }
    if (!off) return r;
    MultiIndex e = *off;
    Rat c = r.coeff(e);
    Polynomial gen(n);
    if (form1) {
      // Pick k factors x_i(x_i-1)...(x_i-m) greedily from the left; the
      // leftover exponent stays as a plain monomial factor.
      std::vector<int> counts(n, 0);
      int need = k;
      for (int i = 0; i < n && need > 0; ++i) {
        counts[i] = std::min(e[i] / (m + 1), need);
        need -= counts[i];
      }
      MultiIndex rest(n);
      for (int i = 0; i < n; ++i) rest[i] = e[i] - (m + 1) * counts[i];
      gen = Polynomial::monomial(rest, 1);
      for (int i = 0; i < n; ++i)
        if (counts[i] > 0) gen *= pow(falling_factorial(i, 0, m + 1, n), counts[i]);
    } else {
      gen = Polynomial::constant(n, 1);
      for (int i = 0; i < n; ++i) {
        gen *= falling_factorial(i, 1, m, n);
        int l = e[i] / (m + 1);
        if (l > 0) gen *= pow(falling_factorial(i, 0, m + 1, n), l);
      }
    }
    assert(gen.coeff(e) == 1);
    r -= c * gen;
  }
}

ProfileLayout profile_layout(const SpaceParams& sp) {
  ProfileLayout layout;
  auto pts = grid_points(sp.grid());
  auto full = multi_indices_upto(sp.n, sp.k - 1);
  auto origin_block = multi_indices_upto(sp.n, sp.k - 2);
  for (const auto& q : pts) {
    if (is_origin(q)) continue;
    for (const auto& j : full) layout.slots.emplace_back(q, j);
  }
  GridPoint origin(sp.n, 0);
  for (const auto& j : origin_block) layout.slots.emplace_back(origin, j);
  return layout;
}

long ProfileLayout::position(const GridPoint& b, const MultiIndex& j) const {
  for (size_t i = 0; i < slots.size(); ++i)
    if (slots[i].first == b && slots[i].second == j) return static_cast<long>(i);
  return -1;
}

DerivativeProfile psi(const Polynomial& p, const SpaceParams& sp) {
  if (p.nvars() != sp.n) throw std::invalid_argument("dimension mismatch");
  auto pts = grid_points(sp.grid());
  auto full = multi_indices_upto(sp.n, sp.k - 1);
  auto origin_block = multi_indices_upto(sp.n, sp.k - 2);
  // One derivative polynomial per multi-index, shared across points.
  std::map<MultiIndex, Polynomial, GrlexLess> derivs;
  for (const auto& j : full) derivs.emplace(j, p.partial_derivative(j));
  DerivativeProfile out;
  for (const auto& q : pts) {
    if (is_origin(q)) continue;
    for (const auto& j : full) out.push_back(derivs.at(j).evaluate(q));
  }
  GridPoint origin(sp.n, 0);
  for (const auto& j : origin_block) out.push_back(derivs.at(j).evaluate(origin));
  return out;
}

std::vector<std::vector<Int>> psi_matrix(const SpaceParams& sp, long budget_cap) {
  Int n_big = sp.profile_length();
  if (n_big > budget_cap) {
    std::ostringstream os;
    os << "profile length " << n_big.get_str() << " exceeds budget cap " << budget_cap;
    throw BudgetExceeded(os.str());
  }
  long N = n_big.get_si();
  auto basis = reduced_basis(sp);
  if (static_cast<long>(basis.size()) != N)
    throw std::logic_error("reduced basis count disagrees with the profile length");
  auto layout = profile_layout(sp);
  std::vector<std::vector<Int>> a(N, std::vector<Int>(N));
  for (long row = 0; row < N; ++row) {
    const MultiIndex& e = basis[row];
    for (long col = 0; col < N; ++col) {
      const auto& [q, j] = layout.slots[col];
      // d^j x^e evaluated at q: prod falling(e_i, j_i) * q_i^(e_i - j_i).
      Int v = 1;
      for (int i = 0; i < sp.n && v != 0; ++i) {
        if (e[i] < j[i]) {
          v = 0;
          break;
        }
        v *= falling_product(e[i], j[i]);
        if (e[i] > j[i]) v *= int_pow(Int(q[i]), e[i] - j[i]);
      }
      a[row][col] = v;
    }
  }
  return a;
}

long fraction_free_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  long rows = static_cast<long>(a.size());
  long cols = static_cast<long>(a[0].size());
  long rank = 0;
  Int prev = 1;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (long r = rank + 1; r < rows; ++r) {
      for (long c = col + 1; c < cols; ++c) {
        Int num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        // The one-step cross-multiplication is divisible by the previous
        // pivot (Sylvester identity); anything else is a hard failure.
        if (prev != 1 && !mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("fraction-free elimination: inexact division");
        mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

RankResult psi_matrix_rank(const SpaceParams& sp, long budget_cap) {
  auto a = psi_matrix(sp, budget_cap);
  long n = static_cast<long>(a.size());
  long rank = fraction_free_rank(std::move(a));
  return {n, rank, rank == n};
}

namespace {

// (x - b)^i * prod_t prod_{s in {0..m} \ {b_t}} (x_t - s)^k. Derivatives of
// order < |i| vanish on the whole grid; order-|i| derivatives vanish except
// d^i at b itself.
Polynomial interpolation_element(const SpaceParams& sp, const MultiIndex& i, const GridPoint& b) {
  Polynomial p = Polynomial::constant(sp.n, 1);
  for (int t = 0; t < sp.n; ++t) {
    if (i[t] > 0) p *= pow(Polynomial::variable(t, sp.n) - Polynomial::constant(sp.n, b[t]), i[t]);
    for (int s = 0; s <= sp.m; ++s)
      if (s != b[t]) p *= pow(Polynomial::variable(t, sp.n) - Polynomial::constant(sp.n, s), sp.k);
  }
  return p;
}

}  // namespace

Polynomial interpolate(const SpaceParams& sp, const DerivativeProfile& target) {
  Int n_big = sp.profile_length();
  if (Int(static_cast<long>(target.size())) != n_big)
    throw std::invalid_argument("profile length mismatch");
  auto layout = profile_layout(sp);
  std::map<std::pair<GridPoint, MultiIndex>, long> pos;
  for (size_t i = 0; i < layout.slots.size(); ++i) pos[layout.slots[i]] = static_cast<long>(i);

  auto pts = grid_points(sp.grid());
  Polynomial acc(sp.n);
  // Stages by derivative order; within a stage, elements only touch their
  // own slot, so plain front-substitution suffices.
  for (int d = 0; d <= sp.k - 1; ++d) {
    for (const auto& b : pts) {
      if (d == sp.k - 1 && is_origin(b)) continue;
      for (const auto& j : multi_indices_upto(sp.n, d)) {
        if (total_degree(j) != d) continue;
        long slot = pos.at({b, j});
        Rat want = target[slot];
        Rat have = acc.partial_derivative(j).evaluate(b);
        if (want == have) continue;
        Polynomial elem = interpolation_element(sp, j, b);
        Rat diag = elem.partial_derivative(j).evaluate(b);
        acc += ((want - have) / diag) * elem;
      }
    }
  }
  return acc;
}

bool u_membership(const Polynomial& p, const SpaceParams& sp) {
  if (!is_reduced(p, sp)) return false;
  for (const GridPoint& q : grid_points(sp.grid())) {
    if (is_origin(q)) continue;
    if (p.multiplicity_at(q) < sp.k) return false;
  }
  return true;
}

std::vector<Polynomial> w_basis(const SpaceParams& sp) {
  if (sp.n < sp.k - 1) throw std::invalid_argument("w basis requires n >= k-1");
  std::vector<std::pair<int, MultiIndex>> ls;  // (sum, l) for ordering
  MultiIndex l(sp.n, 0);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == sp.n) {
      ls.emplace_back(total_degree(l), l);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      l[pos] = v;
      rec(pos + 1, budget - v);
      l[pos] = 0;
    }
  };
  rec(0, sp.k - 2);
  std::sort(ls.begin(), ls.end());
  std::vector<Polynomial> out;
  for (const auto& [sum, lv] : ls) {
    long d = static_cast<long>(sp.m + 1) * (sp.k - 1) - 1 - static_cast<long>(sp.m + 1) * sum;
    Polynomial elem(sp.n);
    MultiIndex e(sp.n);
    for (int i = 0; i < sp.n; ++i) {
      for (int t = 0; t < sp.n; ++t) e[t] = sp.m + (sp.m + 1) * lv[t];
      e[i] += static_cast<int>(d);
      elem.add_term(e, 1);
    }
    out.push_back(std::move(elem));
  }
  return out;
}

std::optional<std::vector<Rat>> expand_in_w(const Polynomial& q, const SpaceParams& sp) {
  if (q.nvars() != sp.n) throw std::invalid_argument("dimension mismatch");
  long cap = sp.degree_cap();
  for (const auto& [e, c] : q.terms())
    if (total_degree(e) != cap)
      throw std::invalid_argument("expand_in_w needs a homogeneous input of top degree");
  auto basis = w_basis(sp);
  size_t nb = basis.size();
  // Row per monomial appearing anywhere, column per basis element, then an
  // exact Gaussian solve of B c = q.
  std::map<MultiIndex, size_t, GrlexLess> rows;
  auto row_of = [&rows](const MultiIndex& e) {
    return rows.emplace(e, rows.size()).first->second;
  };
  for (const auto& b : basis)
    for (const auto& [e, c] : b.terms()) row_of(e);
  for (const auto& [e, c] : q.terms()) row_of(e);
  size_t nr = rows.size();
  std::vector<std::vector<Rat>> mat(nr, std::vector<Rat>(nb + 1, Rat(0)));
  for (size_t col = 0; col < nb; ++col)
    for (const auto& [e, c] : basis[col].terms()) mat[row_of(e)][col] = c;
  for (const auto& [e, c] : q.terms()) mat[row_of(e)][nb] = c;

  std::vector<long> pivot_row_of_col(nb, -1);
  size_t prow = 0;
  for (size_t col = 0; col < nb && prow < nr; ++col) {
    size_t piv = prow;
    while (piv < nr && mat[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(mat[prow], mat[piv]);
    Rat inv = mat[prow][col];
    for (size_t c = col; c <= nb; ++c) mat[prow][c] /= inv;
    for (size_t r = 0; r < nr; ++r) {
      if (r == prow || mat[r][col] == 0) continue;
      Rat f = mat[r][col];
      for (size_t c = col; c <= nb; ++c) mat[r][c] -= f * mat[prow][c];
    }
    pivot_row_of_col[col] = static_cast<long>(prow);
    ++prow;
  }
  // Rows with no pivot must have a zero right-hand side, otherwise q is
  // outside the span.
  for (size_t r = prow; r < nr; ++r)
    if (mat[r][nb] != 0) return std::nullopt;
  std::vector<Rat> coeffs(nb, Rat(0));
  for (size_t col = 0; col < nb; ++col)
    if (pivot_row_of_col[col] >= 0) coeffs[col] = mat[pivot_row_of_col[col]][nb];
  // Exact verification; the solve is only trusted when the recombination
  // reproduces q.
  Polynomial check(sp.n);
  for (size_t col = 0; col < nb; ++col) check += coeffs[col] * basis[col];
  if (!(check == q)) return std::nullopt;
  return coeffs;
}

Polynomial phi(const Polynomial& p, const SpaceParams& sp) {
  if (p.nvars() != sp.n) throw std::invalid_argument("dimension mismatch");
  return p.homogeneous_component(static_cast<int>(sp.degree_cap()));
}

Polynomial canonical_product(const SpaceParams& sp) {
  Polynomial p = Polynomial::constant(sp.n, 1);
  for (int i = 0; i < sp.n; ++i) p *= pow(falling_factorial(i, 1, sp.m, sp.n), sp.k);
  return p;
}

int extremal_degree_check(const SpaceParams& sp, int l) {
  if (sp.k > 4) throw std::invalid_argument("extremal check covers k in {2,3,4}");
  if (sp.n < sp.k - 1) throw std::invalid_argument("extremal check requires n >= k-1");
  if (l < 0 || l > sp.k - 2) throw std::invalid_argument("need 0 <= l <= k-2");
  MultiIndex e(sp.n, 0);
  e[0] = l;
  Polynomial p_star = Polynomial::monomial(e, 1) * canonical_product(sp);
  return reduce(p_star, sp).degree();
}

Polynomial canonical_P0(const SpaceParams& sp) {
  Polynomial via_reduce = reduce(canonical_product(sp), sp);

  // Independent route: expand each univariate factor in the mixed
  // falling-factorial basis and keep only the factor tuples with
  // sum(l) <= k-1 and total degree within the cap.
  ATable tab = a_table(sp.m, sp.k);
  struct Entry {
    int l;
    int deg;
    Rat coeff;
  };
  std::vector<Entry> entries;
  entries.push_back({0, sp.m, tab.a0m});
  for (int l = 1; l <= tab.q; ++l)
    for (int r = 0; r <= sp.m; ++r)
      if (tab.value(l, r) != 0) entries.push_back({l, (sp.m + 1) * l + r, tab.value(l, r)});

  auto factor_poly = [&sp](const Entry& en, int var) {
    int l = en.l, r = en.deg - (sp.m + 1) * l;
    if (l == 0) return falling_factorial(var, 1, sp.m, sp.n);
    Polynomial b = pow(falling_factorial(var, 0, sp.m + 1, sp.n), l);
    if (r > 0) b *= falling_factorial(var, sp.m + 1 - r, r, sp.n);
    return b;
  };

  long cap = sp.degree_cap();
  Polynomial via_expansion(sp.n);
  std::vector<const Entry*> pick(sp.n, nullptr);
  std::function<void(int, int, long)> rec = [&](int var, int lbudget, long degleft) {
    if (var == sp.n) {
      Polynomial term = Polynomial::constant(sp.n, 1);
      for (int i = 0; i < sp.n; ++i) term *= pick[i]->coeff * factor_poly(*pick[i], i);
      via_expansion += term;
      return;
    }
    for (const Entry& en : entries) {
      if (en.l > lbudget || en.deg > degleft) continue;
      // Remaining factors contribute at least degree m each.
      if (degleft - en.deg < static_cast<long>(sp.m) * (sp.n - var - 1)) continue;
      pick[var] = &en;
      rec(var + 1, lbudget - en.l, degleft - en.deg);
    }
  };
  rec(0, sp.k - 1, cap);

  if (!(via_reduce == via_expansion))
    throw std::logic_error("canonical reduction routes disagree");
  return via_reduce;
}

}  // namespace gridcover
