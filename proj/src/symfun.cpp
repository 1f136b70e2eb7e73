#include "gridcover/symfun.hpp"

#include <algorithm>
#include <functional>

namespace gridcover {

namespace {

void check_parts(const Composition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("empty composition");
  for (int p : lambda)
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
}

Composition sorted_desc(Composition c) {
  std::sort(c.begin(), c.end(), std::greater<int>());
  return c;
}

}  // namespace

Polynomial power_sum(int d, int n) {
  if (d < 1) throw std::invalid_argument("power sum needs d >= 1");
  if (n < 1) throw std::invalid_argument("power sum needs n >= 1");
  Polynomial p(n);
  MultiIndex e(n, 0);
  for (int i = 0; i < n; ++i) {
    e[i] = d;
    p.add_term(e, 1);
    e[i] = 0;
  }
  return p;
}

Polynomial power_sum_product(const Composition& lambda, int n) {
  check_parts(lambda);
  Polynomial p = Polynomial::constant(n, 1);
  for (int d : lambda) p *= power_sum(d, n);
  return p;
}

Polynomial monomial_sym(const Composition& lambda, int n) {
  check_parts(lambda);
  int t = static_cast<int>(lambda.size());
  if (n < t) throw std::invalid_argument("monomial symmetric polynomial needs n >= parts");
  Polynomial p(n);
  MultiIndex e(n, 0);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == t) {
      p.add_term(e, 1);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      e[i] = lambda[pos];
      rec(pos + 1);
      e[i] = 0;
      used[i] = false;
    }
  };
  rec(0);
  return p;
}

std::map<Composition, Rat> m_to_p(const Composition& lambda) {
  check_parts(lambda);
  std::map<Composition, Rat> out;
  int t = static_cast<int>(lambda.size());
  if (t == 1) {
    out[{lambda[0]}] = 1;
    return out;
  }
  Composition head(lambda.begin(), lambda.end() - 1);
  int last = lambda.back();
  // m_{l1..lt} = p_{lt} m_{l1..l(t-1)} - sum_j m_{l1,..,lj+lt,..,l(t-1)}
  for (const auto& [mu, c] : m_to_p(head)) {
    Composition mu2 = mu;
    mu2.push_back(last);
    out[sorted_desc(std::move(mu2))] += c;
  }
  for (int j = 0; j < t - 1; ++j) {
    Composition merged = head;
    merged[j] += last;
    for (const auto& [mu, c] : m_to_p(merged)) out[mu] -= c;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Rat top_p_coeff(const Composition& lambda) {
  check_parts(lambda);
  long t = static_cast<long>(lambda.size());
  Rat c(factorial(t - 1));
  return (t % 2 == 0) ? -c : c;
}

Rat ATable::value(int l, int r) const {
  if (r < 0 || r > m) return Rat(0);
  if (l == 0) return r == m ? a0m : Rat(0);
  if (l < 1 || l > q) return Rat(0);
  return a[l - 1][r];
}

ATable a_table(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("a_table needs m,k >= 1");
  int q = (m * k) / (m + 1);
  ATable tab{m, k, q, Rat(0), std::vector<std::vector<Rat>>(q, std::vector<Rat>(m + 1, Rat(0)))};

  // Basis element of degree d, for d = m and d = (m+1)l + r with l >= 1.
  auto basis = [m](int d) -> Polynomial {
    if (d == m) return falling_factorial(0, 1, m, 1);
    int l = d / (m + 1), r = d % (m + 1);
    Polynomial b = pow(falling_factorial(0, 0, m + 1, 1), l);
    if (r > 0) b *= falling_factorial(0, m + 1 - r, r, 1);
    return b;
  };

  Polynomial target = pow(falling_factorial(0, 1, m, 1), k);
  int top = (m + 1) * q + m;
  for (int d = top; d >= m; --d) {
    Rat c = target.coeff(MultiIndex{d});
    if (c != 0) target -= c * basis(d);
    if (d == m)
      tab.a0m = c;
    else
      tab.a[d / (m + 1) - 1][d % (m + 1)] = c;
  }
  if (!target.is_zero())
    throw std::logic_error("mixed falling-factorial expansion left a remainder");
  return tab;
}

bool a_recurrence_check(int m, int k) {
  if (k < 2) throw std::invalid_argument("recurrence check needs k >= 2");
  ATable cur = a_table(m, k);
  ATable prev = a_table(m, k - 1);
  for (int l = 1; l <= cur.q; ++l)
    for (int r = 0; r <= m - 1; ++r)
      if (cur.value(l, r) != prev.value(l - 1, r + 1) - Rat(m - r - 1) * cur.value(l, r + 1))
        return false;
  for (int l = 0; l <= cur.q; ++l)
    if (cur.value(l, m) != prev.value(l, 0) - Rat(m) * cur.value(l + 1, 0))
      return false;
  return true;
}

BTable b_table(int m, int k) {
  ATable tab = a_table(m, k);
  BTable bt{m, k, std::vector<Rat>(static_cast<size_t>(k - 1) * m + 1)};
  for (long d = 0; d < static_cast<long>(bt.b.size()); ++d) {
    long deg = d + m;
    bt.b[d] = tab.value(static_cast<int>(deg / (m + 1)), static_cast<int>(deg % (m + 1)));
  }
  return bt;
}

Rat harmonic(int m) {
  if (m < 0) throw std::invalid_argument("harmonic of negative");
  Rat h = 0;
  for (int i = 1; i <= m; ++i) h += rat(1, i);
  return h;
}

Rat double_harmonic(int m) {
  if (m < 0) throw std::invalid_argument("double harmonic of negative");
  Rat l = 0;
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j) l += rat(1, static_cast<long>(i) * j);
  return l;
}

Rat y_sum(int m, int k, int n) {
  if (k < 2) throw std::invalid_argument("y_sum needs k >= 2");
  if (n < k - 1) throw std::invalid_argument("y_sum needs n >= k-1");
  BTable bt = b_table(m, k);
  Rat total = 0;
  Composition parts;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      int t = static_cast<int>(parts.size());
      Rat term = rat_pow(bt.at(0), n - t);
      term *= bt.at(static_cast<long>(m + 1) * parts[0] - 1);
      for (int j = 1; j < t; ++j) term *= bt.at(static_cast<long>(m + 1) * parts[j]);
      if (t % 2 == 0) term = -term;
      total += term;
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      parts.push_back(part);
      rec(remaining - part);
      parts.pop_back();
    }
  };
  rec(k - 1);
  return total;
}

std::optional<Rat> y_closed(int m, int k, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("y_closed needs m,n >= 1");
  Rat mfact(factorial(m));
  switch (k) {
    case 2: {
      Rat v = rat_pow(mfact, n - 1);
      if ((static_cast<long>(m) * (n - 1)) % 2 != 0) v = -v;
      return v;
    }
    case 3:
      return rat_pow(mfact, 2 * (n - 1)) * harmonic(m);
    case 4: {
      if (m < 2) return std::nullopt;
      Rat h = harmonic(m);
      Rat v = rat_pow(mfact, 3 * (n - 1)) * (2 * h * h - double_harmonic(m));
      if ((3L * m * (n - 3)) % 2 != 0) v = -v;
      return v;
    }
    default:
      return std::nullopt;
  }
}

Polynomial phi_via_b(int m, int k, int n) {
  if (k < 2) throw std::invalid_argument("phi_via_b needs k >= 2");
  if (n < k - 1) throw std::invalid_argument("phi_via_b needs n >= k-1");
  BTable bt = b_table(m, k);
  Polynomial out(n);
  MultiIndex e(n, 0);
  // Special index i gets lambda_i = (m+1)u - 1, the rest (m+1)v_j, with
  // u + sum v_j = k - 1 and u >= 1.
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
      if (pos == n) {
        if (budget != 0 || v[i] < 1) return;
        Rat c = 1;
        for (int j = 0; j < n; ++j) {
          long lam = (j == i) ? static_cast<long>(m + 1) * v[j] - 1
                              : static_cast<long>(m + 1) * v[j];
          c *= bt.at(lam);
          e[j] = static_cast<int>(lam) + m;
        }
        out.add_term(e, c);
        return;
      }
      int lo = (pos == i) ? 1 : 0;
      for (int val = lo; val <= budget; ++val) {
        v[pos] = val;
        // Remaining positions after pos must absorb budget - val; the
        // special index needs at least 1 if it is still ahead.
        rec(pos + 1, budget - val);
        v[pos] = 0;
      }
    };
    rec(0, k - 1);
  }
  return out;
}

}  // namespace gridcover
