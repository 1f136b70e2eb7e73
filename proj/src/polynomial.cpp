#include "gridcover/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>

namespace gridcover {

int total_degree(const MultiIndex& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  assert(a.size() == b.size());
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& exponents, const Rat& c) {
  Polynomial p(static_cast<int>(exponents.size()));
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  p.add_term(exponents, c);
  return p;
}

Polynomial Polynomial::variable(int var, int nvars) {
  if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
  MultiIndex e(nvars, 0);
  e[var] = 1;
  return monomial(e, 1);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

Rat Polynomial::coeff(const MultiIndex& e) const {
  check_dim(e.size(), "coeff");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& e, const Rat& c) {
  check_dim(e.size(), "term");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_dim(o.nvars_, "operand");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_dim(o.nvars_, "operand");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("dimension mismatch in product");
  Polynomial out(a.nvars_);
  MultiIndex e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Rat Polynomial::evaluate(const RatPoint& a) const {
  check_dim(a.size(), "evaluation point");
  // Power tables per variable, up to the largest exponent present.
  std::vector<int> maxexp(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) maxexp[i] = std::max(maxexp[i], e[i]);
  std::vector<std::vector<Rat>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    powers[i].resize(maxexp[i] + 1);
    powers[i][0] = 1;
    for (int t = 1; t <= maxexp[i]; ++t) powers[i][t] = powers[i][t - 1] * a[i];
  }
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= powers[i][e[i]];
    acc += term;
  }
  return acc;
}

Rat Polynomial::evaluate(const GridPoint& a) const {
  RatPoint ra(a.begin(), a.end());
  return evaluate(ra);
}

Polynomial Polynomial::recenter(const RatPoint& a) const {
  check_dim(a.size(), "recenter point");
  Polynomial cur = *this;
  for (int var = 0; var < nvars_; ++var) {
    if (a[var] == 0) continue;
    int maxexp = 0;
    for (const auto& [e, c] : cur.terms_) maxexp = std::max(maxexp, e[var]);
    std::vector<Rat> spow(maxexp + 1);
    spow[0] = 1;
    for (int t = 1; t <= maxexp; ++t) spow[t] = spow[t - 1] * a[var];
    Polynomial next(nvars_);
    MultiIndex e2;
    for (const auto& [e, c] : cur.terms_) {
      int d = e[var];
      e2 = e;
      for (int t = 0; t <= d; ++t) {
        e2[var] = t;
        next.add_term(e2, c * Rat(binomial(d, t)) * spow[d - t]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial Polynomial::recenter(const GridPoint& a) const {
  RatPoint ra(a.begin(), a.end());
  return recenter(ra);
}

Polynomial Polynomial::partial_derivative(const MultiIndex& j) const {
  check_dim(j.size(), "derivative index");
  for (int x : j)
    if (x < 0) throw std::invalid_argument("negative derivative order");
  Polynomial out(nvars_);
  MultiIndex e2(nvars_);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    Int mult = 1;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] < j[i]) {
        vanishes = true;
        break;
      }
      mult *= falling_product(e[i], j[i]);
      e2[i] = e[i] - j[i];
    }
    if (!vanishes) out.add_term(e2, c * Rat(mult));
  }
  return out;
}

int Polynomial::multiplicity_at(const RatPoint& a) const {
  check_dim(a.size(), "point");
  if (is_zero()) return kInfiniteMultiplicity;
  Polynomial shifted = recenter(a);
  // Terms are graded-lex sorted, so the first one has minimum total degree.
  return total_degree(shifted.terms().begin()->first);
}

int Polynomial::multiplicity_at(const GridPoint& a) const {
  RatPoint ra(a.begin(), a.end());
  return multiplicity_at(ra);
}

Polynomial Polynomial::homogeneous_component(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& perm) const {
  check_dim(perm.size(), "permutation");
  std::vector<bool> seen(nvars_, false);
  for (int p : perm) {
    if (p < 0 || p >= nvars_ || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  Polynomial out(nvars_);
  MultiIndex e2(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
    out.add_term(e2, c);
  }
  return out;
}

bool Polynomial::divisible_by_monomial(const MultiIndex& e) const {
  check_dim(e.size(), "monomial");
  for (const auto& [t, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (t[i] < e[i]) return false;
  return true;
}

void Polynomial::check_dim(size_t got, const char* what) const {
  if (static_cast<int>(got) != nvars_) {
    std::ostringstream os;
    os << "dimension mismatch: " << what << " has " << got << " entries, polynomial has "
       << nvars_ << " variables";
    throw std::invalid_argument(os.str());
  }
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    if (!has_vars || ac != 1) os << rat_str(ac);
    bool printed = !has_vars || ac != 1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

Polynomial falling_factorial(int var, const Rat& start, int count, int nvars) {
  if (count < 0) throw std::invalid_argument("negative falling factorial length");
  if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial out = Polynomial::constant(nvars, 1);
  Polynomial x = Polynomial::variable(var, nvars);
  for (int t = 0; t < count; ++t) out *= x - Polynomial::constant(nvars, start + t);
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (int t = 0; t < e; ++t) out *= p;
  return out;
}

void write_polynomial(std::ostream& os, const Polynomial& p) {
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    os << rat_str(it->second);
    for (int e : it->first) os << ' ' << e;
    os << '\n';
  }
}

Polynomial parse_polynomial(std::istream& is, int nvars) {
  Polynomial p(nvars);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string ctok;
    if (!(ls >> ctok)) continue;  // blank
    Rat c;
    try {
      c = parse_rat(ctok);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    MultiIndex e;
    long v;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": negative exponent");
      e.push_back(static_cast<int>(v));
    }
    if (!ls.eof())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad exponent token");
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(nvars) + " exponents, got " +
                                  std::to_string(e.size()));
    p.add_term(e, c);
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace gridcover
