#include "gridcover/cover.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gridcover {

std::vector<GridPoint> grid_points(const GridSpec& g) {
  std::vector<GridPoint> pts;
  pts.reserve(g.point_count());
  GridPoint p(g.n, 0);
  while (true) {
    pts.push_back(p);
    int i = g.n - 1;
    while (i >= 0 && p[i] == g.m) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  return pts;
}

bool is_origin(const GridPoint& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x == 0; });
}

Hyperplane::Hyperplane(std::vector<long> coeffs, long rhs)
    : coeffs_(std::move(coeffs)), rhs_(rhs) {
  if (coeffs_.empty()) throw std::invalid_argument("hyperplane in zero variables");
  long g = std::abs(rhs_);
  long first_nonzero = 0;
  for (long c : coeffs_) {
    g = std::gcd(g, std::abs(c));
    if (first_nonzero == 0) first_nonzero = c;
  }
  if (first_nonzero == 0) throw std::invalid_argument("hyperplane with zero normal");
  if (g > 1) {
    for (long& c : coeffs_) c /= g;
    rhs_ /= g;
    if (first_nonzero != 0) first_nonzero /= g;
  }
  if (first_nonzero < 0) {
    for (long& c : coeffs_) c = -c;
    rhs_ = -rhs_;
  }
}

bool Hyperplane::contains(const GridPoint& p) const {
  if (p.size() != coeffs_.size())
    throw std::invalid_argument("dimension mismatch: point vs hyperplane");
  long acc = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * p[i];
  return acc == rhs_;
}

std::string Hyperplane::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (std::abs(c) != 1) os << std::abs(c) << "*";
    os << "x" << (i + 1);
  }
  os << " = " << rhs_;
  return os.str();
}

void CoverFamily::add(const Hyperplane& h, int count) {
  if (count < 1) throw std::invalid_argument("multiplicity must be >= 1");
  if (!planes_.empty() && h.dim() != dim())
    throw std::invalid_argument("dimension mismatch: plane vs family");
  planes_[h] += count;
}

int CoverFamily::total_size() const {
  int s = 0;
  for (const auto& [h, c] : planes_) s += c;
  return s;
}

int CoverFamily::dim() const { return planes_.empty() ? -1 : planes_.begin()->first.dim(); }

int coverage_count(const CoverFamily& f, const GridPoint& p) {
  int s = 0;
  for (const auto& [h, c] : f.planes())
    if (h.contains(p)) s += c;
  return s;
}

std::vector<GridPoint> CoverReport::violations() const {
  std::vector<GridPoint> v;
  for (const auto& [p, c] : per_point) {
    if (p == excluded) {
      if (c != 0) v.push_back(p);
    } else if (c < k) {
      v.push_back(p);
    }
  }
  return v;
}

CoverReport verify_almost_cover(const GridSpec& g, int k, const CoverFamily& f,
                                const GridPoint& excluded) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!g.contains(excluded)) throw std::invalid_argument("excluded point outside grid");
  if (f.dim() != -1 && f.dim() != g.n)
    throw std::invalid_argument("dimension mismatch: family vs grid");
  CoverReport r{g, k, excluded, {}, 0, 0, true};
  bool have_min = false;
  for (const GridPoint& p : grid_points(g)) {
    int c = coverage_count(f, p);
    r.per_point.emplace_back(p, c);
    if (p == excluded) {
      r.excluded_cover = c;
      if (c != 0) r.satisfied = false;
    } else {
      if (!have_min || c < r.min_cover_excluding) r.min_cover_excluding = c;
      have_min = true;
      if (c < k) r.satisfied = false;
    }
  }
  if (!have_min) r.min_cover_excluding = 0;  // 1-point grid, nothing to cover
  return r;
}

CoverFamily construct_two_cover(const GridSpec& g, const GridPoint& a) {
  if (g.n < 2) throw std::invalid_argument("two-cover construction requires n >= 2");
  if (!g.contains(a)) throw std::invalid_argument("excluded point outside grid");
  CoverFamily f;
  // The grid values each coordinate may take besides a_i, ascending.
  std::vector<std::vector<long>> unused(g.n);
  for (int i = 0; i < g.n; ++i)
    for (long j = 0; j <= g.m; ++j)
      if (j != a[i]) unused[i].push_back(j);
  for (int i = 0; i < g.n; ++i) {
    std::vector<long> c(g.n, 0);
    c[i] = 1;
    for (long j : unused[i]) f.add(Hyperplane(c, j));
  }
  for (int round = 0; round < g.m; ++round) {
    // sum_i (x_i - a_i)/(b_i - a_i) = 1 with b_i the round-th unused value,
    // cleared to integers via the lcm of the differences.
    std::vector<long> diff(g.n);
    long l = 1;
    for (int i = 0; i < g.n; ++i) {
      diff[i] = unused[i][round] - a[i];
      l = std::lcm(l, std::abs(diff[i]));
    }
    std::vector<long> c(g.n);
    long rhs = l;
    for (int i = 0; i < g.n; ++i) {
      c[i] = l / diff[i];
      rhs += c[i] * a[i];
    }
    f.add(Hyperplane(c, rhs));
  }
  return f;
}

CoverFamily construct_layered_cover(const GridSpec& g, int k) {
  if (k < 2) throw std::invalid_argument("layered construction requires k >= 2");
  CoverFamily f;
  for (int i = 0; i < g.n; ++i) {
    std::vector<long> c(g.n, 0);
    c[i] = 1;
    for (long j = 1; j <= g.m; ++j) f.add(Hyperplane(c, j));
  }
  std::vector<long> ones(g.n, 1);
  for (int t = 0; t <= k - 2; ++t)
    for (long s = static_cast<long>(t) * g.m + 1; s <= static_cast<long>(t + 1) * g.m; ++s)
      f.add(Hyperplane(ones, s), k - t - 1);
  return f;
}

CoverFamily appendix_cover(int n) {
  CoverFamily f;
  auto add = [&f](std::vector<long> c, long rhs, int count) {
    f.add(Hyperplane(std::move(c), rhs), count);
  };
  switch (n) {
    case 2:
      add({1, 0}, 1, 1);
      add({1, 0}, 2, 2);
      add({0, 1}, 1, 1);
      add({0, 1}, 2, 2);
      add({1, 1}, 1, 2);
      add({1, 1}, 2, 1);
      return f;
    case 3:
      add({1, 0, 0}, 1, 1);
      add({1, 0, 0}, 2, 1);
      add({0, 1, 0}, 1, 1);
      add({0, 1, 0}, 2, 1);
      add({0, 0, 1}, 1, 1);
      add({0, 0, 1}, 2, 1);
      add({1, 0, 1}, 2, 1);
      add({0, 1, 1}, 2, 1);
      add({1, 1, 1}, 1, 1);
      add({1, 1, -1}, 1, 1);
      add({1, 1, 2}, 2, 1);
      return f;
    case 4:
      add({1, 0, 0, 0}, 1, 1);
      add({1, 0, 0, 0}, 2, 1);
      add({0, 1, 0, 0}, 1, 1);
      add({0, 0, 1, 0}, 1, 1);
      add({0, 0, 1, 0}, 2, 1);
      add({0, 0, 0, 1}, 1, 1);
      add({0, 0, 0, 1}, 2, 1);
      add({1, 1, 0, 0}, 2, 1);
      add({0, 1, 1, 0}, 2, 1);
      add({0, 1, 0, 1}, 2, 1);
      add({1, 1, 1, 1}, 1, 1);
      add({1, -1, 1, 1}, 1, 1);
      add({1, 2, 1, 1}, 2, 1);
      return f;
    default:
      throw std::invalid_argument("curated covers exist only for n in {2,3,4}");
  }
}

const char* bound_tag_name(BoundTag t) {
  switch (t) {
    case BoundTag::kTwoCoverExact: return "two-cover-exact";
    case BoundTag::kNullstellensatz: return "nullstellensatz";
    case BoundTag::kBallSerra: return "ball-serra";
  }
  return "?";
}

LowerBound lower_bound(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("need m,n,k >= 1");
  long lm = m, ln = n, lk = k;
  if (k == 2 && n >= 2) return {lm * ln + lm, BoundTag::kTwoCoverExact};
  if ((k == 3 || k == 4) && n >= k - 1)
    return {lm * ln + (lm + 1) * (lk - 1) - 1, BoundTag::kNullstellensatz};
  return {lm * ln + (lk - 1) * lm, BoundTag::kBallSerra};
}

CoverFamily parse_cover_file(std::istream& is, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  CoverFamily f;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [lineno](const std::string& msg) {
      throw CoverParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    // c1 ... cn = rhs x count
    if (static_cast<int>(tok.size()) != n + 4) fail("expected 'c1 ... cn = rhs x count'");
    auto as_long = [&](const std::string& s) {
      try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        fail("bad integer '" + s + "'");
        return 0L;
      }
    };
    std::vector<long> c(n);
    for (int i = 0; i < n; ++i) c[i] = as_long(tok[i]);
    if (tok[n] != "=") fail("expected '='");
    long rhs = as_long(tok[n + 1]);
    if (tok[n + 2] != "x") fail("expected 'x'");
    long count = as_long(tok[n + 3]);
    if (count < 1) fail("multiplicity must be >= 1");
    bool all_zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
    if (all_zero) fail("all coefficients zero");
    f.add(Hyperplane(std::move(c), rhs), static_cast<int>(count));
  }
  return f;
}

void write_cover_file(std::ostream& os, const CoverFamily& f) {
  for (const auto& [h, count] : f.planes()) {
    for (long c : h.coeffs()) os << c << ' ';
    os << "= " << h.rhs() << " x " << count << '\n';
  }
}

std::string cover_file_string(const CoverFamily& f) {
  std::ostringstream os;
  write_cover_file(os, f);
  return os.str();
}

}  // namespace gridcover
