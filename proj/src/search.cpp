#include "gridcover/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gridcover {

namespace {

// Determinant of a small integer matrix by Laplace expansion; the matrices
// here are at most (n-1) x (n-1) with n <= grid dimension.
long small_det(const std::vector<std::vector<long>>& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  long det = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<long>> minor(n - 1, std::vector<long>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    long term = a[0][j] * small_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Normal of the affine span of pts (n points in n-dim space), or all zeros
// when the points are affinely dependent.
std::vector<long> span_normal(const std::vector<const GridPoint*>& pts, int n) {
  std::vector<std::vector<long>> diffs(n - 1, std::vector<long>(n));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) diffs[i - 1][j] = (*pts[i])[j] - (*pts[0])[j];
  std::vector<long> normal(n);
  std::vector<std::vector<long>> minor(n - 1, std::vector<long>(n - 1));
  for (int drop = 0; drop < n; ++drop) {
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == drop) continue;
        minor[r][cc++] = diffs[r][c];
      }
    }
    long d = small_det(minor);
    normal[drop] = (drop % 2 == 0) ? d : -d;
  }
  return normal;
}

struct CandidateOrder {
  bool operator()(const Hyperplane& a, const Hyperplane& b) const {
    long sa = 0, sb = 0;
    for (long c : a.coeffs()) sa += std::abs(c);
    for (long c : b.coeffs()) sb += std::abs(c);
    if (sa != sb) return sa < sb;
    if (a.coeffs() != b.coeffs()) return a.coeffs() < b.coeffs();
    return a.rhs() < b.rhs();
  }
};

}  // namespace

CandidateSet enumerate_candidates(const GridSpec& g, const GridPoint& excluded) {
  if (!g.contains(excluded)) throw std::invalid_argument("excluded point outside grid");
  CandidateSet out{g, excluded, {}, {}};
  std::set<Hyperplane> seen;
  if (g.n == 1) {
    for (long j = 0; j <= g.m; ++j)
      if (j != excluded[0]) seen.insert(Hyperplane({1}, j));
  } else {
    std::vector<GridPoint> pts;
    for (const auto& p : grid_points(g))
      if (p != excluded) pts.push_back(p);
    int npts = static_cast<int>(pts.size());
    std::vector<int> idx(g.n);
    std::vector<const GridPoint*> chosen(g.n);
    // All n-subsets of the non-excluded points.
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == g.n) {
        std::vector<long> normal = span_normal(chosen, g.n);
        if (std::all_of(normal.begin(), normal.end(), [](long v) { return v == 0; })) return;
        long rhs = 0;
        for (int j = 0; j < g.n; ++j) rhs += normal[j] * (*chosen[0])[j];
        Hyperplane h(std::move(normal), rhs);
        if (!h.contains(excluded)) seen.insert(std::move(h));
        return;
      }
      for (int i = start; i <= npts - (g.n - pos); ++i) {
        chosen[pos] = &pts[i];
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  out.planes.assign(seen.begin(), seen.end());
  std::sort(out.planes.begin(), out.planes.end(), CandidateOrder{});
  auto pts_all = grid_points(g);
  out.incidence.resize(out.planes.size());
  for (size_t i = 0; i < out.planes.size(); ++i)
    for (int p = 0; p < static_cast<int>(pts_all.size()); ++p)
      if (out.planes[i].contains(pts_all[p])) out.incidence[i].push_back(p);
  return out;
}

namespace {

struct Searcher {
  const CandidateSet& cand;
  int k;
  long node_limit;
  bool pruning;
  long nodes = 0;

  int npts;
  int nplanes;
  int excluded_idx;
  std::vector<std::vector<int>> planes_through;  // point -> plane indices (ordered)
  std::vector<int> cov;
  std::vector<int> counts;
  std::vector<char> forbidden;
  long total_deficiency = 0;
  int max_points_per_plane = 1;

  Searcher(const CandidateSet& c, int k_, long limit, bool prune)
      : cand(c), k(k_), node_limit(limit), pruning(prune) {
    auto pts = grid_points(c.grid);
    npts = static_cast<int>(pts.size());
    nplanes = static_cast<int>(c.planes.size());
    excluded_idx = -1;
    for (int p = 0; p < npts; ++p)
      if (pts[p] == c.excluded) excluded_idx = p;
    planes_through.resize(npts);
    for (int h = 0; h < nplanes; ++h) {
      for (int p : c.incidence[h]) planes_through[p].push_back(h);
      max_points_per_plane =
          std::max(max_points_per_plane, static_cast<int>(c.incidence[h].size()));
    }
    cov.assign(npts, 0);
    counts.assign(nplanes, 0);
    forbidden.assign(nplanes, 0);
    for (int p = 0; p < npts; ++p)
      if (p != excluded_idx) total_deficiency += k;
  }

  void apply(int h, int dir) {
    counts[h] += dir;
    for (int p : cand.incidence[h]) {
      if (dir > 0) {
        if (cov[p] < k) --total_deficiency;
        ++cov[p];
      } else {
        --cov[p];
        if (cov[p] < k) ++total_deficiency;
      }
    }
  }

  // Most deficient point, ties to the lexicographically first (= smallest
  // index). -1 when everything is covered.
  int pick_point() const {
    int best = -1, best_def = 0;
    for (int p = 0; p < npts; ++p) {
      if (p == excluded_idx) continue;
      int def = k - cov[p];
      if (def > best_def) {
        best_def = def;
        best = p;
      }
    }
    return best;
  }

  bool dfs(int budget, CoverFamily& out) {
    if (++nodes > node_limit) throw BudgetExceeded("search node budget exhausted");
    int p = pick_point();
    if (p < 0) {
      // Solved; pad deterministically to the exact requested size.
      std::vector<int> final_counts = counts;
      for (int h = 0; h < nplanes && budget > 0; ++h)
        while (final_counts[h] < k && budget > 0) {
          ++final_counts[h];
          --budget;
        }
      if (budget > 0) return false;
      for (int h = 0; h < nplanes; ++h)
        if (final_counts[h] > 0) out.add(cand.planes[h], final_counts[h]);
      return true;
    }
    if (budget == 0) return false;
    if (pruning) {
      long need = (total_deficiency + max_points_per_plane - 1) / max_points_per_plane;
      if (budget < need) return false;
    }
    std::vector<int> locally_forbidden;
    bool found = false;
    for (int h : planes_through[p]) {
      if (forbidden[h] || counts[h] >= k) continue;
      apply(h, +1);
      found = dfs(budget - 1, out);
      apply(h, -1);
      if (found) break;
      forbidden[h] = 1;
      locally_forbidden.push_back(h);
    }
    for (int h : locally_forbidden) forbidden[h] = 0;
    return found;
  }
};

}  // namespace

std::optional<CoverFamily> find_cover(const GridSpec& g, int k, int size,
                                      const GridPoint& excluded, const SearchLimits& limits,
                                      SearchStats* stats, bool enable_pruning) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (size < 0) throw std::invalid_argument("size must be >= 0");
  CandidateSet cand = enumerate_candidates(g, excluded);
  Searcher s(cand, k, limits.max_nodes, enable_pruning);
  CoverFamily out;
  bool ok = false;
  try {
    ok = s.dfs(size, out);
  } catch (...) {
    if (stats) stats->nodes = s.nodes;
    throw;
  }
  if (stats) stats->nodes = s.nodes;
  if (!ok) return std::nullopt;
  return out;
}

const char* cert_status_name(CertStatus s) {
  return s == CertStatus::kExact ? "exact" : "upper-only";
}

Certificate certify(int m, int n, int k, const SearchLimits& limits, SearchStats* stats) {
  GridSpec g(m, n);
  GridPoint origin(n, 0);
  LowerBound lb = lower_bound(m, n, k);

  CoverFamily fallback;
  if (k >= 2) {
    fallback = construct_layered_cover(g, k);
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<long> c(n, 0);
      c[i] = 1;
      for (long j = 1; j <= m; ++j) fallback.add(Hyperplane(c, j));
    }
  }
  long upper = fallback.total_size();

  SearchStats agg;
  for (long size = lb.value; size < upper; ++size) {
    SearchStats local;
    std::optional<CoverFamily> found;
    try {
      found = find_cover(g, k, static_cast<int>(size), origin, limits, &local);
    } catch (...) {
      if (stats) stats->nodes = agg.nodes + local.nodes;
      throw;
    }
    agg.nodes += local.nodes;
    if (found) {
      if (!verify_almost_cover(g, k, *found, origin).satisfied)
        throw std::logic_error("search returned a family the verifier rejects");
      if (stats) *stats = agg;
      return {size, lb, *found, size == lb.value ? CertStatus::kExact : CertStatus::kUpperOnly};
    }
  }
  if (!verify_almost_cover(g, k, fallback, origin).satisfied)
    throw std::logic_error("fallback construction failed verification");
  if (stats) *stats = agg;
  return {upper, lb, fallback,
          upper == lb.value ? CertStatus::kExact : CertStatus::kUpperOnly};
}

}  // namespace gridcover
