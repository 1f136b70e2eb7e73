#pragma once

#include "gridcover/polynomial.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gridcover {

// The grid {0,...,m}^n.
struct GridSpec {
  int m;
  int n;
  GridSpec(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid requires m >= 1 and n >= 1");
  }
  long point_count() const {
    long c = 1;
    for (int i = 0; i < n; ++i) c *= (m + 1);
    return c;
  }
  bool contains(const GridPoint& p) const {
    if (static_cast<int>(p.size()) != n) return false;
    for (int x : p)
      if (x < 0 || x > m) return false;
    return true;
  }
};

// All grid points in lexicographic order.
std::vector<GridPoint> grid_points(const GridSpec& g);
bool is_origin(const GridPoint& p);

// Affine hyperplane sum(coeffs[i]*x_i) = rhs with integer coefficients,
// normalized so that gcd(coeffs, rhs) = 1 and the first nonzero coefficient
// is positive. Two integer forms describe the same hyperplane iff they are
// equal after normalization.
class Hyperplane {
 public:
  Hyperplane(std::vector<long> coeffs, long rhs);

  const std::vector<long>& coeffs() const { return coeffs_; }
  long rhs() const { return rhs_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  bool contains(const GridPoint& p) const;
  std::string pretty() const;  // "x1 + 2*x2 = 3"

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<long> coeffs_;
  long rhs_;
};

// Multiset of hyperplanes.
class CoverFamily {
 public:
  using PlaneMap = std::map<Hyperplane, int>;

  void add(const Hyperplane& h, int count = 1);
  const PlaneMap& planes() const { return planes_; }
  int total_size() const;
  int distinct_count() const { return static_cast<int>(planes_.size()); }
  int dim() const;  // -1 when empty
  bool operator==(const CoverFamily&) const = default;

 private:
  PlaneMap planes_;
};

struct CoverReport {
  GridSpec grid;
  int k;
  GridPoint excluded;
  // All grid points in lexicographic order with their coverage counts.
  std::vector<std::pair<GridPoint, int>> per_point;
  int min_cover_excluding;
  int excluded_cover;
  bool satisfied;

  // Non-excluded points with coverage < k, plus the excluded point if covered.
  std::vector<GridPoint> violations() const;
};

int coverage_count(const CoverFamily& f, const GridPoint& p);

// satisfied iff every grid point != excluded is covered at least k times and
// the excluded point is not covered at all.
CoverReport verify_almost_cover(const GridSpec& g, int k, const CoverFamily& f,
                                const GridPoint& excluded);

// The mn + m family covering everything but `a` at least twice: axis planes
// x_i = j (j != a_i) plus m cleared-denominator planes through one fresh
// point per coordinate line. Deterministic choice: round j uses the j-th
// smallest unused value in each coordinate.
CoverFamily construct_two_cover(const GridSpec& g, const GridPoint& a);

// The mn + m*k(k-1)/2 family: x_i = 1..m for each i, plus k-t-1 copies of
// x_1+...+x_n = tm+1,...,(t+1)m for t = 0..k-2. Almost k-cover with the
// origin uncovered.
CoverFamily construct_layered_cover(const GridSpec& g, int k);

// Curated minimum almost 3-covers of {0,1,2}^n for n = 2,3,4 (sizes 9, 11,
// 13). Also shipped as data/appendix-n{2,3,4}.cover.
CoverFamily appendix_cover(int n);

enum class BoundTag {
  kTwoCoverExact,      // k = 2, n >= 2: value mn + m is exact
  kNullstellensatz,    // k in {3,4}, n >= k-1: value mn + (m+1)(k-1) - 1
  kBallSerra,          // always valid: value mn + (k-1)m
};
const char* bound_tag_name(BoundTag t);

struct LowerBound {
  long value;
  BoundTag tag;
};

// Best proven lower bound on the size of an almost k-cover of {0..m}^n.
LowerBound lower_bound(int m, int n, int k);

// Cover file format: one plane per line, "c1 c2 ... cn = rhs x count" with
// integer entries; blank lines and '#' comments ignored.
struct CoverParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
CoverFamily parse_cover_file(std::istream& is, int n);
void write_cover_file(std::ostream& os, const CoverFamily& f);
std::string cover_file_string(const CoverFamily& f);

}  // namespace gridcover
