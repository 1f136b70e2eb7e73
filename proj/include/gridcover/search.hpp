#pragma once

#include "gridcover/cover.hpp"
#include "gridcover/nss.hpp"  // BudgetExceeded

#include <optional>
#include <vector>

namespace gridcover {

// All hyperplanes spanned by n affinely independent grid points, normalized
// and deduplicated, minus any containing the excluded point. Ordered by
// (sum of |coefficients|, coefficients lexicographically, rhs). For n = 1
// the candidates are the m planes x_1 = j, j != excluded_1.
struct CandidateSet {
  GridSpec grid;
  GridPoint excluded;
  std::vector<Hyperplane> planes;
  // Indices into grid_points(grid) covered by each plane.
  std::vector<std::vector<int>> incidence;
};

CandidateSet enumerate_candidates(const GridSpec& g, const GridPoint& excluded);

struct SearchLimits {
  long max_nodes = 50'000'000;
};

struct SearchStats {
  long nodes = 0;
};

// Exhaustive branch-and-bound over the candidate set for a family of total
// multiplicity exactly `size` covering every non-excluded point >= k times.
// Per-plane multiplicity is capped at k. Deterministic: returns the first
// solution in sequential branch order. Absence is a value; running out of
// node budget throws BudgetExceeded.
std::optional<CoverFamily> find_cover(const GridSpec& g, int k, int size,
                                      const GridPoint& excluded,
                                      const SearchLimits& limits = {},
                                      SearchStats* stats = nullptr,
                                      bool enable_pruning = true);

enum class CertStatus { kExact, kUpperOnly };
const char* cert_status_name(CertStatus s);

struct Certificate {
  long value;          // size of the witness
  LowerBound lower;    // proven lower bound with provenance
  CoverFamily witness;
  CertStatus status;   // exact iff value == lower.value
};

// Searches upward from the proven lower bound; falls back on the layered
// construction at the top size. The returned witness is always re-verified
// with verify_almost_cover (origin excluded).
Certificate certify(int m, int n, int k, const SearchLimits& limits = {},
                    SearchStats* stats = nullptr);

}  // namespace gridcover
