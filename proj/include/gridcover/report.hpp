#pragma once

#include "gridcover/cover.hpp"
#include "gridcover/nss.hpp"
#include "gridcover/search.hpp"
#include "gridcover/symfun.hpp"

#include <optional>
#include <string>

namespace gridcover {

// Deterministic report rendering: identical inputs yield byte-identical
// output in both formats. JSON is returned as a serialized string so the
// json dependency stays inside one translation unit.

std::string cover_report_text(const CoverReport& r, const CoverFamily& f);
std::string cover_report_json(const CoverReport& r, const CoverFamily& f);

std::string certificate_text(const Certificate& c, int m, int n, int k, long nodes);
std::string certificate_json(const Certificate& c, int m, int n, int k, long nodes);

std::string search_result_text(const GridSpec& g, int k, int size,
                               const std::optional<CoverFamily>& found, long nodes);
std::string search_result_json(const GridSpec& g, int k, int size,
                               const std::optional<CoverFamily>& found, long nodes);

std::string rank_text(const SpaceParams& sp, const RankResult& r);
std::string rank_json(const SpaceParams& sp, const RankResult& r);

std::string y_report_text(int m, int n, int k, const Rat& ysum, const std::optional<Rat>& yclosed);
std::string y_report_json(int m, int n, int k, const Rat& ysum, const std::optional<Rat>& yclosed);

std::string extremal_text(const SpaceParams& sp, int l, int degree);
std::string extremal_json(const SpaceParams& sp, int l, int degree);

std::string coeffs_text(const ATable& at, const BTable& bt, bool recurrences_ok);
std::string coeffs_json(const ATable& at, const BTable& bt, bool recurrences_ok);

std::string family_json(const CoverFamily& f);

// Row-major text dump, entries as "p/q" or "p".
std::string matrix_text(const std::vector<std::vector<Int>>& a);
std::string profile_text(const DerivativeProfile& p);

}  // namespace gridcover
