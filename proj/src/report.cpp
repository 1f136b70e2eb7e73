#include "gridcover/report.hpp"

#include <json.hpp>

#include <sstream>

namespace gridcover {

namespace {

using ojson = nlohmann::ordered_json;

std::string point_str(const GridPoint& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

ojson plane_json(const Hyperplane& h, int count) {
  ojson j;
  j["coeffs"] = h.coeffs();
  j["rhs"] = h.rhs();
  j["count"] = count;
  return j;
}

ojson family_ojson(const CoverFamily& f) {
  ojson planes = ojson::array();
  for (const auto& [h, c] : f.planes()) planes.push_back(plane_json(h, c));
  ojson j;
  j["distinct_planes"] = f.distinct_count();
  j["total_multiplicity"] = f.total_size();
  j["planes"] = planes;
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string cover_report_text(const CoverReport& r, const CoverFamily& f) {
  std::ostringstream os;
  os << "grid: m=" << r.grid.m << " n=" << r.grid.n << "\n";
  os << "k: " << r.k << "\n";
  os << "excluded: " << point_str(r.excluded) << "\n";
  os << "family: " << f.distinct_count() << " distinct planes, total multiplicity "
     << f.total_size() << "\n";
  os << "excluded coverage: " << r.excluded_cover << "\n";
  os << "min coverage elsewhere: " << r.min_cover_excluding << "\n";
  os << "satisfied: " << (r.satisfied ? "yes" : "no") << "\n";
  os << "coverage:\n";
  for (const auto& [p, c] : r.per_point) {
    os << "  " << point_str(p) << " -> " << c;
    if (p == r.excluded) os << " (excluded)";
    os << "\n";
  }
  auto bad = r.violations();
  if (bad.empty()) {
    os << "violations: none\n";
  } else {
    os << "violations:\n";
    for (const auto& p : bad) {
      int c = 0;
      for (const auto& [q, cc] : r.per_point)
        if (q == p) c = cc;
      os << "  " << point_str(p) << " -> " << c
         << (p == r.excluded ? " (must be 0)" : " (below k)") << "\n";
    }
  }
  return os.str();
}

std::string cover_report_json(const CoverReport& r, const CoverFamily& f) {
  ojson j;
  j["m"] = r.grid.m;
  j["n"] = r.grid.n;
  j["k"] = r.k;
  j["excluded"] = r.excluded;
  j["family"] = family_ojson(f);
  j["excluded_cover"] = r.excluded_cover;
  j["min_cover_excluding"] = r.min_cover_excluding;
  j["satisfied"] = r.satisfied;
  ojson pp = ojson::array();
  for (const auto& [p, c] : r.per_point) {
    ojson e;
    e["point"] = p;
    e["count"] = c;
    pp.push_back(e);
  }
  j["per_point"] = pp;
  ojson viol = ojson::array();
  for (const auto& p : r.violations()) viol.push_back(p);
  j["violations"] = viol;
  return dump(j);
}

std::string certificate_text(const Certificate& c, int m, int n, int k, long nodes) {
  std::ostringstream os;
  os << "certify: m=" << m << " n=" << n << " k=" << k << "\n";
  os << "lower bound: " << c.lower.value << " (" << bound_tag_name(c.lower.tag) << ")\n";
  os << "value: " << c.value << "\n";
  os << "status: " << cert_status_name(c.status) << "\n";
  os << "search nodes: " << nodes << "\n";
  os << "witness:\n" << cover_file_string(c.witness);
  return os.str();
}

std::string certificate_json(const Certificate& c, int m, int n, int k, long nodes) {
  ojson j;
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["lower_bound"] = c.lower.value;
  j["lower_tag"] = bound_tag_name(c.lower.tag);
  j["value"] = c.value;
  j["status"] = cert_status_name(c.status);
  j["search_nodes"] = nodes;
  j["witness"] = family_ojson(c.witness);
  return dump(j);
}

std::string search_result_text(const GridSpec& g, int k, int size,
                               const std::optional<CoverFamily>& found, long nodes) {
  std::ostringstream os;
  os << "search: m=" << g.m << " n=" << g.n << " k=" << k << " size=" << size << "\n";
  // Absence is exhaustive over grid-spanned planes only; found witnesses
  // are verified unconditionally.
  os << "result: " << (found ? "found" : "absent (over grid-spanned candidate planes)") << "\n";
  os << "search nodes: " << nodes << "\n";
  if (found) os << "witness:\n" << cover_file_string(*found);
  return os.str();
}

std::string search_result_json(const GridSpec& g, int k, int size,
                               const std::optional<CoverFamily>& found, long nodes) {
  ojson j;
  j["m"] = g.m;
  j["n"] = g.n;
  j["k"] = k;
  j["size"] = size;
  j["found"] = static_cast<bool>(found);
  j["search_nodes"] = nodes;
  if (found)
    j["witness"] = family_ojson(*found);
  else
    j["witness"] = nullptr;
  return dump(j);
}

std::string rank_text(const SpaceParams& sp, const RankResult& r) {
  std::ostringstream os;
  os << "rank: m=" << sp.m << " n=" << sp.n << " k=" << sp.k << "\n";
  os << "N=" << r.dimension << " rank=" << r.rank
     << (r.is_isomorphism ? " isomorphism" : " rank-deficient") << "\n";
  return os.str();
}

std::string rank_json(const SpaceParams& sp, const RankResult& r) {
  ojson j;
  j["m"] = sp.m;
  j["n"] = sp.n;
  j["k"] = sp.k;
  j["N"] = r.dimension;
  j["rank"] = r.rank;
  j["isomorphism"] = r.is_isomorphism;
  return dump(j);
}

std::string y_report_text(int m, int n, int k, const Rat& ysum,
                          const std::optional<Rat>& yclosed) {
  std::ostringstream os;
  os << "y: m=" << m << " n=" << n << " k=" << k << "\n";
  os << "y_sum: " << rat_str(ysum) << "\n";
  if (yclosed) {
    os << "y_closed: " << rat_str(*yclosed) << "\n";
    os << "match: " << (ysum == *yclosed ? "yes" : "no") << "\n";
  } else {
    os << "y_closed: none\n";
  }
  return os.str();
}

std::string y_report_json(int m, int n, int k, const Rat& ysum,
                          const std::optional<Rat>& yclosed) {
  ojson j;
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["Y"] = rat_str(ysum);
  if (yclosed) {
    j["Y_closed"] = rat_str(*yclosed);
    j["match"] = (ysum == *yclosed);
  } else {
    j["Y_closed"] = nullptr;
    j["match"] = nullptr;
  }
  return dump(j);
}

std::string extremal_text(const SpaceParams& sp, int l, int degree) {
  std::ostringstream os;
  os << "extremal: m=" << sp.m << " n=" << sp.n << " k=" << sp.k << " l=" << l << "\n";
  os << "reduced degree: " << degree << "\n";
  os << "expected: " << sp.degree_cap() << "\n";
  os << "match: " << (degree == sp.degree_cap() ? "yes" : "no") << "\n";
  return os.str();
}

std::string extremal_json(const SpaceParams& sp, int l, int degree) {
  ojson j;
  j["m"] = sp.m;
  j["n"] = sp.n;
  j["k"] = sp.k;
  j["l"] = l;
  j["degree"] = degree;
  j["expected"] = sp.degree_cap();
  j["match"] = (degree == sp.degree_cap());
  return dump(j);
}

std::string coeffs_text(const ATable& at, const BTable& bt, bool recurrences_ok) {
  std::ostringstream os;
  os << "coeffs: m=" << at.m << " k=" << at.k << "\n";
  os << "q: " << at.q << "\n";
  os << "a[0][" << at.m << "] = " << rat_str(at.a0m) << "\n";
  for (int l = 1; l <= at.q; ++l)
    for (int r = 0; r <= at.m; ++r)
      os << "a[" << l << "][" << r << "] = " << rat_str(at.value(l, r)) << "\n";
  os << "b =";
  for (const Rat& v : bt.b) os << " " << rat_str(v);
  os << "\n";
  os << "recurrences: " << (recurrences_ok ? "ok" : "FAIL") << "\n";
  return os.str();
}

std::string coeffs_json(const ATable& at, const BTable& bt, bool recurrences_ok) {
  ojson j;
  j["m"] = at.m;
  j["k"] = at.k;
  j["q"] = at.q;
  ojson a;
  {
    std::ostringstream key;
    key << "a[0][" << at.m << "]";
    a[key.str()] = rat_str(at.a0m);
  }
  for (int l = 1; l <= at.q; ++l)
    for (int r = 0; r <= at.m; ++r) {
      std::ostringstream key;
      key << "a[" << l << "][" << r << "]";
      a[key.str()] = rat_str(at.value(l, r));
    }
  j["a"] = a;
  ojson b = ojson::array();
  for (const Rat& v : bt.b) b.push_back(rat_str(v));
  j["b"] = b;
  j["recurrences_ok"] = recurrences_ok;
  return dump(j);
}

std::string family_json(const CoverFamily& f) { return dump(family_ojson(f)); }

std::string matrix_text(const std::vector<std::vector<Int>>& a) {
  std::ostringstream os;
  for (const auto& row : a) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ' ';
      os << row[i].get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string profile_text(const DerivativeProfile& p) {
  std::ostringstream os;
  for (const Rat& v : p) os << rat_str(v) << '\n';
  return os.str();
}

}  // namespace gridcover
