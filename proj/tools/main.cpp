#include "gridcover/cover.hpp"
#include "gridcover/nss.hpp"
#include "gridcover/report.hpp"
#include "gridcover/search.hpp"
#include "gridcover/symfun.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace gridcover;

// Exit status contract: 0 satisfied/ok, 1 unsatisfied, 2 input error,
// 3 budget exceeded.
constexpr int kOk = 0;
constexpr int kUnsatisfied = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Options {
  int m = 1;
  int n = 1;
  int k = 1;
  int l = 0;
  int size = 0;
  long cap = 500;
  std::string excluded;
  std::string emit = "text";
  std::string budget = "normal";
  std::string input;
  std::string output;
  std::string matrix_out;
  std::string profile_out;
  bool use_appendix = false;
};

GridPoint parse_excluded(const std::string& s, int n, int m) {
  GridPoint p(n, 0);
  if (s.empty()) return p;
  std::istringstream is(s);
  std::string tok;
  int i = 0;
  while (std::getline(is, tok, ',')) {
    if (i >= n) throw std::invalid_argument("excluded point has too many coordinates");
    size_t pos = 0;
    p[i] = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad coordinate '" + tok + "'");
    ++i;
  }
  if (i != n) throw std::invalid_argument("excluded point needs " + std::to_string(n) + " coordinates");
  for (int x : p)
    if (x < 0 || x > m) throw std::invalid_argument("excluded point outside grid");
  return p;
}

SearchLimits limits_for(const std::string& budget) {
  if (budget == "low") return {1'000'000};
  if (budget == "normal") return {50'000'000};
  if (budget == "high") return {std::numeric_limits<long>::max()};
  throw std::invalid_argument("budget must be low, normal or high");
}

void emit(const Options& o, const std::string& text, const std::string& json) {
  std::cout << (o.emit == "json" ? json : text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file " + path);
  os << content;
}

int cmd_verify(const Options& o) {
  GridSpec g(o.m, o.n);
  GridPoint excl = parse_excluded(o.excluded, o.n, o.m);
  if (o.use_appendix == !o.input.empty())
    throw std::invalid_argument("pass exactly one of a cover file or --appendix");
  CoverFamily f;
  if (o.use_appendix) {
    f = appendix_cover(o.n);
  } else {
    std::ifstream is(o.input);
    if (!is) throw std::invalid_argument("cannot open cover file " + o.input);
    f = parse_cover_file(is, o.n);
  }
  CoverReport r = verify_almost_cover(g, o.k, f, excl);
  emit(o, cover_report_text(r, f), cover_report_json(r, f));
  return r.satisfied ? kOk : kUnsatisfied;
}

int cmd_construct(const Options& o, const std::string& kind) {
  GridSpec g(o.m, o.n);
  CoverFamily f;
  if (kind == "two-cover") {
    f = construct_two_cover(g, parse_excluded(o.excluded, o.n, o.m));
  } else if (kind == "layered") {
    f = construct_layered_cover(g, o.k);
  } else {
    f = appendix_cover(o.n);
  }
  std::string text = cover_file_string(f);
  if (!o.output.empty())
    write_file(o.output, text);
  else
    emit(o, text, family_json(f));
  return kOk;
}

int cmd_search(const Options& o) {
  GridSpec g(o.m, o.n);
  GridPoint excl = parse_excluded(o.excluded, o.n, o.m);
  SearchStats stats;
  std::optional<CoverFamily> found;
  try {
    found = find_cover(g, o.k, o.size, excl, limits_for(o.budget), &stats);
  } catch (const BudgetExceeded&) {
    std::cout << "search: m=" << o.m << " n=" << o.n << " k=" << o.k << " size=" << o.size
              << "\nresult: undecided (node budget exhausted after " << stats.nodes
              << " nodes)\n";
    return kBudget;
  }
  emit(o, search_result_text(g, o.k, o.size, found, stats.nodes),
       search_result_json(g, o.k, o.size, found, stats.nodes));
  if (found && !o.output.empty()) write_file(o.output, cover_file_string(*found));
  return found ? kOk : kUnsatisfied;
}

int cmd_certify(const Options& o) {
  SearchStats stats;
  try {
    Certificate c = certify(o.m, o.n, o.k, limits_for(o.budget), &stats);
    emit(o, certificate_text(c, o.m, o.n, o.k, stats.nodes),
         certificate_json(c, o.m, o.n, o.k, stats.nodes));
    if (!o.output.empty()) write_file(o.output, cover_file_string(c.witness));
    return c.status == CertStatus::kExact ? kOk : kUnsatisfied;
  } catch (const BudgetExceeded&) {
    LowerBound lb = lower_bound(o.m, o.n, o.k);
    std::cout << "certify: m=" << o.m << " n=" << o.n << " k=" << o.k
              << "\nlower bound: " << lb.value << " (" << bound_tag_name(lb.tag)
              << ")\nresult: undecided (node budget exhausted after " << stats.nodes
              << " nodes)\n";
    return kBudget;
  }
}

int cmd_nss_rank(const Options& o) {
  SpaceParams sp(o.m, o.n, o.k);
  if (!o.matrix_out.empty()) write_file(o.matrix_out, matrix_text(psi_matrix(sp, o.cap)));
  RankResult r = psi_matrix_rank(sp, o.cap);
  emit(o, rank_text(sp, r), rank_json(sp, r));
  return r.is_isomorphism ? kOk : kUnsatisfied;
}

int cmd_nss_reduce(const Options& o) {
  SpaceParams sp(o.m, o.n, o.k);
  Polynomial p(o.n);
  if (o.input.empty() || o.input == "-") {
    p = parse_polynomial(std::cin, o.n);
  } else {
    std::ifstream is(o.input);
    if (!is) throw std::invalid_argument("cannot open polynomial file " + o.input);
    p = parse_polynomial(is, o.n);
  }
  Polynomial r = reduce(p, sp);
  std::ostringstream os;
  write_polynomial(os, r);
  if (!o.output.empty())
    write_file(o.output, os.str());
  else
    std::cout << os.str();
  if (!o.profile_out.empty()) write_file(o.profile_out, profile_text(psi(r, sp)));
  return kOk;
}

int cmd_nss_y(const Options& o) {
  Rat ys = y_sum(o.m, o.k, o.n);
  std::optional<Rat> yc = y_closed(o.m, o.k, o.n);
  emit(o, y_report_text(o.m, o.n, o.k, ys, yc), y_report_json(o.m, o.n, o.k, ys, yc));
  return (!yc || *yc == ys) ? kOk : kUnsatisfied;
}

int cmd_nss_extremal(const Options& o) {
  SpaceParams sp(o.m, o.n, o.k);
  int deg = extremal_degree_check(sp, o.l);
  emit(o, extremal_text(sp, o.l, deg), extremal_json(sp, o.l, deg));
  return deg == sp.degree_cap() ? kOk : kUnsatisfied;
}

int cmd_coeffs(const Options& o) {
  ATable at = a_table(o.m, o.k);
  BTable bt = b_table(o.m, o.k);
  bool rec_ok = o.k >= 2 ? a_recurrence_check(o.m, o.k) : true;
  emit(o, coeffs_text(at, bt, rec_ok), coeffs_json(at, bt, rec_ok));
  return rec_ok ? kOk : kUnsatisfied;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for hyperplane almost-k-covers of the grid {0,...,m}^n"};
  app.require_subcommand(1);
  Options o;
  int status = kOk;
  auto run = [&status](auto fn) {
    return [&status, fn]() { status = fn(); };
  };

  auto add_emit = [&o](CLI::App* c) {
    c->add_option("--emit", o.emit, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_mnk = [&o](CLI::App* c, bool with_k = true) {
    c->add_option("--m", o.m, "Grid side (points 0..m)")->required();
    c->add_option("--n", o.n, "Dimension")->required();
    if (with_k) c->add_option("--k", o.k, "Covering multiplicity")->required();
  };

  // verify
  auto* verify = app.add_subcommand("verify", "Check a cover file against the grid");
  add_mnk(verify);
  verify->add_option("--excluded", o.excluded, "Excluded point a1,a2,... (default origin)");
  verify->add_option("file", o.input, "Cover file");
  verify->add_flag("--appendix", o.use_appendix, "Use the built-in curated family instead of a file");
  add_emit(verify);
  verify->callback(run([&o] { return cmd_verify(o); }));

  // construct
  auto* construct = app.add_subcommand("construct", "Emit one of the known constructions");
  construct->require_subcommand(1);
  auto* ctc = construct->add_subcommand("two-cover", "Size mn+m almost 2-cover avoiding a point");
  add_mnk(ctc, false);
  ctc->add_option("--excluded", o.excluded, "Excluded point (default origin)");
  ctc->add_option("--output", o.output, "Write cover file here instead of stdout");
  add_emit(ctc);
  ctc->callback(run([&o] { return cmd_construct(o, "two-cover"); }));
  auto* cl = construct->add_subcommand("layered", "Size mn+m*k(k-1)/2 almost k-cover");
  add_mnk(cl);
  cl->add_option("--output", o.output, "Write cover file here instead of stdout");
  add_emit(cl);
  cl->callback(run([&o] { return cmd_construct(o, "layered"); }));
  auto* ca = construct->add_subcommand("appendix", "Curated minimum almost 3-cover of {0,1,2}^n");
  ca->add_option("--n", o.n, "Dimension (2, 3 or 4)")->required();
  ca->add_option("--output", o.output, "Write cover file here instead of stdout");
  add_emit(ca);
  ca->callback(run([&o] {
    o.m = 2;
    o.k = 3;
    return cmd_construct(o, "appendix");
  }));

  // search
  auto* search = app.add_subcommand("search", "Exhaustive search for a cover of a given size");
  add_mnk(search);
  search->add_option("--size", o.size, "Total multiplicity")->required();
  search->add_option("--excluded", o.excluded, "Excluded point (default origin)");
  search->add_option("--budget", o.budget, "Node budget: low, normal, high")
      ->check(CLI::IsMember({"low", "normal", "high"}))
      ->capture_default_str();
  search->add_option("--output", o.output, "Write the witness cover file here");
  add_emit(search);
  search->callback(run([&o] { return cmd_search(o); }));

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Pin the minimum cover size against the proven bound");
  add_mnk(certify_cmd);
  certify_cmd->add_option("--budget", o.budget, "Node budget: low, normal, high")
      ->check(CLI::IsMember({"low", "normal", "high"}))
      ->capture_default_str();
  certify_cmd->add_option("--output", o.output, "Write the witness cover file here");
  add_emit(certify_cmd);
  certify_cmd->callback(run([&o] { return cmd_certify(o); }));

  // nss
  auto* nss = app.add_subcommand("nss", "Reduced-space machinery");
  nss->require_subcommand(1);
  auto* rank = nss->add_subcommand("rank", "Dimension and exact rank of the derivative map");
  add_mnk(rank);
  rank->add_option("--cap", o.cap, "Refuse instances with N above this")->capture_default_str();
  rank->add_option("--matrix-out", o.matrix_out, "Dump the integer matrix (row-major text)");
  add_emit(rank);
  rank->callback(run([&o] { return cmd_nss_rank(o); }));
  auto* red = nss->add_subcommand("reduce", "Reduce a polynomial file");
  add_mnk(red);
  red->add_option("--input", o.input, "Polynomial file ('-' for stdin)");
  red->add_option("--output", o.output, "Write the reduced polynomial here");
  red->add_option("--profile-out", o.profile_out, "Dump the derivative profile of the result");
  red->callback(run([&o] { return cmd_nss_reduce(o); }));
  auto* y = nss->add_subcommand("y", "Top power-sum coefficient, summed and closed form");
  add_mnk(y);
  add_emit(y);
  y->callback(run([&o] { return cmd_nss_y(o); }));
  auto* ext = nss->add_subcommand("extremal", "Degree of the reduced extremal polynomial");
  add_mnk(ext);
  ext->add_option("--l", o.l, "Origin vanishing order, 0 <= l <= k-2")->required();
  add_emit(ext);
  ext->callback(run([&o] { return cmd_nss_extremal(o); }));

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Mixed falling-factorial coefficient tables");
  coeffs->add_option("--m", o.m, "Grid side")->required();
  coeffs->add_option("--k", o.k, "Power")->required();
  add_emit(coeffs);
  coeffs->callback(run([&o] { return cmd_coeffs(o); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CoverParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}
