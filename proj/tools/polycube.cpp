#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycube/catalog.hpp"
#include "polycube/core.hpp"
#include "polycube/formulas.hpp"
#include "polycube/oracle.hpp"
#include "polycube/verify.hpp"

namespace {

using namespace polycube;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 2;
constexpr int kExitUsage = 64;
constexpr int kExitOverflow = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoxArgs {
  int b = 1, k = 1, h = 1;
  void add_to(CLI::App* cmd) {
    auto positive = CLI::Range(1, 1 << 20);
    cmd->add_option("--b", b, "side along x")->required()->check(positive);
    cmd->add_option("--k", k, "side along y")->required()->check(positive);
    cmd->add_option("--h", h, "side along z")->required()->check(positive);
  }
  PrismDims dims() const { return {b, k, h}; }
};

Count formula_count(int b, int k, int h) {
  if (b == 1 || k == 1 || h == 1) return formulas::degenerate_min(b, k, h);
  std::array<int, 3> s{b, k, h};
  std::sort(s.begin(), s.end());
  if (s[0] == 2) return formulas::p3dmin_thickness2(s[1], s[2]);
  if (s[0] == 3) return formulas::p3dmin_thickness3(s[1], s[2]);
  throw UsageError("no closed formula for prisms with every side >= 4; use --engine series");
}

int run_count(const BoxArgs& box, const std::string& engine) {
  Count v;
  if (engine == "oracle")
    v = oracle::count_min_inscribed(box.dims());
  else if (engine == "formula")
    v = formula_count(box.b, box.k, box.h);
  else
    v = series::total_min(box.b, box.k, box.h);
  std::cout << v << '\n';
  return kExitOk;
}

int run_table1(int nmax) {
  auto rows = verify::series_cube_rows(nmax);
  std::cout << "n,family,series,table,status\n";
  bool ok = true;
  for (int n = 1; n <= nmax; ++n) {
    const auto& r = rows[n - 1];
    std::array<std::pair<const char*, std::pair<Count, Count>>, 5> cells{{
        {"Diagonal", {r.diagonal, tables::kCubeDiagonal[n - 1]}},
        {"TwoDxTwoD", {r.two_d, tables::kCubeTwoDxTwoD[n - 1]}},
        {"SkewCrossA", {r.sc_a, tables::kCubeSkewCrossA[n - 1]}},
        {"SkewCrossB", {r.sc_b, tables::kCubeSkewCrossB[n - 1]}},
        {"Total", {r.total, tables::kCubeTotal[n - 1]}},
    }};
    for (const auto& [name, vals] : cells) {
      bool pass = vals.first == vals.second;
      ok = ok && pass;
      std::cout << n << ',' << name << ',' << vals.first << ',' << vals.second << ',' << (pass ? "PASS" : "FAIL")
                << '\n';
    }
  }
  return ok ? kExitOk : kExitFailures;
}

int run_table2(int nmax) {
  auto seq = verify::series_by_volume(nmax);
  std::cout << "n,formula,series,table,status\n";
  bool ok = true;
  for (int n = 1; n <= nmax; ++n) {
    Count f = formulas::p3dmin_volume(n), want = tables::kByVolume[n - 1];
    bool pass = f == want && seq[n] == want;
    ok = ok && pass;
    std::cout << n << ',' << f << ',' << seq[n] << ',' << want << ',' << (pass ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitFailures;
}

int run_verify(int max_dim, const std::string& report_path) {
  verify::VerificationReport r = verify::reproduce_table1(8);
  r.merge(verify::reproduce_table2(10));
  r.merge(verify::crosscheck(max_dim));
  r.sort_runs();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw UsageError("cannot write " + report_path);
    out << verify::to_json(r).dump(2) << '\n';
  }
  verify::write_text(std::cout, r);
  return r.exit_code();
}

int run_list(const BoxArgs& box, const std::string& family) {
  std::optional<FamilyTag> want;
  if (!family.empty()) {
    want = parse_family(family);
    if (!want) throw UsageError("unknown family: " + family);
    if (box.b < 2 || box.k < 2 || box.h < 2) throw UsageError("--family needs every side >= 2");
  }
  PrismDims d = box.dims();
  oracle::BoxGraph g(d);
  write_header(std::cout, d);
  bool first = true;
  std::vector<Cell> cells;
  oracle::enumerate(g, {d, min_volume(d), true, std::nullopt}, [&](std::span<const int> idx) {
    cells.clear();
    for (int i : idx) cells.push_back(g.cell(i));
    Polycube p(d, cells);
    if (want && oracle::classify(p) != *want) return;
    if (!first) std::cout << '\n';
    first = false;
    write_cells(std::cout, p.cells());
  });
  return kExitOk;
}

int run_classify(const BoxArgs& box) {
  if (box.b < 2 || box.k < 2 || box.h < 2) throw UsageError("classify needs every side >= 2");
  auto counts = oracle::count_by_family(box.dims());
  std::cout << "family,count\n";
  for (FamilyTag t : kAllFamilies) std::cout << to_string(t) << ',' << counts[t] << '\n';
  return kExitOk;
}

series::Bounds parse_bounds(const std::string& s) {
  std::array<int, 3> v{};
  std::istringstream is(s);
  char sep1 = 0, sep2 = 0;
  if (!(is >> v[0] >> sep1 >> v[1] >> sep2 >> v[2]) || sep1 != ',' || sep2 != ',' || !is.eof())
    throw UsageError("--bounds must look like BX,BY,BZ");
  for (int x : v)
    if (x < 0 || x > 64) throw UsageError("bounds must lie in 0..64");
  return {v[0], v[1], v[2]};
}

int run_expand(const std::string& name, const std::string& bounds, const std::string& out_path) {
  series::Bounds b = parse_bounds(bounds);
  series::TruncatedSeries s = series::expand(name, b);
  if (out_path.empty()) {
    series::write_csv(std::cout, s);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    series::write_csv(out, s);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal inscribed polycubes: enumeration, formulas and generating functions"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  BoxArgs count_box, list_box, classify_box;
  std::string engine = "series", family, report, gf_name, bounds, out;
  int nmax1 = 8, nmax2 = 10, max_dim = 4;

  auto* count = app.add_subcommand("count", "minimal inscribed polycubes in one prism");
  count_box.add_to(count);
  count->add_option("--engine", engine, "oracle, formula or series")
      ->check(CLI::IsMember({"oracle", "formula", "series"}));

  auto* table1 = app.add_subcommand("table1", "counts for n x n x n prisms against the published table");
  table1->add_option("--nmax", nmax1)->check(CLI::Range(1, 8));

  auto* table2 = app.add_subcommand("table2", "counts by volume against the published table");
  table2->add_option("--nmax", nmax2)->check(CLI::Range(1, 10));

  auto* verify = app.add_subcommand("verify", "cross-check every engine and write a JSON report");
  verify->add_option("--max-dim", max_dim)->check(CLI::Range(2, 12));
  verify->add_option("--report", report, "JSON report path");

  auto* list = app.add_subcommand("list", "stream minimal inscribed polycubes");
  list_box.add_to(list);
  list->add_option("--family", family, "Diagonal, TwoDxTwoD, SkewCrossA or SkewCrossB");

  auto* classify = app.add_subcommand("classify", "per-family counts by enumeration");
  classify_box.add_to(classify);

  auto* expand = app.add_subcommand("expand", "coefficients of a named generating function");
  expand->add_option("--gf", gf_name)->required();
  expand->add_option("--bounds", bounds, "BX,BY,BZ")->required();
  expand->add_option("--out", out, "CSV path (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_box, engine);
    if (*table1) return run_table1(nmax1);
    if (*table2) return run_table2(nmax2);
    if (*verify) return run_verify(max_dim, report);
    if (*list) return run_list(list_box, family);
    if (*classify) return run_classify(classify_box);
    if (*expand) return run_expand(gf_name, bounds, out);
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const oracle::ClassificationError& e) {
    std::cerr << "classification failed: " << e.what() << '\n';
    return kExitFailures;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
