#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycube/catalog.hpp"
#include "polycube/formulas.hpp"
#include "polycube/oracle.hpp"
#include "polycube/tables.hpp"

namespace polycube::verify {

struct CheckResult {
  std::string id;
  std::string check;
  std::string engine_a;
  std::string engine_b;
  std::string input;
  Count value_a;
  Count value_b;
  bool pass = false;
};

/// A published closed form that disagrees with the authoritative engine.
struct Erratum {
  std::string paper_location;
  std::string expected_source;
  Count observed;
  Count paper_value;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> runs;
  std::vector<Erratum> errata;

  void check(std::string id, std::string what, std::string engine_a, std::string engine_b, std::string input,
             Count a, Count b) {
    runs.push_back({std::move(id), std::move(what), std::move(engine_a), std::move(engine_b), std::move(input), a, b,
                    a == b});
  }

  void merge(VerificationReport other) {
    runs.insert(runs.end(), other.runs.begin(), other.runs.end());
    errata.insert(errata.end(), other.errata.begin(), other.errata.end());
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [](const auto& r) { return !r.pass; }));
  }

  /// 0 when clean, 1 with errata only, 2 with failed checks.
  int exit_code() const {
    if (failures() != 0) return 2;
    return errata.empty() ? 0 : 1;
  }

  void sort_runs() {
    std::stable_sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.runs)
    runs.push_back({{"id", c.id},
                    {"check", c.check},
                    {"engine_a", c.engine_a},
                    {"engine_b", c.engine_b},
                    {"input", c.input},
                    {"value_a", c.value_a.to_string()},
                    {"value_b", c.value_b.to_string()},
                    {"pass", c.pass}});
  nlohmann::ordered_json errata = nlohmann::ordered_json::array();
  for (const Erratum& e : r.errata)
    errata.push_back({{"paper_location", e.paper_location},
                      {"expected_source", e.expected_source},
                      {"observed", e.observed.to_string()},
                      {"paper_value", e.paper_value.to_string()},
                      {"note", e.note}});
  return {{"runs", runs}, {"errata", errata}};
}

inline void write_text(std::ostream& os, const VerificationReport& r) {
  for (const CheckResult& c : r.runs)
    os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(44) << c.id << ' ' << c.engine_a << '=' << c.value_a
       << ' ' << c.engine_b << '=' << c.value_b << '\n';
  for (const Erratum& e : r.errata)
    os << "ERRATUM " << e.paper_location << ": printed " << e.paper_value << ", " << e.expected_source << ' '
       << e.observed << " (" << e.note << ")\n";
  os << r.runs.size() << " checks, " << r.failures() << " failed, " << r.errata.size() << " errata\n";
}

namespace detail {

inline std::string dims_str(int b, int k, int h) {
  return std::to_string(b) + "x" + std::to_string(k) + "x" + std::to_string(h);
}

inline std::string pad(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

}  // namespace detail

/// Series rows for an n x n x n prism, in table order: diagonal, 2D x 2D,
/// skew cross a, skew cross b, total.
struct CubeRow {
  Count diagonal, two_d, sc_a, sc_b, total;
};

inline std::vector<CubeRow> series_cube_rows(int nmax) {
  using namespace series;
  Bounds bounds = Bounds::cube(std::max(nmax, 2));
  TruncatedSeries d = gf::diag(bounds), p = gf::p2dx2d(bounds), a = gf::sc_a(bounds), b = gf::sc_b(bounds);
  TruncatedSeries t = d + p + gf::sc(bounds);
  std::vector<CubeRow> rows;
  for (int n = 1; n <= nmax; ++n) {
    if (n == 1) {
      // a single cell; the 3D families are defined from n = 2 on
      rows.push_back({1, 0, 0, 0, total_min(t, 1, 1, 1)});
      continue;
    }
    rows.push_back({d.coeff(n, n, n), p.coeff(n, n, n), a.coeff(n, n, n), b.coeff(n, n, n), total_min(t, n, n, n)});
  }
  return rows;
}

inline VerificationReport reproduce_table1(int nmax, bool with_oracle = true) {
  if (nmax < 1 || nmax > 8) throw DomainError("table 1 covers n = 1..8");
  VerificationReport r;
  auto rows = series_cube_rows(nmax);
  for (int n = 1; n <= nmax; ++n) {
    const CubeRow& row = rows[n - 1];
    std::string in = detail::dims_str(n, n, n);
    std::string tag = "table1/n" + detail::pad(n) + "/";
    r.check(tag + "diag", "diagonal family", "series", "table", in, row.diagonal, tables::kCubeDiagonal[n - 1]);
    r.check(tag + "p2dx2d", "2D x 2D family", "series", "table", in, row.two_d, tables::kCubeTwoDxTwoD[n - 1]);
    r.check(tag + "sc_a", "skew cross a", "series", "table", in, row.sc_a, tables::kCubeSkewCrossA[n - 1]);
    r.check(tag + "sc_b", "skew cross b", "series", "table", in, row.sc_b, tables::kCubeSkewCrossB[n - 1]);
    r.check(tag + "total", "total", "series", "table", in, row.total, tables::kCubeTotal[n - 1]);
    if (n >= 3)
      r.check(tag + "sc_sum", "skew crosses", "formula", "series", in, formulas::sc_prism(n, n, n), row.sc_a + row.sc_b);
    if (with_oracle && n <= 4) {
      PrismDims d(n, n, n);
      r.check(tag + "total/oracle", "total", "oracle", "table", in, oracle::count_min_inscribed(d),
              tables::kCubeTotal[n - 1]);
      if (n >= 2) {
        auto fam = oracle::count_by_family(d);
        r.check(tag + "diag/oracle", "diagonal family", "oracle", "series", in, fam[FamilyTag::Diagonal], row.diagonal);
        r.check(tag + "p2dx2d/oracle", "2D x 2D family", "oracle", "series", in, fam[FamilyTag::TwoDxTwoD], row.two_d);
        r.check(tag + "sc_a/oracle", "skew cross a", "oracle", "series", in, fam[FamilyTag::SkewCrossA], row.sc_a);
        r.check(tag + "sc_b/oracle", "skew cross b", "oracle", "series", in, fam[FamilyTag::SkewCrossB], row.sc_b);
      }
    }
  }
  r.sort_runs();
  return r;
}

/// Totals by volume 1..n from the series engine, degenerate prisms included.
inline std::vector<Count> series_by_volume(int nmax) {
  series::Bounds bounds = series::Bounds::cube(std::max(nmax, 2));
  return series::total_by_volume(series::gf::total(bounds), nmax);
}

inline VerificationReport reproduce_table2(int nmax) {
  if (nmax < 1 || nmax > 10) throw DomainError("table 2 covers n = 1..10");
  VerificationReport r;
  auto seq = series_by_volume(nmax);
  for (int n = 1; n <= nmax; ++n) {
    std::string in = "volume " + std::to_string(n);
    std::string tag = "table2/v" + detail::pad(n) + "/";
    r.check(tag + "formula", "total by volume", "formula", "table", in, formulas::p3dmin_volume(n),
            tables::kByVolume[n - 1]);
    r.check(tag + "series", "total by volume", "series", "table", in, seq[n], tables::kByVolume[n - 1]);
  }
  r.sort_runs();
  return r;
}

/// Published closed forms compared with engines that are validated against
/// the tables; each disagreement becomes an erratum citing the first
/// differing coefficient.
inline VerificationReport check_printed_forms() {
  using namespace series;
  VerificationReport r;
  Bounds bounds = Bounds::cube(6);
  TruncatedSeries xyz = TruncatedSeries::monomial(bounds, 1, 1, 1);
  TruncatedSeries deg1_by_difference =
      gf::corner3d(bounds) - xyz - gf::tripod(bounds) - gf::deg2(bounds) - gf::two_d_hook(bounds);
  struct Pair {
    std::string location;
    std::string reference_name;
    std::string note;
    TruncatedSeries printed;
    TruncatedSeries reference;
    int from;
  };
  std::vector<Pair> pairs{
      {"closed form of SC_a", "series SCa", "numerator sign reversed", gf::printed::sc_a(bounds), gf::sc_a(bounds), 3},
      {"closed form of SC_b", "series SCb", "numerator sign reversed", gf::printed::sc_b(bounds), gf::sc_b(bounds), 3},
      {"SC_a as the sum of six relabelled SC_a1 terms", "series SCa", "the six-term sum must be doubled",
       gf::printed::sc_a_six_terms(bounds), gf::sc_a(bounds), 3},
      {"Deg1 corner series", "Pc - xyz - Tripod - Deg2 - TwoDhook", "the hook factor must be divided by xyz",
       gf::printed::deg1(bounds), deg1_by_difference, 2},
  };
  r.check("printed/deg1/corrected", "degree-one corner series", "series", "identity", "<= 6x6x6",
          gf::deg1(bounds) == deg1_by_difference ? 1 : 0, 1);
  for (const Pair& p : pairs) {
    bool found = false;
    for (int b = p.from; b <= bounds.x && !found; ++b)
      for (int k = p.from; k <= bounds.y && !found; ++k)
        for (int h = p.from; h <= bounds.z && !found; ++h) {
          Count want = p.reference.coeff(b, k, h), got = p.printed.coeff(b, k, h);
          if (want == got) continue;
          found = true;
          r.errata.push_back({p.location, p.reference_name, want, got,
                              p.note + "; first differs at " + detail::dims_str(b, k, h)});
        }
  }
  return r;
}

/// Pairwise engine comparisons on boxes with sides up to max_dim (oracle
/// runs are capped at sides 4), plus the printed-form errata.
inline VerificationReport crosscheck(int max_dim) {
  using namespace series;
  if (max_dim < 2) throw DomainError("crosscheck needs max_dim >= 2");
  VerificationReport r;
  const int odim = std::min(max_dim, 4);
  const int fdim = std::max(max_dim, 10);
  Bounds bounds = Bounds::cube(max_dim);
  TruncatedSeries diag = gf::diag(bounds), p2 = gf::p2dx2d(bounds), sca = gf::sc_a(bounds), scb = gf::sc_b(bounds),
                  sc = gf::sc(bounds), pc = gf::corner3d(bounds);
  TruncatedSeries total = diag + p2 + sc;

  // corner counts
  for (int b = 1; b <= fdim; ++b)
    for (int k = 1; k <= fdim; ++k)
      for (int h = 1; h <= fdim; ++h) {
        std::string in = detail::dims_str(b, k, h);
        std::string tag = "corner/" + detail::pad(b) + detail::pad(k) + detail::pad(h) + "/";
        Count rec = formulas::p3d_corner_rec(b, k, h);
        r.check(tag + "closed", "corner count", "recurrence", "closed form", in, rec,
                formulas::p3d_corner_closed(b, k, h));
        if (b <= odim && k <= odim && h <= odim)
          r.check(tag + "oracle", "corner count", "oracle", "recurrence", in,
                  oracle::count_min_corner(PrismDims(b, k, h)), rec);
        if (b <= max_dim && k <= max_dim && h <= max_dim)
          r.check(tag + "series", "corner count", "series", "recurrence", in, pc.coeff(b, k, h), rec);
      }

  // planar counts
  for (int b = 1; b <= 8; ++b)
    for (int k = 1; k <= 8; ++k) {
      std::string in = detail::dims_str(b, k, 1);
      std::string tag = "planar/" + detail::pad(b) + detail::pad(k) + "/";
      r.check(tag + "corner", "2D corner count", "formula", "recurrence", in, formulas::p2d_corner(b, k),
              formulas::p2d_corner_rec(b, k));
      if (b + k <= 12)
        r.check(tag + "degenerate", "2D minimal count", "oracle", "formula", in, oracle::count_2d_min(b, k),
                formulas::degenerate_min(b, k, 1));
    }

  // thin prisms
  for (int b = 2; b <= 6; ++b)
    for (int k = 2; k <= 6; ++k) {
      std::string tag = "thin/" + detail::pad(b) + detail::pad(k) + "/";
      Count t2 = formulas::p3dmin_thickness2(b, k);
      if (b <= 5 && k <= 5)
        r.check(tag + "t2/oracle", "thickness 2", "oracle", "formula", detail::dims_str(2, b, k),
                oracle::count_min_inscribed(PrismDims(2, b, k)), t2);
      r.check(tag + "t2/weighted", "thickness 2", "weighted 2D oracle", "formula", detail::dims_str(b, k, 1),
              oracle::weighted_2d_count(b, k), t2);
      if (b <= max_dim && k <= max_dim) {
        r.check(tag + "t2/series", "thickness 2", "series", "formula", detail::dims_str(2, b, k), total_min(total, 2, b, k),
                t2);
        if (max_dim >= 3)
          r.check(tag + "t3/series", "thickness 3", "series", "formula", detail::dims_str(3, b, k),
                  total_min(total, 3, b, k), formulas::p3dmin_thickness3(b, k));
      }
      if (b <= 4 && k <= 4)
        r.check(tag + "t3/oracle", "thickness 3", "oracle", "formula", detail::dims_str(3, b, k),
                oracle::count_min_inscribed(PrismDims(3, b, k)), formulas::p3dmin_thickness3(b, k));
    }

  // totals and families
  for (int b = 1; b <= max_dim; ++b)
    for (int k = 1; k <= max_dim; ++k)
      for (int h = 1; h <= max_dim; ++h) {
        std::string in = detail::dims_str(b, k, h);
        std::string tag = "prism/" + detail::pad(b) + detail::pad(k) + detail::pad(h) + "/";
        Count t = total_min(total, b, k, h);
        if (b <= odim && k <= odim && h <= odim) {
          PrismDims d(b, k, h);
          r.check(tag + "total/oracle", "total", "oracle", "series", in, oracle::count_min_inscribed(d), t);
          if (b >= 2 && k >= 2 && h >= 2) {
            auto fam = oracle::count_by_family(d);
            r.check(tag + "diag/oracle", "diagonal family", "oracle", "series", in, fam[FamilyTag::Diagonal],
                    diag.coeff(b, k, h));
            r.check(tag + "p2dx2d/oracle", "2D x 2D family", "oracle", "series", in, fam[FamilyTag::TwoDxTwoD],
                    p2.coeff(b, k, h));
            r.check(tag + "sc_a/oracle", "skew cross a", "oracle", "series", in, fam[FamilyTag::SkewCrossA],
                    sca.coeff(b, k, h));
            r.check(tag + "sc_b/oracle", "skew cross b", "oracle", "series", in, fam[FamilyTag::SkewCrossB],
                    scb.coeff(b, k, h));
          }
        }
        if (b >= 3 && k >= 3 && h >= 3)
          r.check(tag + "sc/formula", "skew crosses", "formula", "series", in, formulas::sc_prism(b, k, h),
                  sc.coeff(b, k, h));
        if (b >= 2 && k >= 2 && h >= 2)
          r.check(tag + "sc/split", "skew crosses", "series SC", "series SCa+SCb", in, sc.coeff(b, k, h),
                  sca.coeff(b, k, h) + scb.coeff(b, k, h));
      }

  // counts by volume: closed forms against the one-variable series
  const int vmax = 30;
  TruncatedSeries usc = gf::univariate::sc(vmax + 2), up2 = gf::univariate::p2dx2d(vmax + 2),
                  udiag = gf::univariate::diag(vmax + 2), utot = gf::univariate::total(vmax + 2);
  for (int v = 1; v <= vmax; ++v) {
    std::string in = "volume " + std::to_string(v);
    std::string tag = "volume/v" + detail::pad(v) + "/";
    r.check(tag + "sc", "skew crosses by volume", "formula", "series", in, formulas::sc_volume(v),
            usc.coeff(v + 2, 0, 0));
    r.check(tag + "p2dx2d", "2D x 2D by volume", "formula", "series", in, formulas::p2dx2d_volume(v),
            up2.coeff(v + 2, 0, 0));
    r.check(tag + "diag", "diagonal by volume", "formula", "series", in, formulas::diag_volume(v),
            udiag.coeff(v + 2, 0, 0));
    r.check(tag + "total", "total by volume", "formula", "series", in, formulas::p3dmin_volume(v),
            utot.coeff(v + 2, 0, 0));
  }
  // the one-variable totals against the three-variable series
  auto by_volume = total_by_volume(total, max_dim);
  for (int v = 1; v <= max_dim; ++v)
    r.check("volume/v" + detail::pad(v) + "/series3", "total by volume", "series", "one-variable series",
            "volume " + std::to_string(v), by_volume[v], utot.coeff(v + 2, 0, 0));

  r.merge(check_printed_forms());
  r.sort_runs();
  return r;
}

}  // namespace polycube::verify
