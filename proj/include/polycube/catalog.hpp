#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycube/formulas.hpp"
#include "polycube/series.hpp"

namespace polycube::series {

class UnknownGF : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace gf {

using TS = TruncatedSeries;

inline TS one(Bounds b) { return TS::constant(b, 1); }

/// The variable of the given axis (0 = x, 1 = y, 2 = z).
inline TS var(Bounds b, int axis, int power = 1) {
  std::array<int, 3> e{};
  e[axis] = power;
  return TS::monomial(b, e[0], e[1], e[2]);
}

inline TS mono(Bounds b, int i, int j, int l, Count c = 1) { return TS::monomial(b, i, j, l, c); }

/// 1 - x_a
inline TS one_minus(Bounds b, int a) { return one(b) - var(b, a); }

/// 1 - x_a - x_c
inline TS one_minus(Bounds b, int a, int c) { return one(b) - var(b, a) - var(b, c); }

/// num / (f1 f2 ...), dividing factor by factor.
inline TS over(TS num, std::initializer_list<TS> factors) {
  for (const TS& f : factors) num = div(num, f);
  return num;
}

inline TS stair(Bounds b) { return over(mono(b, 1, 1, 1), {one(b) - var(b, 0) - var(b, 1) - var(b, 2)}); }

inline TS tripod(Bounds b) { return over(mono(b, 2, 2, 2), {one_minus(b, 0), one_minus(b, 1), one_minus(b, 2)}); }

inline TS two_d_hook(Bounds b) {
  return over(mono(b, 2, 2, 1), {one_minus(b, 0), one_minus(b, 1)}) +
         over(mono(b, 2, 1, 2), {one_minus(b, 0), one_minus(b, 2)}) +
         over(mono(b, 1, 2, 2), {one_minus(b, 2), one_minus(b, 1)});
}

/// 2D corner-polyominoes in the (u, v) plane: 2uv/(1-u-v) - uv/((1-u)(1-v)).
inline TS pc2d(Bounds b, int u, int v) {
  TS uv = var(b, u) * var(b, v);
  return over(Count(2) * uv, {one_minus(b, u, v)}) - over(uv, {one_minus(b, u), one_minus(b, v)});
}

inline TS deg2(Bounds b) {
  auto piece = [&](int u, int v, int w) {
    TS uv = var(b, u) * var(b, v);
    TS bracket = over(Count(2) * uv, {one_minus(b, u, v)}) - over(Count(2) * uv, {one_minus(b, u), one_minus(b, v)});
    return bracket * over(var(b, w, 2), {one_minus(b, w)});
  };
  return piece(1, 2, 0) + piece(0, 2, 1) + piece(0, 1, 2);
}

inline TS hook_sum(Bounds b) { return tripod(b) + deg2(b) + two_d_hook(b); }

/// 1 + (Tripod + Deg2 + 2Dhook) / xyz
inline TS hook_factor(Bounds b) { return one(b) + hook_sum(b.grown(1, 1, 1)).shifted_down(1, 1, 1); }

inline TS corner3d(Bounds b) { return stair(b) * hook_factor(b); }

inline TS deg1(Bounds b) { return (stair(b) - mono(b, 1, 1, 1)) * hook_factor(b); }

inline TS one_diag(Bounds b) {
  TS f = hook_factor(b);
  return stair(b) * f * f;
}

/// Two diagonals perpendicular to the (u, v) face; w is the pilar axis.
inline TS two_diag(Bounds b, int u, int v, int w) {
  std::array<int, 3> grow{};
  grow[u] = 1;
  grow[v] = 1;
  Bounds g = b.grown(grow[0], grow[1], grow[2]);
  TS p = pc2d(g, u, v);
  TS sq = (p * p).shifted_down(grow[0], grow[1], grow[2]).truncated(b);
  return sq * over(var(b, w), {one_minus(b, w), one_minus(b, w)});
}

inline TS cross3d(Bounds b) {
  auto tw = [&](int a) { return var(b, a, 2) * (Count(2) * one(b) - var(b, a)); };
  return over(tw(0) * tw(1) * tw(2),
              {one_minus(b, 0), one_minus(b, 0), one_minus(b, 1), one_minus(b, 1), one_minus(b, 2), one_minus(b, 2)});
}

inline TS diag(Bounds b) {
  return Count(4) * one_diag(b) - Count(2) * (two_diag(b, 1, 2, 0) + two_diag(b, 0, 2, 1) + two_diag(b, 0, 1, 2)) +
         Count(3) * cross3d(b);
}

inline TS skew_hook(Bounds b) {
  return over(mono(b, 1, 0, 1), {one_minus(b, 0), one_minus(b, 1), one_minus(b, 2)});
}

/// 2D corner-polyominoes in the (long, short) plane whose extent along
/// `long_axis` is at least two: ls (2/(1-l-s) - 1/((1-l)(1-s)) - 1/(1-s)).
inline TS corner_ge2(Bounds b, int long_axis, int short_axis) {
  TS ls = var(b, long_axis) * var(b, short_axis);
  return over(Count(2) * ls, {one_minus(b, long_axis, short_axis)}) -
         over(ls, {one_minus(b, long_axis), one_minus(b, short_axis)}) - over(ls, {one_minus(b, short_axis)});
}

/// 2D x 2D polyominoes in the xy and yz planes.
inline TS p_xy_yz(Bounds b) {
  TS blue = Count(2) * corner_ge2(b, 0, 1) - over(mono(b, 2, 1, 0), {one_minus(b, 0), one_minus(b, 1)});
  TS yellow = Count(2) * corner_ge2(b, 2, 1) - over(mono(b, 0, 1, 2), {one_minus(b, 1), one_minus(b, 2)});
  return Count(2) * blue * skew_hook(b) * yellow;
}

/// Evaluate `build` at bounds permuted by `to` and relabel back, so that the
/// result is the `to`-relabelled series at bounds b.
template <class F>
TS relabelled(Bounds b, std::array<int, 3> to, F build) {
  std::array<int, 3> tb{b.x, b.y, b.z};
  std::array<int, 3> src{};
  for (int a = 0; a < 3; ++a) src[a] = tb[to[a]];
  return build(Bounds{src[0], src[1], src[2]}).permuted(to);
}

inline constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

inline TS p2dx2d(Bounds b) {
  return p_xy_yz(b) + relabelled(b, {1, 0, 2}, p_xy_yz) + relabelled(b, {0, 2, 1}, p_xy_yz);
}

/// Skew crosses of type a with two contact faces normal to y and one normal to x.
inline TS sc_a1(Bounds b) {
  Bounds g = b.grown(0, 0, 1);
  TS prod = corner_ge2(g, 2, 1) * corner_ge2(g, 0, 1) * corner_ge2(g, 2, 0);
  return (Count(4) * var(g, 1) * prod).shifted_down(0, 0, 1);
}

/// Six relabelled copies of sc_a1 cover the axis assignments; each copy
/// accounts for half of the twelve face triplets.
inline TS sc_a(Bounds b) {
  TS acc(b);
  for (const auto& p : kPermutations) acc = acc + relabelled(b, p, sc_a1);
  return Count(2) * acc;
}

inline TS sc_b(Bounds b) {
  return Count(8) * (corner_ge2(b, 2, 0) * corner_ge2(b, 0, 1) * corner_ge2(b, 1, 2) +
                     corner_ge2(b, 1, 0) * corner_ge2(b, 2, 1) * corner_ge2(b, 0, 2));
}

inline TS sc_denominator_divide(TS num) {
  Bounds b = num.bounds();
  return over(std::move(num), {one_minus(b, 0, 1), one_minus(b, 0, 2), one_minus(b, 1, 2), one_minus(b, 0),
                               one_minus(b, 0), one_minus(b, 1), one_minus(b, 1), one_minus(b, 2), one_minus(b, 2)});
}

inline TS sc(Bounds b) { return sc_denominator_divide(mono(b, 3, 3, 3, 64)); }

inline TS total(Bounds b) { return diag(b) + p2dx2d(b) + sc(b); }

// Closed forms exactly as printed; used by the verification harness.
namespace printed {

inline TS deg1(Bounds b) { return (stair(b) - mono(b, 1, 1, 1)) * (one(b) + hook_sum(b)); }

inline TS sc_a1_closed(Bounds b) {
  auto lin = [&](int plus, int minus) { return one(b) + var(b, plus) - var(b, minus); };
  TS num = Count(4) * mono(b, 3, 3, 3) * lin(0, 2) * lin(1, 2) * lin(1, 0);
  return sc_denominator_divide(num);
}

/// (1-x+y)(1-x+z) + (1-y+x)(1-y+z) + (1-z+x)(1-z+y)
inline TS sc_symmetric_sum(Bounds b) {
  auto f = [&](int a, int p, int q) {
    return (one(b) - var(b, a) + var(b, p)) * (one(b) - var(b, a) + var(b, q));
  };
  return f(0, 1, 2) + f(1, 0, 2) + f(2, 0, 1);
}

inline TS sc_a(Bounds b) { return sc_denominator_divide(Count(-16) * mono(b, 3, 3, 3) * sc_symmetric_sum(b)); }

inline TS sc_b(Bounds b) {
  return sc_denominator_divide(Count(16) * mono(b, 3, 3, 3) * (sc_symmetric_sum(b) - Count(4) * one(b)));
}

/// Literal sum of six relabelled copies of sc_a1, without the doubling.
inline TS sc_a_six_terms(Bounds b) {
  TS acc(b);
  for (const auto& p : kPermutations) acc = acc + relabelled(b, p, gf::sc_a1);
  return acc;
}

}  // namespace printed

// One-variable generating functions (bounds (n, 0, 0)); volume v sits at x^(v+2).
namespace univariate {

inline Bounds line(int n) { return {n, 0, 0}; }

inline TS poly(int n, std::initializer_list<long long> coeffs_low_to_high, int shift) {
  TS s(line(n));
  int e = shift;
  for (long long c : coeffs_low_to_high) {
    if (e <= n) s.set(e, 0, 0, Count(c));
    ++e;
  }
  return s;
}

inline TS factor_pow(int n, int base, int times) {
  // (1 - base x)^times
  TS f = poly(n, {1, -base}, 0);
  TS r = TS::constant(line(n), 1);
  for (int i = 0; i < times; ++i) r = r * f;
  return r;
}

inline TS sc(int n) { return over(poly(n, {64}, 9), {factor_pow(n, 2, 3), factor_pow(n, 1, 6)}); }

inline TS p2dx2d(int n) {
  return over(poly(n, {6, 24, 24}, 8), {factor_pow(n, 2, 2), factor_pow(n, 1, 7)});
}

inline TS diag(int n) {
  return over(poly(n, {1, -10, 49, -126, 234, -207, 129, 0, 36}, 3),
              {factor_pow(n, 3, 1), factor_pow(n, 2, 2), factor_pow(n, 1, 6)});
}

inline TS total(int n) {
  return over(poly(n, {1, -13, 81, -293, 710, -1155, 1276, -1117, 510, 36, 72}, 3),
              {factor_pow(n, 3, 1), factor_pow(n, 2, 3), factor_pow(n, 1, 7)});
}

}  // namespace univariate

}  // namespace gf

/// A named rational generating function and the prisms where its
/// coefficient is the intended count.
struct GFEntry {
  std::string_view name;
  std::string_view description;
  std::function<TruncatedSeries(Bounds)> build;
  std::function<bool(int, int, int)> valid;
};

namespace detail {
inline bool all_at_least(int b, int k, int h, int m) { return b >= m && k >= m && h >= m; }
}  // namespace detail

inline const std::vector<GFEntry>& catalog() {
  using detail::all_at_least;
  auto any = [](int b, int k, int h) { return all_at_least(b, k, h, 1); };
  auto ge2 = [](int b, int k, int h) { return all_at_least(b, k, h, 2); };
  auto planar = [](int, int, int h) { return h == 0; };
  static const std::vector<GFEntry> entries{
      {"Tripod", "corner-polyominoes whose corner cell has degree three", gf::tripod, ge2},
      {"Stair", "3D stairs between opposite corners", gf::stair, any},
      {"TwoDhook", "2D hooks lying in a slice parallel to a face", gf::two_d_hook, any},
      {"Deg2", "corner-polyominoes whose corner cell has degree two, excluding 2D hooks", gf::deg2, ge2},
      {"Deg1", "corner-polyominoes whose corner cell has degree one", gf::deg1, ge2},
      {"Pc", "3D corner-polyominoes", gf::corner3d, any},
      {"Pc2D", "2D corner-polyominoes in the xy plane", [](Bounds b) { return gf::pc2d(b, 0, 1); }, planar},
      {"OneDiag", "diagonal polyominoes along one given space diagonal", gf::one_diag, ge2},
      {"TwoDiagX", "diagonal polyominoes on the two diagonals perpendicular to the yz face",
       [](Bounds b) { return gf::two_diag(b, 1, 2, 0); }, ge2},
      {"TwoDiagY", "diagonal polyominoes on the two diagonals perpendicular to the xz face",
       [](Bounds b) { return gf::two_diag(b, 0, 2, 1); }, ge2},
      {"TwoDiagZ", "diagonal polyominoes on the two diagonals perpendicular to the xy face",
       [](Bounds b) { return gf::two_diag(b, 0, 1, 2); }, ge2},
      {"Cross3D", "3D crosses", gf::cross3d, ge2},
      {"Diag", "all diagonal polyominoes", gf::diag, ge2},
      {"SH", "skew hooks", gf::skew_hook, ge2},
      {"CornerZ2", "2D corner-polyominoes in the yz plane with z extent >= 2",
       [](Bounds b) { return gf::corner_ge2(b, 2, 1); }, any},
      {"CornerX2", "2D corner-polyominoes in the xy plane with x extent >= 2",
       [](Bounds b) { return gf::corner_ge2(b, 0, 1); }, any},
      {"CornerY2", "2D corner-polyominoes in the xz plane with z extent >= 2",
       [](Bounds b) { return gf::corner_ge2(b, 2, 0); }, any},
      {"PxyYz", "2D x 2D polyominoes in the xy and yz planes", gf::p_xy_yz, ge2},
      {"P2Dx2D", "all 2D x 2D polyominoes", gf::p2dx2d, ge2},
      {"SCa1", "type a skew crosses with contact faces normal to y, y and x", gf::sc_a1, ge2},
      {"SCa", "skew crosses of type a", gf::sc_a, ge2},
      {"SCb", "skew crosses of type b", gf::sc_b, ge2},
      {"SC", "all skew crosses", gf::sc, ge2},
      {"Total", "all minimal inscribed polycubes (non-degenerate prisms)", gf::total, ge2},
  };
  return entries;
}

inline const GFEntry& find_gf(std::string_view name) {
  for (const GFEntry& e : catalog())
    if (e.name == name) return e;
  throw UnknownGF("unknown generating function: " + std::string(name));
}

inline TruncatedSeries expand(std::string_view name, Bounds b) { return find_gf(name).build(b); }

/// Minimal inscribed count from the series engine; degenerate prisms use the
/// planar formula since the assembled series is only valid for sides >= 2.
inline Count total_min(const TruncatedSeries& total_series, int b, int k, int h) {
  if (b < 1 || k < 1 || h < 1) throw DomainError("prism dimensions must be positive");
  if (b == 1 || k == 1 || h == 1) return formulas::degenerate_min(b, k, h);
  return total_series.coeff(b, k, h);
}

inline Count total_min(int b, int k, int h) {
  if (b == 1 || k == 1 || h == 1) return total_min(TruncatedSeries(Bounds{}), b, k, h);
  return total_min(gf::total(Bounds{b, k, h}), b, k, h);
}

/// Volume-indexed totals over all prisms (degenerate ones included) for
/// volumes 1..n, from a series of cubic bounds >= n + 2.
inline std::vector<Count> total_by_volume(const TruncatedSeries& total_series, int n) {
  std::vector<Count> out(static_cast<std::size_t>(n) + 1, Count{});
  for (int v = 1; v <= n; ++v) {
    int e = v + 2;
    for (int b = 1; b <= e - 2; ++b)
      for (int k = 1; b + k <= e - 1; ++k) out[v] += total_min(total_series, b, k, e - b - k);
  }
  return out;
}

}  // namespace polycube::series
