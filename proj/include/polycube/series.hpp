#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycube/count.hpp"

namespace polycube::series {

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inclusive exponent bounds per variable.
struct Bounds {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr int operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  constexpr Bounds grown(int dx, int dy, int dz) const { return {x + dx, y + dy, z + dz}; }
  static constexpr Bounds cube(int n) { return {n, n, n}; }
  constexpr bool covers(const Bounds& o) const { return x >= o.x && y >= o.y && z >= o.z; }

  friend constexpr bool operator==(const Bounds&, const Bounds&) = default;
};

struct Term {
  int i = 0;
  int j = 0;
  int l = 0;
  Count c;
};

/// Dense coefficient grid of a power series in x, y, z truncated at Bounds.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Bounds b) : b_(b) {
    if (b.x < 0 || b.y < 0 || b.z < 0) throw BoundsError("negative series bounds");
    c_.assign(static_cast<std::size_t>(b.x + 1) * (b.y + 1) * (b.z + 1), Count{});
  }

  static TruncatedSeries constant(Bounds b, Count v) {
    TruncatedSeries s(b);
    s.c_[0] = v;
    return s;
  }

  /// Monomial c x^i y^j z^l; silently zero when it lies outside the bounds.
  static TruncatedSeries monomial(Bounds b, int i, int j, int l, Count c = 1) {
    TruncatedSeries s(b);
    if (s.in_bounds(i, j, l)) s.ref(i, j, l) = c;
    return s;
  }

  static TruncatedSeries polynomial(Bounds b, std::initializer_list<Term> terms) {
    TruncatedSeries s(b);
    for (const Term& t : terms)
      if (s.in_bounds(t.i, t.j, t.l)) s.ref(t.i, t.j, t.l) += t.c;
    return s;
  }

  const Bounds& bounds() const { return b_; }

  bool in_bounds(int i, int j, int l) const {
    return i >= 0 && j >= 0 && l >= 0 && i <= b_.x && j <= b_.y && l <= b_.z;
  }

  Count coeff(int i, int j, int l) const {
    if (!in_bounds(i, j, l))
      throw BoundsError("coefficient (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) +
                        ") outside series bounds");
    return c_[index(i, j, l)];
  }

  void set(int i, int j, int l, Count v) {
    if (!in_bounds(i, j, l)) throw BoundsError("set outside series bounds");
    c_[index(i, j, l)] = v;
  }

  /// Nonzero coefficients in lexicographic exponent order.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (int i = 0; i <= b_.x; ++i)
      for (int j = 0; j <= b_.y; ++j)
        for (int l = 0; l <= b_.z; ++l)
          if (Count v = c_[index(i, j, l)]; !v.is_zero()) out.push_back({i, j, l, v});
    return out;
  }

  bool is_zero() const {
    for (const Count& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  TruncatedSeries truncated(Bounds to) const {
    if (!b_.covers(to)) throw BoundsError("truncation target exceeds series bounds");
    TruncatedSeries r(to);
    for (int i = 0; i <= to.x; ++i)
      for (int j = 0; j <= to.y; ++j)
        for (int l = 0; l <= to.z; ++l) r.ref(i, j, l) = ref(i, j, l);
    return r;
  }

  /// Division by x^di y^dj z^dl. The low coefficients it would drop must be
  /// zero; the result's bounds shrink by the shift.
  TruncatedSeries shifted_down(int di, int dj, int dl) const {
    Bounds nb{b_.x - di, b_.y - dj, b_.z - dl};
    TruncatedSeries r(nb);
    for (int i = 0; i <= b_.x; ++i)
      for (int j = 0; j <= b_.y; ++j)
        for (int l = 0; l <= b_.z; ++l) {
          Count v = ref(i, j, l);
          if (v.is_zero()) continue;
          if (i < di || j < dj || l < dl) throw DomainError("monomial division is not exact");
          r.ref(i - di, j - dj, l - dl) = v;
        }
    return r;
  }

  /// Relabel variables: exponent along axis a moves to axis to[a].
  TruncatedSeries permuted(std::array<int, 3> to) const {
    std::array<int, 3> ob{b_.x, b_.y, b_.z};
    std::array<int, 3> nb{};
    for (int a = 0; a < 3; ++a) nb[to[a]] = ob[a];
    TruncatedSeries r(Bounds{nb[0], nb[1], nb[2]});
    for (int i = 0; i <= b_.x; ++i)
      for (int j = 0; j <= b_.y; ++j)
        for (int l = 0; l <= b_.z; ++l) {
          std::array<int, 3> e{}, src{i, j, l};
          for (int a = 0; a < 3; ++a) e[to[a]] = src[a];
          r.ref(e[0], e[1], e[2]) = ref(i, j, l);
        }
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same(s, t);
    TruncatedSeries r(s.b_);
    for (std::size_t n = 0; n < s.c_.size(); ++n) r.c_[n] = s.c_[n] + t.c_[n];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same(s, t);
    TruncatedSeries r(s.b_);
    for (std::size_t n = 0; n < s.c_.size(); ++n) r.c_[n] = s.c_[n] - t.c_[n];
    return r;
  }

  friend TruncatedSeries operator*(Count k, const TruncatedSeries& s) {
    TruncatedSeries r(s.b_);
    for (std::size_t n = 0; n < s.c_.size(); ++n) r.c_[n] = k * s.c_[n];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return mul(s, t); }

  friend TruncatedSeries operator/(const TruncatedSeries& s, const TruncatedSeries& d) { return div(s, d); }

  /// Truncated Cauchy product.
  friend TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same(s, t);
    const Bounds& b = s.b_;
    TruncatedSeries r(b);
    std::vector<Term> st = s.terms();
    std::vector<Term> tt = t.terms();
    if (st.size() > tt.size()) std::swap(st, tt);
    for (const Term& p : st)
      for (const Term& q : tt) {
        int i = p.i + q.i, j = p.j + q.j, l = p.l + q.l;
        if (i > b.x || j > b.y || l > b.z) continue;
        r.ref(i, j, l) += p.c * q.c;
      }
    return r;
  }

  /// Quotient q with q * d == s within bounds; d(0,0,0) must be +1 or -1.
  friend TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& d) {
    require_same(s, d);
    Count lead = d.c_[0];
    if (lead != Count(1) && lead != Count(-1)) throw DomainError("divisor constant term must be +1 or -1");
    std::vector<Term> dt = d.terms();
    const Bounds& b = s.b_;
    TruncatedSeries q(b);
    // lexicographic order visits every proper divisor exponent first
    for (int i = 0; i <= b.x; ++i)
      for (int j = 0; j <= b.y; ++j)
        for (int l = 0; l <= b.z; ++l) {
          Count v = s.ref(i, j, l);
          for (const Term& t : dt) {
            if (t.i == 0 && t.j == 0 && t.l == 0) continue;
            if (t.i > i || t.j > j || t.l > l) continue;
            Count prev = q.ref(i - t.i, j - t.j, l - t.l);
            if (!prev.is_zero()) v -= t.c * prev;
          }
          q.ref(i, j, l) = lead == Count(1) ? v : -v;
        }
    return q;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * (b_.y + 1) + j) * (b_.z + 1) + l;
  }
  Count& ref(int i, int j, int l) { return c_[index(i, j, l)]; }
  const Count& ref(int i, int j, int l) const { return c_[index(i, j, l)]; }

  static void require_same(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (!(s.b_ == t.b_)) throw BoundsError("series bounds mismatch");
  }

  Bounds b_;
  std::vector<Count> c_;
};

inline Count coeff(const TruncatedSeries& s, int b, int k, int h) { return s.coeff(b, k, h); }

/// Entry m sums the coefficients of total degree m (x = y = z), for m = 0..n.
inline std::vector<Count> volume_sequence(const TruncatedSeries& s, int n) {
  const Bounds& b = s.bounds();
  if (n < 0 || b.x < n || b.y < n || b.z < n)
    throw BoundsError("volume_sequence needs every bound >= " + std::to_string(n));
  std::vector<Count> out(static_cast<std::size_t>(n) + 1, Count{});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      for (int l = 0; i + j + l <= n; ++l) out[i + j + l] += s.coeff(i, j, l);
  return out;
}

/// Entry m is the coefficient at (m, m, m), for m = 0..n.
inline std::vector<Count> diagonal_sequence(const TruncatedSeries& s, int n) {
  const Bounds& b = s.bounds();
  if (n < 0 || b.x < n || b.y < n || b.z < n)
    throw BoundsError("diagonal_sequence needs every bound >= " + std::to_string(n));
  std::vector<Count> out;
  for (int m = 0; m <= n; ++m) out.push_back(s.coeff(m, m, m));
  return out;
}

/// CSV with header "b,k,h,coefficient", one row per nonzero coefficient.
inline void write_csv(std::ostream& os, const TruncatedSeries& s) {
  os << "b,k,h,coefficient\n";
  for (const Term& t : s.terms()) os << t.i << ',' << t.j << ',' << t.l << ',' << t.c << '\n';
}

}  // namespace polycube::series
