#pragma once

#include <initializer_list>
#include <map>
#include <tuple>
#include <vector>

#include "polycube/count.hpp"

namespace polycube::formulas {

/// C(n, r), zero whenever r < 0, n < 0 or r > n.
inline Count binom(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Count acc = 1;
  // acc * (n - r + i) is always divisible by i
  for (long long i = 1; i <= r; ++i) acc = exact_div(acc * Count(n - r + i), Count(i));
  return acc;
}

/// Binomial extended to negative upper index by upper negation,
/// C(n, r) = (-1)^r C(r - n - 1, r) for n < 0 and r >= 0; zero for r < 0.
inline Count binom_extended(long long n, long long r) {
  if (r < 0) return 0;
  if (n >= 0) return binom(n, r);
  Count v = binom(r - n - 1, r);
  return (r % 2 == 0) ? v : -v;
}

enum class BinomialConvention { ZeroOutOfRange, UpperNegation };

inline Count binom(long long n, long long r, BinomialConvention conv) {
  return conv == BinomialConvention::ZeroOutOfRange ? binom(n, r) : binom_extended(n, r);
}

/// (a+b+c)! / (a! b! c!), zero if any argument is negative.
inline Count trinom(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0) return 0;
  return binom(a + b + c, a) * binom(b + c, b);
}

// ---------------------------------------------------------------- 2D counts

inline Count p2d_corner(int b, int k) { return 2 * binom(b + k - 2, b - 1) - 1; }

/// P(b,k) = 1 + P(b,k-1) + P(b-1,k), P(b,1) = P(1,k) = 1; tabulated bottom-up.
inline Count p2d_corner_rec(int b, int k) {
  if (b < 1 || k < 1) throw DomainError("p2d_corner_rec needs positive sides");
  std::vector<Count> row(static_cast<std::size_t>(k) + 1, Count(1));
  for (int i = 2; i <= b; ++i)
    for (int j = 2; j <= k; ++j) row[j] = 1 + row[j - 1] + row[j];
  return row[k];
}

/// Minimal inscribed 2D polyominoes in b x k. Valid for b, k >= 2 and for 1 x 1;
/// a 1 x n rod is a single polyomino but the closed form does not give 1 there.
inline Count p2d_min(int b, int k) {
  if (b < 1 || k < 1) throw DomainError("p2d_min needs positive sides");
  return 8 * binom(b + k - 2, b - 1) + 2 * Count(b + k) - 3 * Count(b) * k - 8;
}

/// Minimal inscribed count for any prism with at least one side 1.
inline Count degenerate_min(int b, int k, int h) {
  int ones = (b == 1) + (k == 1) + (h == 1);
  if (ones == 0) throw DomainError("degenerate_min needs a side of length 1");
  if (ones >= 2) return 1;
  if (b == 1) return p2d_min(k, h);
  if (k == 1) return p2d_min(b, h);
  return p2d_min(b, k);
}

// -------------------------------------------------------- 3D corner counts

/// Corner-polyomino recurrence with a memo confined to one evaluation.
class CornerRecurrence {
 public:
  Count operator()(int b, int k, int h) {
    if (b < 1 || k < 1 || h < 1) throw DomainError("p3d_corner needs positive sides");
    if (b == 1 || k == 1 || h == 1) return 2 * trinom(b - 1, k - 1, h - 1) - 1;
    auto key = std::make_tuple(b, k, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Count v = 1 + 2 * binom(b + k - 2, b - 1) + 2 * binom(b + h - 2, b - 1) + 2 * binom(k + h - 2, k - 1) - 6 +
              (*this)(b - 1, k, h) + (*this)(b, k - 1, h) + (*this)(b, k, h - 1);
    memo_.emplace(key, v);
    return v;
  }

 private:
  std::map<std::tuple<int, int, int>, Count> memo_;
};

inline Count p3d_corner_rec(int b, int k, int h) { return CornerRecurrence{}(b, k, h); }

/// Alternating-sum closed form for corner polyominoes. Its inner binomial
/// C(b+h-4-2i, h-2-i) reaches negative upper indices once h > b; only the
/// upper-negation convention reproduces the recurrence there.
inline Count p3d_corner_closed(int b, int k, int h,
                               BinomialConvention conv = BinomialConvention::UpperNegation) {
  if (b < 1 || k < 1 || h < 1) throw DomainError("p3d_corner needs positive sides");
  auto C = [conv](long long n, long long r) { return binom(n, r, conv); };
  Count s = 4 * C(b + h - 2, h - 1) * C(b + k + h - 3, b + h - 2);
  for (int i = 0; i <= h - 2; ++i) {
    Count t = C(b + h - 4 - 2 * i, h - 2 - i) * C(b + k + h - 4 - i, b + h - 3 - 2 * i);
    s += (i % 2 == 0) ? t : -t;
  }
  s -= 2 * (C(b + h - 2, b - 1) + C(b + k - 2, k - 1) + C(k + h - 2, h - 1));
  s += 3 - ((h % 2 == 0) ? 1 : 0);
  return s;
}

// -------------------------------------------------------- skew crosses

/// Triple sum for skew crosses in a b x k x h prism, b, k, h >= 3.
inline Count sc_prism(int b, int k, int h) {
  if (b < 3 || k < 3 || h < 3) throw DomainError("sc_prism needs b, k, h >= 3");
  Count s = 0;
  for (int i = 0; i <= b + k - 6; ++i)
    for (int r = 0; r <= i; ++r)
      for (int j = 0; j <= b - 3 - r; ++j) s += binom(b, 3 + r + j) * binom(k, 3 + i + j - r) * binom(h, 3 + i);
  return 64 * s;
}

// -------------------------------------------------------- counts by volume
//
// The one-variable series carry volume n at exponent n + 2; the family
// formulas below are stated at the exponent and take the volume here.

namespace detail {
inline Count poly(long long n, std::initializer_list<long long> coeffs_high_to_low) {
  Count acc = 0;
  for (long long c : coeffs_high_to_low) acc = acc * Count(n) + Count(c);
  return acc;
}
inline void require_volume(int n) {
  if (n < 1) throw DomainError("volume must be positive");
}
}  // namespace detail

inline Count sc_volume(int n) {
  detail::require_volume(n);
  long long e = n + 2;
  // 15 * value
  Count scaled = 15 * pow_count(2, static_cast<unsigned>(e + 2)) * detail::poly(e, {1, -27, 194}) -
                 8 * detail::poly(e, {1, 0, 55, 180, 844, 1440});
  return exact_div(scaled, 15);
}

inline Count p2dx2d_volume(int n) {
  detail::require_volume(n);
  long long e = n + 2;
  // 40 * value
  Count scaled = 120 * pow_count(2, static_cast<unsigned>(e + 2)) * Count(e - 15) +
                 detail::poly(e, {3, -33, 325, -915, 4352, 588, 9360});
  return exact_div(scaled, 40);
}

inline Count diag_volume(int n) {
  detail::require_volume(n);
  long long e = n + 2;
  // 240 * value
  Count scaled = 605 * pow_count(3, static_cast<unsigned>(e)) -
                 240 * pow_count(2, static_cast<unsigned>(e)) * Count(45 * e - 411) -
                 detail::poly(e, {106, -450, 8230, -1440, 90844, 74925});
  return exact_div(scaled, 240);
}

/// Total minimal inscribed polycubes of volume n (this formula is stated at n
/// itself, not at the shifted exponent).
inline Count p3dmin_volume(int n) {
  detail::require_volume(n);
  // 80 * value
  Count scaled = 605 * pow_count(3, static_cast<unsigned>(n + 1)) +
                 80 * pow_count(2, static_cast<unsigned>(n + 2)) * detail::poly(n, {4, -125, 741}) +
                 detail::poly(n, {6, -72, -280, -5320, -30896, -126908, -238695});
  return exact_div(scaled, 80);
}

// -------------------------------------------------------- thin prisms

inline Count p3dmin_thickness2(int b, int k) {
  if (b < 2 || k < 2) throw DomainError("thickness-2 formula needs b, k >= 2");
  Count s = Count(b + k);
  return (16 * binom(b + k - 2, b - 1) - 4 * s) * (2 * s - 3) + 4 * Count(b - 2) * Count(k - 2) +
         (16 * (s - 2) - 12 * Count(b) * k) * (s - 1);
}

inline Count p3dmin_thickness3(int b, int k) {
  if (b < 2 || k < 2) throw DomainError("thickness-3 formula needs b, k >= 2");
  Count B = b, K = k;
  Count b2 = B * B, k2 = K * K, b3 = b2 * B, k3 = k2 * K;
  return 8 * (b3 + k3) - 12 * (b3 * K + B * k3) - 24 * b2 * k2 - 46 * (b2 + k2) + 41 * (b2 * K + B * k2) -
         93 * K * B + 58 * (B + K) - 8 + 4 * binom(b + k - 2, b - 1) * (4 * B + 4 * K - 1) * (2 * B + 2 * K - 3);
}

}  // namespace polycube::formulas
