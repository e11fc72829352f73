#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "polycube/series.hpp"

using namespace polycube;
using namespace polycube::series;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, Bounds b, int density_percent = 40, int lead = 0) {
  std::uniform_int_distribution<int> coeff(-50, 50), pct(0, 99);
  TruncatedSeries s(b);
  for (int i = 0; i <= b.x; ++i)
    for (int j = 0; j <= b.y; ++j)
      for (int l = 0; l <= b.z; ++l)
        if (pct(rng) < density_percent) s.set(i, j, l, coeff(rng));
  if (lead != 0) s.set(0, 0, 0, lead);
  return s;
}

Bounds random_bounds(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 4);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST(Series, RingLaws) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    Bounds b = random_bounds(rng);
    TruncatedSeries p = random_series(rng, b), q = random_series(rng, b), r = random_series(rng, b);
    TruncatedSeries zero(b), one = TruncatedSeries::constant(b, 1);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + zero, p);
    EXPECT_EQ(p * one, p);
    EXPECT_EQ(p - p, zero);
    EXPECT_EQ(Count(3) * (p + q), Count(3) * p + Count(3) * q);
  }
}

TEST(Series, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Bounds b = random_bounds(rng);
    TruncatedSeries s = random_series(rng, b);
    TruncatedSeries d = random_series(rng, b, 40, trial % 2 == 0 ? 1 : -1);
    EXPECT_EQ((s * d) / d, s);
    EXPECT_EQ((s / d) * d, s);
  }
}

TEST(Series, DivisorMustBeUnit) {
  Bounds b{2, 2, 2};
  TruncatedSeries s = TruncatedSeries::constant(b, 1);
  EXPECT_THROW(s / TruncatedSeries::constant(b, 2), DomainError);
  EXPECT_THROW(s / TruncatedSeries(b), DomainError);
}

TEST(Series, GeometricSeries) {
  Bounds b{6, 0, 0};
  TruncatedSeries one = TruncatedSeries::constant(b, 1);
  TruncatedSeries g = one / (one - Count(2) * TruncatedSeries::monomial(b, 1, 0, 0));
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(g.coeff(i, 0, 0), pow_count(2, i));
  // 1/(1-x-y) has binomial coefficients
  Bounds c{5, 5, 0};
  TruncatedSeries one2 = TruncatedSeries::constant(c, 1);
  TruncatedSeries h = one2 / (one2 - TruncatedSeries::monomial(c, 1, 0, 0) - TruncatedSeries::monomial(c, 0, 1, 0));
  EXPECT_EQ(h.coeff(3, 2, 0), Count(10));
  EXPECT_EQ(h.coeff(5, 5, 0), Count(252));
}

TEST(Series, MultiplicationCommutesWithTruncation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Bounds big{4, 4, 4};
    Bounds small = random_bounds(rng);
    TruncatedSeries p = random_series(rng, big), q = random_series(rng, big);
    EXPECT_EQ((p * q).truncated(small), p.truncated(small) * q.truncated(small));
  }
}

TEST(Series, PermutationRoundTrip) {
  std::mt19937_64 rng(9);
  TruncatedSeries p = random_series(rng, {2, 3, 4});
  TruncatedSeries q = p.permuted({1, 2, 0});
  EXPECT_EQ(q.bounds(), (Bounds{4, 2, 3}));
  EXPECT_EQ(q.coeff(4, 2, 3), p.coeff(2, 3, 4));
  EXPECT_EQ(q.coeff(1, 0, 2), p.coeff(0, 2, 1));
  EXPECT_EQ(q.permuted({2, 0, 1}), p);
}

TEST(Series, MonomialShift) {
  Bounds b{3, 3, 3};
  TruncatedSeries m = TruncatedSeries::polynomial(b, {{1, 1, 1, 5}, {2, 1, 3, -2}});
  TruncatedSeries s = m.shifted_down(1, 1, 1);
  EXPECT_EQ(s.bounds(), (Bounds{2, 2, 2}));
  EXPECT_EQ(s.coeff(0, 0, 0), Count(5));
  EXPECT_EQ(s.coeff(1, 0, 2), Count(-2));
  EXPECT_THROW(m.shifted_down(2, 0, 0), DomainError);
}

TEST(Series, BoundsAreEnforced) {
  TruncatedSeries a(Bounds{1, 1, 1}), b(Bounds{1, 2, 1});
  EXPECT_THROW(a + b, BoundsError);
  EXPECT_THROW(a * b, BoundsError);
  EXPECT_THROW(a.coeff(2, 0, 0), BoundsError);
  EXPECT_THROW(a.coeff(-1, 0, 0), BoundsError);
  EXPECT_THROW(a.truncated({2, 0, 0}), BoundsError);
  EXPECT_THROW(TruncatedSeries(Bounds{-1, 0, 0}), BoundsError);
  EXPECT_TRUE(TruncatedSeries::monomial({1, 1, 1}, 2, 0, 0).is_zero());
}

TEST(Series, Projections) {
  Bounds b{2, 2, 2};
  TruncatedSeries s = TruncatedSeries::polynomial(b, {{0, 0, 0, 1}, {1, 0, 0, 2}, {0, 1, 0, 3}, {1, 1, 1, 4}, {2, 2, 2, 5}});
  auto vol = volume_sequence(s, 2);
  ASSERT_EQ(vol.size(), 3u);
  EXPECT_EQ(vol[0], Count(1));
  EXPECT_EQ(vol[1], Count(5));
  EXPECT_EQ(vol[2], Count(0));
  auto diag = diagonal_sequence(s, 2);
  EXPECT_EQ(diag[1], Count(4));
  EXPECT_EQ(diag[2], Count(5));
  EXPECT_THROW(volume_sequence(s, 3), BoundsError);
}

TEST(Series, CsvLayout) {
  TruncatedSeries s = TruncatedSeries::polynomial({1, 1, 2}, {{1, 1, 1, 6}, {0, 0, 2, -1}});
  std::ostringstream os;
  write_csv(os, s);
  EXPECT_EQ(os.str(), "b,k,h,coefficient\n0,0,2,-1\n1,1,1,6\n");
  EXPECT_EQ(s.terms().size(), 2u);
}
