#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "polycube/catalog.hpp"
#include "polycube/formulas.hpp"
#include "polycube/oracle.hpp"

using namespace polycube;
using namespace polycube::oracle;

namespace {

// Plain subset scan, independent of the growth algorithm.
Count brute_force(const PrismDims& d, int volume, bool inscribed_only) {
  std::vector<Cell> all;
  for (int x = 0; x < d.b; ++x)
    for (int y = 0; y < d.k; ++y)
      for (int z = 0; z < d.h; ++z) all.push_back({x, y, z});
  const int n = static_cast<int>(all.size());
  std::uint64_t hits = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != volume) continue;
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) cells.push_back(all[i]);
    if (component_count(cells) != 1) continue;
    if (inscribed_only && !is_inscribed(Polycube(d, cells))) continue;
    ++hits;
  }
  return Count(hits);
}

class ThreadsEnv {
 public:
  explicit ThreadsEnv(const char* v) {
    if (const char* old = std::getenv("POLYCUBE_THREADS")) saved_ = old;
    setenv("POLYCUBE_THREADS", v, 1);
  }
  ~ThreadsEnv() {
    if (saved_.empty())
      unsetenv("POLYCUBE_THREADS");
    else
      setenv("POLYCUBE_THREADS", saved_.c_str(), 1);
  }

 private:
  std::string saved_;
};

}  // namespace

TEST(Enumeration, MatchesSubsetScan) {
  for (PrismDims d : {PrismDims(2, 2, 2), PrismDims(2, 2, 3), PrismDims(1, 3, 4), PrismDims(2, 3, 2),
                      PrismDims(3, 2, 2), PrismDims(1, 1, 5)})
    for (int v = 1; v <= d.cell_count(); ++v)
      for (bool inscribed : {false, true})
        EXPECT_EQ(count_connected({d, v, inscribed, std::nullopt}), brute_force(d, v, inscribed))
            << d << " volume " << v << (inscribed ? " inscribed" : "");
}

TEST(Enumeration, VisitsEachSetOnce) {
  PrismDims d(2, 3, 3);
  BoxGraph g(d);
  for (int v = 1; v <= 7; ++v) {
    std::set<std::vector<int>> seen;
    std::size_t visits = 0;
    EnumerationStats st = enumerate(g, {d, v, false, std::nullopt}, [&](std::span<const int> cells) {
      std::vector<int> key(cells.begin(), cells.end());
      std::sort(key.begin(), key.end());
      seen.insert(key);
      ++visits;
    });
    EXPECT_EQ(visits, seen.size());
    EXPECT_EQ(st.full_size_sets, st.accepted);
    EXPECT_EQ(st.accepted, visits);
  }
}

TEST(Enumeration, InfeasibleVolumeIsZero) {
  EXPECT_EQ(count_connected({PrismDims(2, 2, 2), 9, false, std::nullopt}), Count(0));
  EXPECT_THROW(count_connected({PrismDims(2, 2, 2), 0, false, std::nullopt}), DomainError);
  EXPECT_THROW(count_connected({PrismDims(2, 2, 2), 3, false, 8U}), DomainError);
}

TEST(Enumeration, ThreadCountDoesNotChangeResults) {
  Count single, several;
  FamilyCounts fam1, fam3;
  {
    ThreadsEnv env("1");
    single = count_min_inscribed(PrismDims(3, 3, 4));
    fam1 = count_by_family(PrismDims(3, 3, 3));
  }
  {
    ThreadsEnv env("3");
    several = count_min_inscribed(PrismDims(3, 3, 4));
    fam3 = count_by_family(PrismDims(3, 3, 3));
  }
  EXPECT_EQ(single, several);
  EXPECT_EQ(fam1, fam3);
  ThreadsEnv bad("zero");
  EXPECT_THROW(thread_count(), DomainError);
}

TEST(MinInscribed, Values) {
  EXPECT_EQ(count_min_inscribed(PrismDims(1, 1, 1)), Count(1));
  EXPECT_EQ(count_min_inscribed(PrismDims(2, 2, 2)), Count(32));
  EXPECT_EQ(count_min_inscribed(PrismDims(2, 2, 3)), Count(100));
  EXPECT_EQ(count_min_inscribed(PrismDims(3, 3, 3)), Count(2401));
  EXPECT_EQ(count_min_inscribed(PrismDims(2, 2, 1)), Count(4));
  EXPECT_EQ(count_min_inscribed(PrismDims(2, 3, 3)), Count(432));
  EXPECT_EQ(count_min_inscribed(PrismDims(3, 3, 4)), Count(7128));
}

TEST(MinInscribed, SymmetricUnderPermutation) {
  for (int b = 1; b <= 4; ++b)
    for (int k = b; k <= 4; ++k)
      for (int h = k; h <= 4; ++h) {
        if (b == 4 && k == 4 && h == 4) continue;
        std::array<int, 3> s{b, k, h};
        Count first = count_min_inscribed(PrismDims(b, k, h));
        while (std::next_permutation(s.begin(), s.end()))
          EXPECT_EQ(count_min_inscribed(PrismDims(s[0], s[1], s[2])), first);
      }
}

TEST(MinInscribed, DegenerateReduction) {
  for (int b = 1; b <= 8; ++b)
    for (int k = 1; k <= 8; ++k) {
      Count v = count_min_inscribed(PrismDims(b, k, 1));
      EXPECT_EQ(v, count_2d_min(b, k));
      EXPECT_EQ(v, formulas::degenerate_min(b, k, 1));
      if ((b >= 2 && k >= 2) || (b == 1 && k == 1)) EXPECT_EQ(v, formulas::p2d_min(b, k));
    }
}

TEST(Corner, Values) {
  for (CornerId c = 0; c < 8; ++c) {
    EXPECT_EQ(count_min_corner(PrismDims(1, 1, 1), c), Count(1));
    EXPECT_EQ(count_min_corner(PrismDims(1, 2, 2), c), Count(3));
    EXPECT_EQ(count_min_corner(PrismDims(2, 2, 2), c), Count(16));
  }
  EXPECT_EQ(corner_cell(PrismDims(2, 3, 4), 5), (Cell{1, 0, 3}));
}

TEST(Corner, MatchesRecurrence) {
  for (int b = 1; b <= 3; ++b)
    for (int k = 1; k <= 3; ++k)
      for (int h = 1; h <= 4; ++h) EXPECT_EQ(count_min_corner(PrismDims(b, k, h)), formulas::p3d_corner_rec(b, k, h));
}

TEST(Planar, Counts) {
  EXPECT_EQ(count_2d_min(1, 1), Count(1));
  EXPECT_EQ(count_2d_min(2, 2), Count(4));
  EXPECT_EQ(count_2d_min(3, 3), Count(25));
}

TEST(Planar, WeightedCount) {
  EXPECT_EQ(weighted_2d_count(1, 1), Count(1));
  EXPECT_EQ(weighted_2d_count(1, 1), count_min_inscribed(PrismDims(2, 1, 1)));
  EXPECT_EQ(weighted_2d_count(2, 2), Count(32));
  EXPECT_EQ(weighted_2d_count(2, 3), Count(100));
  for (int b = 2; b <= 4; ++b)
    for (int k = 2; k <= 4; ++k) EXPECT_EQ(weighted_2d_count(b, k), count_min_inscribed(PrismDims(2, b, k)));
}

TEST(Classify, Examples) {
  Polycube cross(PrismDims(3, 3, 3), {{1, 1, 1}, {0, 1, 1}, {2, 1, 1}, {1, 0, 1}, {1, 2, 1}, {1, 1, 0}, {1, 1, 2}});
  EXPECT_EQ(classify(cross), FamilyTag::Diagonal);
  Polycube pilars(PrismDims(2, 3, 3), {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2}});
  EXPECT_EQ(classify(pilars), FamilyTag::TwoDxTwoD);
  Polycube sca(PrismDims(3, 3, 3), {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 2}, {1, 2, 2}, {1, 1, 0}, {2, 1, 0}});
  EXPECT_EQ(classify(sca), FamilyTag::SkewCrossA);
  Polycube scb(PrismDims(3, 3, 3), {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 2}, {2, 1, 2}, {1, 2, 1}, {1, 2, 0}});
  EXPECT_EQ(classify(scb), FamilyTag::SkewCrossB);
}

TEST(Classify, RejectsNonMinimalInput) {
  Polycube p(PrismDims(2, 2, 2), {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}});
  EXPECT_THROW(classify(p), DomainError);
  Polycube q(PrismDims(3, 3, 3), {{0, 0, 0}});
  EXPECT_THROW(classify(q), DomainError);
}

TEST(Classify, PartitionMatchesSeries) {
  series::Bounds bounds = series::Bounds::cube(4);
  series::TruncatedSeries diag = series::gf::diag(bounds), p2 = series::gf::p2dx2d(bounds),
                          sca = series::gf::sc_a(bounds), scb = series::gf::sc_b(bounds);
  for (int b = 2; b <= 3; ++b)
    for (int k = 2; k <= 3; ++k)
      for (int h = 2; h <= 4; ++h) {
        PrismDims d(b, k, h);
        FamilyCounts f = count_by_family(d);
        Count sum = 0;
        for (auto& [tag, n] : f) sum += n;
        EXPECT_EQ(sum, count_min_inscribed(d)) << d;
        EXPECT_EQ(f[FamilyTag::Diagonal], diag.coeff(b, k, h)) << d;
        EXPECT_EQ(f[FamilyTag::TwoDxTwoD], p2.coeff(b, k, h)) << d;
        EXPECT_EQ(f[FamilyTag::SkewCrossA], sca.coeff(b, k, h)) << d;
        EXPECT_EQ(f[FamilyTag::SkewCrossB], scb.coeff(b, k, h)) << d;
      }
  EXPECT_THROW(count_by_family(PrismDims(1, 3, 3)), DomainError);
}
