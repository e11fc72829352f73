#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "polycube/core.hpp"
#include "polycube/count.hpp"

namespace polycube::oracle {

class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Corner of the box as a 3-bit vector: bit a set selects the max face on axis a.
using CornerId = unsigned;

inline Cell corner_cell(const PrismDims& d, CornerId id) {
  if (id > 7) throw DomainError("corner id must be in 0..7");
  Cell c;
  for (int a = 0; a < 3; ++a) c.at(a) = (id >> a) & 1U ? d[a] - 1 : 0;
  return c;
}

struct EnumerationConfig {
  PrismDims dims;
  int volume = 1;
  bool inscribed_only = false;
  std::optional<CornerId> corner_constraint;
};

struct EnumerationStats {
  std::uint64_t full_size_sets = 0;  // sets of the target size reached by the growth
  std::uint64_t accepted = 0;        // those passing the filters
};

/// Worker count from POLYCUBE_THREADS, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("POLYCUBE_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw DomainError("POLYCUBE_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Cells of a box in lexicographic order with their in-box face neighbours.
class BoxGraph {
 public:
  explicit BoxGraph(PrismDims d) : d_(d) {
    int n = static_cast<int>(d.cell_count());
    cells_.reserve(n);
    for (int x = 0; x < d.b; ++x)
      for (int y = 0; y < d.k; ++y)
        for (int z = 0; z < d.h; ++z) cells_.push_back({x, y, z});
    nbr_.assign(n, {});
    deg_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int dir = 0; dir < 6; ++dir)
        if (Cell c = step(cells_[i], dir); inside(d, c)) nbr_[i][deg_[i]++] = index(c);
  }

  const PrismDims& dims() const { return d_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int i) const { return cells_[i]; }
  int index(const Cell& c) const { return (c.x * d_.k + c.y) * d_.h + c.z; }
  std::span<const int> neighbours(int i) const { return {nbr_[i].data(), static_cast<std::size_t>(deg_[i])}; }

 private:
  PrismDims d_;
  std::vector<Cell> cells_;
  std::vector<std::array<int, 6>> nbr_;
  std::vector<int> deg_;
};

namespace detail {

/// Redelmeier growth from one root: each connected set whose least cell is
/// the root is produced exactly once.
template <class Leaf>
class Grower {
 public:
  Grower(const BoxGraph& g, const EnumerationConfig& cfg, Leaf& leaf)
      : g_(g), cfg_(cfg), leaf_(leaf), reached_(g.size(), 0) {
    if (cfg.corner_constraint) corner_ = g.index(corner_cell(cfg.dims, *cfg.corner_constraint));
    std::size_t cap = static_cast<std::size_t>(5 * cfg.volume + 2);
    buf_.assign(static_cast<std::size_t>(cfg.volume) + 1, std::vector<int>(cap));
  }

  void run(int root) {
    if (corner_ >= 0 && corner_ < root) return;
    root_ = root;
    cur_.clear();
    cur_.push_back(root);
    reached_[root] = 1;
    std::vector<int>& u = buf_[1];
    int len = 0;
    for (int n : g_.neighbours(root))
      if (n > root) {
        reached_[n] = 1;
        u[len++] = n;
      }
    const Cell& c = g_.cell(root);
    std::array<int, 3> lo{c.x, c.y, c.z};
    rec(1, len, lo, lo);
    for (int i = 0; i < len; ++i) reached_[u[i]] = 0;
    reached_[root] = 0;
  }

  EnumerationStats stats;

 private:
  int deficit(const std::array<int, 3>& lo, const std::array<int, 3>& hi) const {
    int s = 0;
    for (int a = 0; a < 3; ++a) s += lo[a] + (cfg_.dims[a] - 1 - hi[a]);
    return s;
  }

  void rec(int depth, int len, const std::array<int, 3>& lo, const std::array<int, 3>& hi) {
    int size = static_cast<int>(cur_.size());
    if (size == cfg_.volume) {
      ++stats.full_size_sets;
      if (cfg_.inscribed_only && deficit(lo, hi) != 0) return;
      if (corner_ >= 0 && std::find(cur_.begin(), cur_.end(), corner_) == cur_.end()) return;
      ++stats.accepted;
      leaf_(std::span<const int>(cur_));
      return;
    }
    // each further cell extends the bounding box by at most one layer
    if (cfg_.inscribed_only && deficit(lo, hi) > cfg_.volume - size) return;

    std::vector<int>& mine = buf_[depth];
    std::vector<int>& next = buf_[depth + 1];
    while (len > 0) {
      int c = mine[--len];
      std::copy(mine.begin(), mine.begin() + len, next.begin());
      int nlen = len;
      for (int n : g_.neighbours(c))
        if (n > root_ && !reached_[n]) {
          reached_[n] = 1;
          next[nlen++] = n;
        }
      const Cell& cc = g_.cell(c);
      std::array<int, 3> nlo = lo, nhi = hi;
      for (int a = 0; a < 3; ++a) {
        nlo[a] = std::min(nlo[a], cc[a]);
        nhi[a] = std::max(nhi[a], cc[a]);
      }
      cur_.push_back(c);
      rec(depth + 1, nlen, nlo, nhi);
      cur_.pop_back();
      for (int i = len; i < nlen; ++i) reached_[next[i]] = 0;
    }
  }

  const BoxGraph& g_;
  const EnumerationConfig& cfg_;
  Leaf& leaf_;
  std::vector<char> reached_;
  std::vector<std::vector<int>> buf_;
  std::vector<int> cur_;
  int root_ = 0;
  int corner_ = -1;
};

inline void validate(const EnumerationConfig& cfg) {
  if (cfg.volume < 1) throw DomainError("volume must be positive");
  if (cfg.corner_constraint && *cfg.corner_constraint > 7) throw DomainError("corner id must be in 0..7");
}

}  // namespace detail

/// Visit every accepted cell set (as indices into `g`) in canonical order on
/// the calling thread.
template <class Visitor>
EnumerationStats enumerate(const BoxGraph& g, const EnumerationConfig& cfg, Visitor&& visit) {
  detail::validate(cfg);
  if (cfg.volume > g.size()) return {};
  detail::Grower<std::remove_reference_t<Visitor>> grower(g, cfg, visit);
  for (int root = 0; root < g.size(); ++root) grower.run(root);
  return grower.stats;
}

/// Enumerate with roots spread over worker threads. `make_acc()` builds a
/// per-root accumulator, `on_leaf(acc, cells)` updates it, and the results
/// are merged in root order so the total is independent of scheduling.
template <class Acc, class MakeAcc, class OnLeaf, class Merge>
Acc enumerate_parallel(const EnumerationConfig& cfg, MakeAcc make_acc, OnLeaf on_leaf, Merge merge,
                       EnumerationStats* stats_out = nullptr) {
  detail::validate(cfg);
  Acc total = make_acc();
  if (cfg.volume > cfg.dims.cell_count()) {
    if (stats_out) *stats_out = {};
    return total;
  }
  BoxGraph g(cfg.dims);
  int roots = g.size();
  std::vector<Acc> per_root(roots, make_acc());
  std::vector<EnumerationStats> per_stats(roots);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    try {
      for (int r = next++; r < roots; r = next++) {
        Acc& acc = per_root[r];
        auto leaf = [&](std::span<const int> cells) { on_leaf(acc, g, cells); };
        detail::Grower<decltype(leaf)> grower(g, cfg, leaf);
        grower.run(r);
        per_stats[r] = grower.stats;
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = roots;
    }
  };
  unsigned n = std::min<unsigned>(thread_count(), static_cast<unsigned>(roots));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  EnumerationStats st;
  for (int r = 0; r < roots; ++r) {
    merge(total, per_root[r]);
    st.full_size_sets += per_stats[r].full_size_sets;
    st.accepted += per_stats[r].accepted;
  }
  if (stats_out) *stats_out = st;
  return total;
}

inline Count count_connected(const EnumerationConfig& cfg, EnumerationStats* stats = nullptr) {
  auto n = enumerate_parallel<std::uint64_t>(
      cfg, [] { return std::uint64_t{0}; }, [](std::uint64_t& acc, const BoxGraph&, std::span<const int>) { ++acc; },
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; }, stats);
  return Count(n);
}

inline Count count_min_inscribed(const PrismDims& d) {
  return count_connected({d, min_volume(d), true, std::nullopt});
}

inline Count count_min_corner(const PrismDims& d, CornerId corner = 0) {
  return count_connected({d, min_volume(d), true, corner});
}

inline Count count_2d_min(int b, int k) { return count_min_inscribed(PrismDims(b, k, 1)); }

/// Sum over minimal inscribed b x k polyominoes of sum over cells of 2^degree.
inline Count weighted_2d_count(int b, int k) {
  PrismDims d(b, k, 1);
  EnumerationConfig cfg{d, min_volume(d), true, std::nullopt};
  auto w = enumerate_parallel<Count>(
      cfg, [] { return Count{}; },
      [](Count& acc, const BoxGraph& g, std::span<const int> cells) {
        for (int c : cells) {
          int deg = 0;
          for (int n : g.neighbours(c)) deg += std::find(cells.begin(), cells.end(), n) != cells.end() ? 1 : 0;
          acc += Count(1 << deg);
        }
      },
      [](Count& a, const Count& b) { a += b; });
  return w;
}

/// Every minimal inscribed polycube of the box, in canonical order.
inline std::vector<Polycube> list_min_inscribed(const PrismDims& d) {
  BoxGraph g(d);
  std::vector<Polycube> out;
  enumerate(g, {d, min_volume(d), true, std::nullopt}, [&](std::span<const int> idx) {
    std::vector<Cell> cells;
    for (int i : idx) cells.push_back(g.cell(i));
    out.emplace_back(d, std::move(cells));
  });
  return out;
}

// ------------------------------------------------------------ classification

namespace detail {

/// Occupancy grid for a cell set inside its box.
class Grid {
 public:
  Grid(const PrismDims& d, std::span<const Cell> cells) : d_(d), occ_(static_cast<std::size_t>(d.cell_count()), 0) {
    for (const Cell& c : cells) occ_[index(c)] = 1;
  }
  bool has(const Cell& c) const { return inside(d_, c) && occ_[index(c)] != 0; }

 private:
  std::size_t index(const Cell& c) const { return (static_cast<std::size_t>(c.x) * d_.k + c.y) * d_.h + c.z; }
  PrismDims d_;
  std::vector<char> occ_;
};

struct Box {
  std::array<int, 3> lo;
  std::array<int, 3> hi;
  bool holds(const Cell& c) const {
    for (int a = 0; a < 3; ++a)
      if (c[a] < lo[a] || c[a] > hi[a]) return false;
    return true;
  }
};

inline Box span_of(const Cell& p, const Cell& q) {
  Box b{};
  for (int a = 0; a < 3; ++a) {
    b.lo[a] = std::min(p[a], q[a]);
    b.hi[a] = std::max(p[a], q[a]);
  }
  return b;
}

inline Box bbox(std::span<const Cell> cells) {
  Box b{{cells[0].x, cells[0].y, cells[0].z}, {cells[0].x, cells[0].y, cells[0].z}};
  for (const Cell& c : cells)
    for (int a = 0; a < 3; ++a) {
      b.lo[a] = std::min(b.lo[a], c[a]);
      b.hi[a] = std::max(b.hi[a], c[a]);
    }
  return b;
}

/// Connected, touching every face of `box`, with the minimal cell count for it.
inline bool min_inscribed_in(std::span<const Cell> q, const Box& box) {
  if (q.empty()) return false;
  int extents = 0;
  for (int a = 0; a < 3; ++a) extents += box.hi[a] - box.lo[a] + 1;
  if (static_cast<int>(q.size()) != extents - 2) return false;
  Box bb = bbox(q);
  if (bb.lo != box.lo || bb.hi != box.hi) return false;
  return component_count(q) == 1;
}

/// Components of `cells` as separate sorted vectors.
inline std::vector<std::vector<Cell>> components(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<char> seen(cells.size(), 0);
  std::vector<std::vector<Cell>> out;
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Cell> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Cell c = cells[stack.back()];
      stack.pop_back();
      comp.push_back(c);
      for (int dir = 0; dir < 6; ++dir) {
        Cell n = step(c, dir);
        auto it = std::lower_bound(cells.begin(), cells.end(), n);
        if (it == cells.end() || *it != n) continue;
        auto j = static_cast<std::size_t>(it - cells.begin());
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline constexpr std::array<std::array<int, 3>, 4> kDiagonalSigns{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};

/// Splits at some cell u into minimal inscribed pieces in box(A, u) and
/// box(u, B), with A and B the ends of the given space diagonal.
inline bool along_diagonal(const Polycube& p, const std::array<int, 3>& sign) {
  const PrismDims& d = p.dims();
  Cell A, B;
  for (int a = 0; a < 3; ++a) {
    A.at(a) = sign[a] > 0 ? 0 : d[a] - 1;
    B.at(a) = d[a] - 1 - A[a];
  }
  std::vector<Cell> q1, q2;
  for (const Cell& u : p.cells()) {
    Box b1 = span_of(A, u), b2 = span_of(u, B);
    q1.clear();
    q2.clear();
    bool covered = true;
    for (const Cell& c : p.cells()) {
      bool in1 = b1.holds(c), in2 = b2.holds(c);
      if (in1) q1.push_back(c);
      if (in2) q2.push_back(c);
      if (!in1 && !in2) {
        covered = false;
        break;
      }
    }
    if (!covered || q1.size() + q2.size() != p.size() + 1) continue;
    if (min_inscribed_in(q1, b1) && min_inscribed_in(q2, b2)) return true;
  }
  return false;
}

inline bool is_diagonal(const Polycube& p) {
  for (const auto& s : kDiagonalSigns)
    if (along_diagonal(p, s)) return true;
  return false;
}

/// Type of skew cross (A or B), if p is one.
inline std::optional<FamilyTag> skew_cross(const Polycube& p) {
  Grid grid(p.dims(), p.cells());
  for (const Cell& c : p.cells()) {
    std::vector<int> dirs;
    for (int dir = 0; dir < 6; ++dir)
      if (grid.has(step(c, dir))) dirs.push_back(dir);
    if (dirs.size() != 3) continue;
    std::vector<Cell> rest;
    for (const Cell& q : p.cells())
      if (q != c) rest.push_back(q);
    auto comps = components(std::move(rest));
    if (comps.size() != 3) continue;
    bool ok = true;
    std::array<bool, 3> flat_axes{};
    for (int dir : dirs) {
      Cell n = step(c, dir);
      const auto& comp = *std::find_if(comps.begin(), comps.end(),
                                       [&](const auto& v) { return std::binary_search(v.begin(), v.end(), n); });
      std::vector<Cell> with_c = comp;
      with_c.push_back(c);
      Box outer = bbox(with_c);
      int flat = -1, nflat = 0;
      for (int a = 0; a < 3; ++a)
        if (outer.lo[a] == outer.hi[a]) {
          flat = a;
          ++nflat;
        }
      Box own = bbox(comp);
      if (nflat != 1 || flat_axes[flat] || !min_inscribed_in(comp, own)) {
        ok = false;
        break;
      }
      for (int a = 0; a < 3; ++a)
        if (n[a] != own.lo[a] && n[a] != own.hi[a]) ok = false;
      if (!ok) break;
      flat_axes[flat] = true;
    }
    if (!ok) continue;
    // directions 2a and 2a+1 are opposite along axis a
    bool opposite = false;
    for (int i : dirs)
      for (int j : dirs)
        if (i / 2 == j / 2 && i != j) opposite = true;
    return opposite ? FamilyTag::SkewCrossA : FamilyTag::SkewCrossB;
  }
  return std::nullopt;
}

/// Two planar pieces joined by a straight middle segment r1..r2 of a skew
/// hook: the piece at r1 is flat across axis c and spans axis a, the piece
/// at r2 is flat across axis a and spans axis c.
inline bool is_two_d_by_two_d(const Polycube& p) {
  const PrismDims& d = p.dims();
  Grid grid(d, p.cells());
  for (const Cell& r1 : p.cells())
    for (int m = 0; m < 3; ++m)
      for (int dir : {2 * m, 2 * m + 1}) {
        std::vector<Cell> mid{r1};
        for (Cell r2 = step(r1, dir); grid.has(r2); r2 = step(r2, dir)) {
          mid.push_back(r2);
          std::vector<Cell> mid_sorted = mid;
          std::sort(mid_sorted.begin(), mid_sorted.end());
          std::vector<Cell> rest;
          for (const Cell& q : p.cells())
            if (!std::binary_search(mid_sorted.begin(), mid_sorted.end(), q)) rest.push_back(q);
          std::vector<Cell> s1{r1}, s2{r2};
          bool ok = true;
          for (const auto& comp : components(std::move(rest))) {
            bool at1 = false, at2 = false, other = false;
            for (const Cell& q : comp)
              for (int dd = 0; dd < 6; ++dd) {
                Cell n = step(q, dd);
                if (!std::binary_search(mid_sorted.begin(), mid_sorted.end(), n)) continue;
                if (n == r1)
                  at1 = true;
                else if (n == r2)
                  at2 = true;
                else
                  other = true;
              }
            if (other || at1 == at2) {
              ok = false;
              break;
            }
            auto& side = at1 ? s1 : s2;
            side.insert(side.end(), comp.begin(), comp.end());
          }
          if (!ok) continue;
          for (int a = 0; a < 3; ++a) {
            if (a == m) continue;
            int c = 3 - a - m;
            if (!std::all_of(s1.begin(), s1.end(), [&](const Cell& q) { return q[c] == r1[c]; })) continue;
            if (!std::all_of(s2.begin(), s2.end(), [&](const Cell& q) { return q[a] == r2[a]; })) continue;
            Box b1 = bbox(s1), b2 = bbox(s2);
            if (b1.lo[a] != 0 || b1.hi[a] != d[a] - 1 || r1[a] <= 0 || r1[a] >= d[a] - 1) continue;
            if (b2.lo[c] != 0 || b2.hi[c] != d[c] - 1 || r2[c] <= 0 || r2[c] >= d[c] - 1) continue;
            return true;
          }
        }
      }
  return false;
}

}  // namespace detail

/// Family of a minimal inscribed polycube. All three family predicates are
/// evaluated; anything other than exactly one match is a ClassificationError.
inline FamilyTag classify(const Polycube& p) {
  if (!is_inscribed(p) || static_cast<int>(p.size()) != min_volume(p.dims()))
    throw DomainError("classify needs a minimal inscribed polycube");
  std::optional<FamilyTag> sc = detail::skew_cross(p);
  bool two = detail::is_two_d_by_two_d(p);
  bool diag = detail::is_diagonal(p);
  int hits = (sc ? 1 : 0) + (two ? 1 : 0) + (diag ? 1 : 0);
  if (hits != 1) {
    std::ostringstream os;
    os << (hits == 0 ? "no family matches" : "several families match") << " polycube in " << p.dims() << ":";
    for (const Cell& c : p.cells()) os << ' ' << c;
    throw ClassificationError(os.str());
  }
  if (sc) return *sc;
  return two ? FamilyTag::TwoDxTwoD : FamilyTag::Diagonal;
}

using FamilyCounts = std::map<FamilyTag, Count>;

inline FamilyCounts count_by_family(const PrismDims& d) {
  if (d.b < 2 || d.k < 2 || d.h < 2) throw DomainError("count_by_family needs b, k, h >= 2");
  using Acc = std::array<std::uint64_t, 4>;
  Acc acc = enumerate_parallel<Acc>(
      {d, min_volume(d), true, std::nullopt}, [] { return Acc{}; },
      [&d](Acc& a, const BoxGraph& g, std::span<const int> idx) {
        std::vector<Cell> cells;
        for (int i : idx) cells.push_back(g.cell(i));
        ++a[static_cast<std::size_t>(classify(Polycube(d, std::move(cells))))];
      },
      [](Acc& a, const Acc& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  FamilyCounts out;
  for (FamilyTag t : kAllFamilies) out[t] = Count(acc[static_cast<std::size_t>(t)]);
  return out;
}

}  // namespace polycube::oracle
