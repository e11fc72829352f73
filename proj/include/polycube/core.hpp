#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycube/count.hpp"

namespace polycube {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Circumscribed box: b along x, k along y, h along z.
struct PrismDims {
  int b = 1;
  int k = 1;
  int h = 1;

  constexpr PrismDims() = default;
  constexpr PrismDims(int b_, int k_, int h_) : b(b_), k(k_), h(h_) {
    if (b < 1 || k < 1 || h < 1) throw DomainError("prism dimensions must be positive");
  }

  constexpr int operator[](int axis) const { return axis == 0 ? b : (axis == 1 ? k : h); }
  constexpr std::int64_t cell_count() const { return std::int64_t{b} * k * h; }
  constexpr std::array<int, 3> as_array() const { return {b, k, h}; }

  friend constexpr bool operator==(const PrismDims&, const PrismDims&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PrismDims& d) {
  return os << d.b << 'x' << d.k << 'x' << d.h;
}

struct Cell {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr int operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  constexpr int& at(int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

constexpr bool inside(const PrismDims& d, const Cell& c) {
  return c.x >= 0 && c.x < d.b && c.y >= 0 && c.y < d.k && c.z >= 0 && c.z < d.h;
}

constexpr bool face_adjacent(const Cell& a, const Cell& c) {
  int dx = a.x - c.x, dy = a.y - c.y, dz = a.z - c.z;
  return dx * dx + dy * dy + dz * dz == 1;
}

inline constexpr std::array<std::array<int, 3>, 6> kFaceSteps{{
    {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1},
}};

constexpr Cell step(const Cell& c, int dir) {
  return {c.x + kFaceSteps[dir][0], c.y + kFaceSteps[dir][1], c.z + kFaceSteps[dir][2]};
}

/// Membership test over a sorted cell vector.
inline bool contains(std::span<const Cell> sorted_cells, const Cell& c) {
  return std::binary_search(sorted_cells.begin(), sorted_cells.end(), c);
}

/// Number of face-connected components of a cell set (any order).
inline int component_count(std::span<const Cell> cells) {
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> seen(sorted.size(), 0);
  std::vector<std::size_t> stack;
  int comps = 0;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Cell c = sorted[stack.back()];
      stack.pop_back();
      for (int dir = 0; dir < 6; ++dir) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), step(c, dir));
        if (it == sorted.end() || *it != step(c, dir)) continue;
        auto j = static_cast<std::size_t>(it - sorted.begin());
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
  }
  return comps;
}

/// A non-empty, 6-connected set of cells inside a box. Cells are kept sorted
/// and deduplicated; inscription is a separate predicate.
class Polycube {
 public:
  Polycube(PrismDims dims, std::vector<Cell> cells) : dims_(dims), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    if (cells_.empty()) throw DomainError("polycube must be non-empty");
    for (const Cell& c : cells_)
      if (!inside(dims_, c)) throw DomainError("cell outside prism");
    if (component_count(cells_) != 1) throw DomainError("polycube cells are not face-connected");
  }

  const PrismDims& dims() const { return dims_; }
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const { return polycube::contains(cells_, c); }

  friend bool operator==(const Polycube&, const Polycube&) = default;

 private:
  PrismDims dims_;
  std::vector<Cell> cells_;
};

constexpr int min_volume(const PrismDims& d) { return d.b + d.k + d.h - 2; }

inline bool is_inscribed(const Polycube& p) {
  std::array<int, 3> lo{p.dims().b, p.dims().k, p.dims().h};
  std::array<int, 3> hi{-1, -1, -1};
  for (const Cell& c : p.cells()) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], c[a]);
      hi[a] = std::max(hi[a], c[a]);
    }
  }
  for (int a = 0; a < 3; ++a)
    if (lo[a] != 0 || hi[a] != p.dims()[a] - 1) return false;
  return true;
}

inline int degree(const Polycube& p, const Cell& c) {
  if (!p.contains(c)) throw std::invalid_argument("cell not in polycube");
  int deg = 0;
  for (int dir = 0; dir < 6; ++dir) deg += p.contains(step(c, dir)) ? 1 : 0;
  return deg;
}

/// Planar polyomino; (u, v) are the two surviving coordinates in axis order.
struct Polyomino2D {
  int width = 1;   // extent of the first surviving axis
  int height = 1;  // extent of the second surviving axis
  std::vector<std::array<int, 2>> cells;  // sorted, unique

  friend bool operator==(const Polyomino2D&, const Polyomino2D&) = default;
};

inline Polyomino2D project(const Polycube& p, Axis axis) {
  int drop = static_cast<int>(axis);
  int u = drop == 0 ? 1 : 0;
  int v = drop == 2 ? 1 : 2;
  Polyomino2D out;
  out.width = p.dims()[u];
  out.height = p.dims()[v];
  for (const Cell& c : p.cells()) out.cells.push_back({c[u], c[v]});
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

/// Lift a planar polyomino into the z = 0 layer of a (width, height, 1) box.
inline Polycube lift(const Polyomino2D& q) {
  std::vector<Cell> cells;
  cells.reserve(q.cells.size());
  for (auto [u, v] : q.cells) cells.push_back({u, v, 0});
  return Polycube(PrismDims(q.width, q.height, 1), std::move(cells));
}

enum class FamilyTag { Diagonal, TwoDxTwoD, SkewCrossA, SkewCrossB };

inline constexpr std::array<FamilyTag, 4> kAllFamilies{FamilyTag::Diagonal, FamilyTag::TwoDxTwoD,
                                                        FamilyTag::SkewCrossA, FamilyTag::SkewCrossB};

constexpr std::string_view to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::Diagonal: return "Diagonal";
    case FamilyTag::TwoDxTwoD: return "TwoDxTwoD";
    case FamilyTag::SkewCrossA: return "SkewCrossA";
    case FamilyTag::SkewCrossB: return "SkewCrossB";
  }
  return "?";
}

inline std::optional<FamilyTag> parse_family(std::string_view s) {
  for (FamilyTag t : kAllFamilies)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format:
//   dims b k h
//   x y z
//   ...
//   <blank line between polycubes>

inline void write_header(std::ostream& os, const PrismDims& d) {
  os << "dims " << d.b << ' ' << d.k << ' ' << d.h << '\n';
}

inline void write_cells(std::ostream& os, std::span<const Cell> cells) {
  for (const Cell& c : cells) os << c.x << ' ' << c.y << ' ' << c.z << '\n';
}

inline void write_polycubes(std::ostream& os, const PrismDims& d, std::span<const Polycube> ps) {
  write_header(os, d);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i != 0) os << '\n';
    write_cells(os, ps[i].cells());
  }
}

inline std::vector<Polycube> read_polycubes(std::istream& is, PrismDims* dims_out = nullptr) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing dims header");
  std::istringstream hs(line);
  std::string tag;
  int b = 0, k = 0, h = 0;
  if (!(hs >> tag >> b >> k >> h) || tag != "dims") throw std::invalid_argument("bad dims header: " + line);
  PrismDims d(b, k, h);
  if (dims_out) *dims_out = d;

  std::vector<Polycube> out;
  std::vector<Cell> cur;
  auto flush = [&] {
    if (!cur.empty()) out.emplace_back(d, std::move(cur));
    cur.clear();
  };
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    std::istringstream ls(line);
    Cell c;
    if (!(ls >> c.x >> c.y >> c.z)) throw std::invalid_argument("bad cell line: " + line);
    cur.push_back(c);
  }
  flush();
  return out;
}

}  // namespace polycube
