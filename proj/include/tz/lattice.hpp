#pragma once

/// Exact lattice geometry of the degree-d Newton triangle
/// conv{(0,0), (d,0), (0,d)}.
///
/// Everything here is integer arithmetic. The projection onto a line of
/// tiny negative irrational slope is replaced by the lexicographic order
/// it induces on the triangle's lattice points (x ascending, then y
/// descending), which is exact for any slope shallower than 1/(2d).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tz {

struct EdgeVector {
  int dx = 0;
  int dy = 0;

  constexpr bool is_zero() const noexcept { return dx == 0 && dy == 0; }
  friend constexpr bool operator==(EdgeVector, EdgeVector) = default;
};

struct LatticePoint {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(LatticePoint, LatticePoint) = default;
  friend constexpr auto operator<=>(LatticePoint, LatticePoint) = default;
};

constexpr EdgeVector operator-(LatticePoint a, LatticePoint b) noexcept {
  return {a.x - b.x, a.y - b.y};
}
constexpr LatticePoint operator+(LatticePoint a, EdgeVector v) noexcept {
  return {a.x + v.dx, a.y + v.dy};
}
constexpr EdgeVector operator+(EdgeVector a, EdgeVector b) noexcept {
  return {a.dx + b.dx, a.dy + b.dy};
}

inline std::ostream& operator<<(std::ostream& os, LatticePoint p) {
  return os << '(' << p.x << ',' << p.y << ')';
}
inline std::ostream& operator<<(std::ostream& os, EdgeVector v) {
  return os << '<' << v.dx << ',' << v.dy << '>';
}

/// z-component of the planar cross product.
constexpr std::int64_t cross(EdgeVector a, EdgeVector b) noexcept {
  return std::int64_t{a.dx} * b.dy - std::int64_t{a.dy} * b.dx;
}

/// The three sides of the Newton triangle.
///  Hypotenuse: (d,0)-(0,d), Vertical: (0,0)-(0,d), Bottom: (0,0)-(d,0).
enum class BoundaryEdge { Hypotenuse, Vertical, Bottom };

/// Which of the two regions cut out by a path: Plus holds the hypotenuse,
/// Minus holds the vertical and bottom edges.
enum class Side { Plus, Minus };

inline constexpr BoundaryEdge kAllEdges[] = {
    BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical, BoundaryEdge::Bottom};

inline char edge_letter(BoundaryEdge e) {
  switch (e) {
    case BoundaryEdge::Hypotenuse: return 'h';
    case BoundaryEdge::Vertical: return 'v';
    case BoundaryEdge::Bottom: return 'b';
  }
  return '?';
}

inline std::string to_string(BoundaryEdge e) {
  switch (e) {
    case BoundaryEdge::Hypotenuse: return "hypotenuse";
    case BoundaryEdge::Vertical: return "vertical";
    case BoundaryEdge::Bottom: return "bottom";
  }
  return "?";
}

inline std::string to_string(Side s) { return s == Side::Plus ? "plus" : "minus"; }

/// Strict total order on Z^2 induced by lambda(x, y) = x - eps*y, eps -> 0+.
constexpr bool lambda_less(LatticePoint a, LatticePoint b) noexcept {
  return a.x < b.x || (a.x == b.x && a.y > b.y);
}

class NewtonTriangle {
 public:
  explicit NewtonTriangle(int degree) : degree_(degree) {
    if (degree < 1)
      throw std::invalid_argument("degree must be at least 1, got " +
                                  std::to_string(degree));
  }

  int degree() const noexcept { return degree_; }

  /// lambda-minimum, the start of every path.
  LatticePoint start() const noexcept { return {0, degree_}; }
  /// lambda-maximum, the end of every path.
  LatticePoint finish() const noexcept { return {degree_, 0}; }

  std::size_t point_count() const noexcept {
    auto d = static_cast<std::size_t>(degree_);
    return (d + 1) * (d + 2) / 2;
  }

  bool contains(LatticePoint p) const noexcept {
    return p.x >= 0 && p.y >= 0 && p.x + p.y <= degree_;
  }

  bool on_edge(LatticePoint p, BoundaryEdge e) const noexcept {
    if (!contains(p)) return false;
    switch (e) {
      case BoundaryEdge::Hypotenuse: return p.x + p.y == degree_;
      case BoundaryEdge::Vertical: return p.x == 0;
      case BoundaryEdge::Bottom: return p.y == 0;
    }
    return false;
  }

  /// On edge e and not one of its endpoints.
  bool in_edge_interior(LatticePoint p, BoundaryEdge e) const noexcept {
    if (!on_edge(p, e)) return false;
    switch (e) {
      case BoundaryEdge::Hypotenuse: return p.x > 0 && p.y > 0;
      case BoundaryEdge::Vertical: return p.y > 0 && p.y < degree_;
      case BoundaryEdge::Bottom: return p.x > 0 && p.x < degree_;
    }
    return false;
  }

 private:
  int degree_;
};

/// All points of the triangle, sorted by lambda_less.
inline std::vector<LatticePoint> lattice_points(const NewtonTriangle& t) {
  std::vector<LatticePoint> out;
  out.reserve(t.point_count());
  const int d = t.degree();
  for (int x = 0; x <= d; ++x)
    for (int y = d - x; y >= 0; --y) out.push_back({x, y});
  return out;
}

/// The d-1 lattice points strictly inside edge e, in lambda order.
inline std::vector<LatticePoint> interior_edge_points(const NewtonTriangle& t,
                                                      BoundaryEdge e) {
  std::vector<LatticePoint> out;
  const int d = t.degree();
  for (int i = 1; i < d; ++i) {
    switch (e) {
      case BoundaryEdge::Hypotenuse: out.push_back({i, d - i}); break;
      case BoundaryEdge::Vertical: out.push_back({0, d - i}); break;
      case BoundaryEdge::Bottom: out.push_back({i, 0}); break;
    }
  }
  return out;
}

/// Lattice area of a triangle: twice the Euclidean area.
constexpr std::int64_t twice_area(LatticePoint a, LatticePoint b,
                                  LatticePoint c) noexcept {
  const auto det = cross(b - a, c - a);
  return det < 0 ? -det : det;
}

/// Number of lattice segments on v, i.e. gcd(|dx|, |dy|).
inline int lattice_length(EdgeVector v) {
  if (v.is_zero()) throw std::invalid_argument("lattice_length of zero vector");
  return std::gcd(v.dx < 0 ? -v.dx : v.dx, v.dy < 0 ? -v.dy : v.dy);
}

/// Both coordinates even, equivalently even lattice length for nonzero v.
constexpr bool is_even(EdgeVector v) noexcept {
  return v.dx % 2 == 0 && v.dy % 2 == 0;
}

/// Whether the region on `side` of a path running through prev -> cur ->
/// next has an interior angle < pi at cur. Paths run from (0,d) to (d,0),
/// so the Plus region lies to the left and turns left there; collinear
/// triples are never strictly convex.
constexpr bool is_strictly_convex(LatticePoint prev, LatticePoint cur,
                                  LatticePoint next, Side side) noexcept {
  const auto turn = cross(cur - prev, next - cur);
  return side == Side::Plus ? turn > 0 : turn < 0;
}

}  // namespace tz
