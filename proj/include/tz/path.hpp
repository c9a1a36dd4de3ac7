#pragma once

// lambda-increasing lattice paths through the Newton triangle.

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tz/lattice.hpp"

namespace tz {

/// A tangency condition: the path must avoid `point`, which sits strictly
/// inside boundary edge `edge`.
struct MarkedPoint {
  BoundaryEdge edge;
  LatticePoint point;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Degree plus at most three marked points on pairwise distinct edges.
class MarkedConfig {
 public:
  MarkedConfig(int degree, std::vector<MarkedPoint> marked)
      : triangle_(degree), marked_(std::move(marked)) {
    if (degree < 2) throw std::invalid_argument("marked configurations need degree >= 2");
    if (marked_.size() > 3)
      throw std::invalid_argument("at most three tangency conditions are supported");
    for (std::size_t i = 0; i < marked_.size(); ++i) {
      const auto& m = marked_[i];
      if (!triangle_.in_edge_interior(m.point, m.edge)) {
        std::ostringstream msg;
        msg << "marked point " << m.point << " is not interior to the "
            << to_string(m.edge) << " edge of degree " << degree;
        throw std::invalid_argument(msg.str());
      }
      for (std::size_t j = 0; j < i; ++j)
        if (marked_[j].edge == m.edge)
          throw std::invalid_argument("two marked points on the " +
                                      to_string(m.edge) + " edge");
    }
  }

  int degree() const noexcept { return triangle_.degree(); }
  const NewtonTriangle& triangle() const noexcept { return triangle_; }
  const std::vector<MarkedPoint>& marked() const noexcept { return marked_; }

  bool is_marked(LatticePoint p) const noexcept {
    return std::any_of(marked_.begin(), marked_.end(),
                       [p](const MarkedPoint& m) { return m.point == p; });
  }

 private:
  NewtonTriangle triangle_;
  std::vector<MarkedPoint> marked_;
};

/// Strictly lambda-increasing sequence of points of the degree-d triangle.
class LatticePath {
 public:
  LatticePath(int degree, std::vector<LatticePoint> points)
      : triangle_(degree), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("empty lattice path");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!triangle_.contains(points_[i])) {
        std::ostringstream msg;
        msg << "path point " << points_[i] << " lies outside the degree "
            << degree << " triangle";
        throw std::invalid_argument(msg.str());
      }
      if (i > 0 && !lambda_less(points_[i - 1], points_[i])) {
        std::ostringstream msg;
        msg << "path is not lambda-increasing at " << points_[i - 1] << " -> "
            << points_[i];
        throw std::invalid_argument(msg.str());
      }
    }
  }

  int degree() const noexcept { return triangle_.degree(); }
  const NewtonTriangle& triangle() const noexcept { return triangle_; }
  std::span<const LatticePoint> points() const noexcept { return points_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  /// Number of steps n, one less than the number of points.
  std::size_t length() const noexcept { return points_.size() - 1; }
  std::size_t size() const noexcept { return points_.size(); }

  bool runs_corner_to_corner() const noexcept {
    return points_.front() == triangle_.start() && points_.back() == triangle_.finish();
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.degree() == b.degree() && a.points_ == b.points_;
  }

 private:
  NewtonTriangle triangle_;
  std::vector<LatticePoint> points_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePath& path) {
  os << '[';
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
  return os << ']';
}

/// The unique path of length d(d+3)/2 - l: every allowed point in lambda order.
inline LatticePath build_maximal_path(const MarkedConfig& cfg) {
  std::vector<LatticePoint> pts;
  for (auto p : lattice_points(cfg.triangle()))
    if (!cfg.is_marked(p)) pts.push_back(p);
  return LatticePath(cfg.degree(), std::move(pts));
}

inline std::vector<EdgeVector> step_vectors(const LatticePath& path) {
  std::vector<EdgeVector> out;
  out.reserve(path.length());
  for (std::size_t j = 1; j < path.size(); ++j) out.push_back(path[j] - path[j - 1]);
  return out;
}

/// Every segment lies on the side's boundary chain: the hypotenuse for Plus,
/// the vertical edge followed by the bottom edge for Minus. Chain points may
/// be skipped.
inline bool is_supported_on_chain(const LatticePath& path, Side side) {
  const auto& t = path.triangle();
  for (std::size_t j = 1; j < path.size(); ++j) {
    const auto a = path[j - 1];
    const auto b = path[j];
    if (side == Side::Plus) {
      if (!t.on_edge(a, BoundaryEdge::Hypotenuse) || !t.on_edge(b, BoundaryEdge::Hypotenuse))
        return false;
    } else {
      const bool vertical = a.x == 0 && b.x == 0;
      const bool bottom = a.y == 0 && b.y == 0;
      if (!vertical && !bottom) return false;
    }
  }
  return true;
}

/// Calls `visit(const LatticePath&)` for every lambda-increasing path from
/// (0,d) to (d,0) with exactly n steps avoiding `forbidden`, in
/// lexicographic order of the visited point sequences (points compared by
/// lambda order). Returns the number of paths visited.
template <class Visitor>
std::size_t enumerate_paths(const NewtonTriangle& t, std::size_t n,
                            std::span<const LatticePoint> forbidden, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_paths needs at least one step");
  std::vector<LatticePoint> allowed;
  for (auto p : lattice_points(t))
    if (std::find(forbidden.begin(), forbidden.end(), p) == forbidden.end())
      allowed.push_back(p);
  if (allowed.empty() || allowed.front() != t.start() || allowed.back() != t.finish())
    return 0;

  const std::size_t last = allowed.size() - 1;
  std::vector<LatticePoint> current{allowed.front()};
  std::size_t emitted = 0;

  // `at` indexes into `allowed`; the remaining steps must fit in what is left.
  auto recurse = [&](auto&& self, std::size_t at, std::size_t steps_left) -> void {
    if (steps_left == 0) {
      if (at == last) {
        visit(LatticePath(t.degree(), current));
        ++emitted;
      }
      return;
    }
    if (last - at < steps_left) return;
    for (std::size_t next = at + 1; next + (steps_left - 1) <= last; ++next) {
      if (steps_left == 1 && next != last) continue;
      current.push_back(allowed[next]);
      self(self, next, steps_left - 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0, n);
  return emitted;
}

inline std::vector<LatticePath> enumerate_paths(const NewtonTriangle& t, std::size_t n,
                                                std::span<const LatticePoint> forbidden) {
  std::vector<LatticePath> out;
  enumerate_paths(t, n, forbidden, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

}  // namespace tz
