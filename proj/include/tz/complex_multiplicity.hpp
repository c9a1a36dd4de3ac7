#pragma once

/// Corner-cutting multiplicity of a lattice path.
///
/// For each side, repeatedly find the first path vertex where that side's
/// region is strictly convex, cut the corner triangle off and multiply by
/// its lattice area. A path lying on the side's boundary chain has
/// multiplicity 1; a path that is neither on the chain nor has a convex
/// corner has multiplicity 0. The total multiplicity is the product of the
/// two side values.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tz/path.hpp"

namespace tz {

struct CornerCut {
  std::size_t pivot;                   ///< index k of the removed vertex
  std::array<LatticePoint, 3> triangle;  ///< gamma(k-1), gamma(k), gamma(k+1)
  std::int64_t factor;                 ///< twice_area(triangle)

  friend bool operator==(const CornerCut&, const CornerCut&) = default;
};

enum class Terminal { ChainBase, Dead };

struct MultiplicityTrace {
  Side side = Side::Plus;
  std::vector<CornerCut> steps;
  Terminal terminal = Terminal::ChainBase;

  friend bool operator==(const MultiplicityTrace&, const MultiplicityTrace&) = default;
};

struct SideMultiplicity {
  std::int64_t value = 0;
  MultiplicityTrace trace;
};

/// Smallest k in 1..n-1 at which the side's region is strictly convex.
inline std::optional<std::size_t> find_pivot(const LatticePath& path, Side side) {
  for (std::size_t k = 1; k + 1 < path.size(); ++k)
    if (is_strictly_convex(path[k - 1], path[k], path[k + 1], side)) return k;
  return std::nullopt;
}

/// Removes gamma(k); requires 1 <= k <= n-1.
inline LatticePath cut_corner(const LatticePath& path, std::size_t k) {
  if (k < 1 || k + 1 >= path.size())
    throw std::out_of_range("corner index " + std::to_string(k) +
                            " is not an interior vertex of a path with " +
                            std::to_string(path.size()) + " points");
  std::vector<LatticePoint> pts;
  pts.reserve(path.size() - 1);
  for (std::size_t j = 0; j < path.size(); ++j)
    if (j != k) pts.push_back(path[j]);
  return LatticePath(path.degree(), std::move(pts));
}

inline SideMultiplicity mu_side(const LatticePath& path, Side side) {
  SideMultiplicity result;
  result.trace.side = side;
  result.value = 1;
  LatticePath current = path;
  while (!is_supported_on_chain(current, side)) {
    const auto k = find_pivot(current, side);
    if (!k) {
      result.value = 0;
      result.trace.terminal = Terminal::Dead;
      return result;
    }
    CornerCut cut{*k, {current[*k - 1], current[*k], current[*k + 1]}, 0};
    cut.factor = twice_area(cut.triangle[0], cut.triangle[1], cut.triangle[2]);
    result.value *= cut.factor;
    result.trace.steps.push_back(cut);
    current = cut_corner(current, *k);
  }
  result.trace.terminal = Terminal::ChainBase;
  return result;
}

inline std::int64_t mu(const LatticePath& path) {
  return mu_side(path, Side::Plus).value * mu_side(path, Side::Minus).value;
}

/// Re-applies the cuts recorded in `trace` to `path`, checking each recorded
/// triangle and factor, and returns the resulting side multiplicity.
inline std::int64_t replay(const LatticePath& path, const MultiplicityTrace& trace) {
  LatticePath current = path;
  std::int64_t value = 1;
  for (const auto& cut : trace.steps) {
    if (cut.pivot < 1 || cut.pivot + 1 >= current.size())
      throw std::logic_error("trace pivot out of range");
    const std::array<LatticePoint, 3> tri{current[cut.pivot - 1], current[cut.pivot],
                                          current[cut.pivot + 1]};
    if (tri != cut.triangle) throw std::logic_error("trace triangle mismatch");
    if (twice_area(tri[0], tri[1], tri[2]) != cut.factor)
      throw std::logic_error("trace factor mismatch");
    value *= cut.factor;
    current = cut_corner(current, cut.pivot);
  }
  if (trace.terminal == Terminal::Dead) return 0;
  if (!is_supported_on_chain(current, trace.side))
    throw std::logic_error("trace does not end on the boundary chain");
  return value;
}

}  // namespace tz
