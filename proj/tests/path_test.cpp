#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tz/counts.hpp"
#include "tz/path.hpp"

using namespace tz;

namespace {

using Points = std::vector<LatticePoint>;

/// Every subset of allowed points containing both corners, read in lambda
/// order: the brute-force set of lambda-increasing paths with n steps.
std::vector<Points> brute_force_paths(int d, std::size_t n, const Points& forbidden) {
  const NewtonTriangle t(d);
  Points allowed;
  for (auto p : lattice_points(t))
    if (std::find(forbidden.begin(), forbidden.end(), p) == forbidden.end()) allowed.push_back(p);
  std::vector<Points> out;
  const std::size_t m = allowed.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n + 1) continue;
    Points path;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) path.push_back(allowed[i]);
    if (path.front() == t.start() && path.back() == t.finish()) out.push_back(path);
  }
  return out;
}

Points as_points(const LatticePath& p) { return {p.points().begin(), p.points().end()}; }

bool valid(const LatticePath& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.triangle().contains(p[i])) return false;
    if (i > 0 && !lambda_less(p[i - 1], p[i])) return false;
  }
  return true;
}

}  // namespace

TEST(MarkedConfig, RejectsInvalidMarkedPoints) {
  EXPECT_THROW(MarkedConfig(2, {{BoundaryEdge::Hypotenuse, {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(MarkedConfig(2, {{BoundaryEdge::Hypotenuse, {0, 2}}}), std::invalid_argument);
  EXPECT_THROW(MarkedConfig(3, {{BoundaryEdge::Vertical, {0, 1}}, {BoundaryEdge::Vertical, {0, 2}}}),
               std::invalid_argument);
  EXPECT_THROW(MarkedConfig(3, {{BoundaryEdge::Bottom, {3, 0}}}), std::invalid_argument);
  EXPECT_NO_THROW(MarkedConfig(3, {{BoundaryEdge::Bottom, {2, 0}}}));
}

TEST(LatticePath, RejectsNonIncreasingOrOutside) {
  EXPECT_THROW(LatticePath(2, {{0, 1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(LatticePath(2, {{0, 2}, {3, 0}}), std::invalid_argument);
  EXPECT_THROW(LatticePath(2, {}), std::invalid_argument);
}

TEST(BuildMaximalPath, Examples) {
  EXPECT_EQ(as_points(build_maximal_path(MarkedConfig(2, {{BoundaryEdge::Hypotenuse, {1, 1}}}))),
            (Points{{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(as_points(build_maximal_path(MarkedConfig(
                2, {{BoundaryEdge::Hypotenuse, {1, 1}}, {BoundaryEdge::Vertical, {0, 1}}}))),
            (Points{{0, 2}, {0, 0}, {1, 0}, {2, 0}}));
  const auto full = build_maximal_path(MarkedConfig(3, {}));
  EXPECT_EQ(full.length(), 9u);
  EXPECT_EQ(full.size(), 10u);
}

TEST(BuildMaximalPath, LengthAndPointSetForAllSelections) {
  const std::vector<std::vector<BoundaryEdge>> edge_sets{
      {},
      {BoundaryEdge::Hypotenuse},
      {BoundaryEdge::Vertical},
      {BoundaryEdge::Bottom},
      {BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical},
      {BoundaryEdge::Vertical, BoundaryEdge::Bottom},
      {BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical, BoundaryEdge::Bottom}};
  for (int d = 2; d <= 8; ++d)
    for (const auto& edges : edge_sets)
      for (const auto& cfg : marked_selections(d, edges)) {
        const auto path = build_maximal_path(cfg);
        EXPECT_EQ(path.size(), static_cast<std::size_t>(d * (d + 3) / 2) - edges.size() + 1);
        EXPECT_TRUE(path.runs_corner_to_corner());
        EXPECT_TRUE(valid(path));
        std::set<LatticePoint> expected;
        for (auto p : lattice_points(cfg.triangle()))
          if (!cfg.is_marked(p)) expected.insert(p);
        EXPECT_EQ(std::set<LatticePoint>(path.points().begin(), path.points().end()), expected);
      }
}

TEST(StepVectors, Examples) {
  EXPECT_EQ(step_vectors(LatticePath(2, {{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}})),
            (std::vector<EdgeVector>{{0, -1}, {0, -1}, {1, 0}, {1, 0}}));
  EXPECT_EQ(step_vectors(LatticePath(2, {{0, 2}, {0, 0}, {1, 0}, {2, 0}})),
            (std::vector<EdgeVector>{{0, -2}, {1, 0}, {1, 0}}));
  EXPECT_EQ(step_vectors(LatticePath(1, {{0, 1}, {1, 0}})), (std::vector<EdgeVector>{{1, -1}}));
}

TEST(SupportedOnChain, Examples) {
  EXPECT_TRUE(is_supported_on_chain(LatticePath(2, {{0, 2}, {0, 0}, {1, 0}, {2, 0}}), Side::Minus));
  EXPECT_TRUE(is_supported_on_chain(LatticePath(2, {{0, 2}, {2, 0}}), Side::Plus));
  EXPECT_FALSE(is_supported_on_chain(LatticePath(2, {{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}}),
                                     Side::Plus));
  EXPECT_FALSE(is_supported_on_chain(LatticePath(2, {{0, 2}, {0, 1}, {1, 0}, {2, 0}}), Side::Minus));
  EXPECT_TRUE(is_supported_on_chain(LatticePath(3, {{0, 3}, {2, 1}, {3, 0}}), Side::Plus));
}

TEST(EnumeratePaths, Examples) {
  const Points marked{{1, 1}};
  EXPECT_EQ(enumerate_paths(NewtonTriangle(2), 4, marked).size(), 1u);
  EXPECT_EQ(enumerate_paths(NewtonTriangle(2), 5, {}).size(), 1u);
  const auto d1 = enumerate_paths(NewtonTriangle(1), 2, {});
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(as_points(d1.front()), (Points{{0, 1}, {0, 0}, {1, 0}}));
  EXPECT_THROW(enumerate_paths(NewtonTriangle(2), 0, {}), std::invalid_argument);
}

TEST(EnumeratePaths, MatchesBruteForceInLexicographicOrder) {
  const std::vector<Points> forbidden_sets{{}, {{1, 1}}, {{1, 2}, {0, 1}}, {{2, 1}, {0, 2}, {1, 0}}};
  for (int d = 2; d <= 3; ++d)
    for (const auto& forbidden : forbidden_sets) {
      const NewtonTriangle t(d);
      Points f;
      for (auto p : forbidden)
        if (t.contains(p)) f.push_back(p);
      for (std::size_t n = 1; n <= t.point_count(); ++n) {
        auto expected = brute_force_paths(d, n, f);
        // Lexicographic order on lambda ranks.
        auto rank = [&](LatticePoint p) { return p.x * 100 + (100 - p.y); };
        std::sort(expected.begin(), expected.end(), [&](const Points& a, const Points& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                              [&](auto u, auto v) { return rank(u) < rank(v); });
        });
        std::vector<Points> got;
        for (const auto& p : enumerate_paths(t, n, f)) {
          EXPECT_TRUE(valid(p));
          got.push_back(as_points(p));
        }
        EXPECT_EQ(got, expected) << "d=" << d << " n=" << n;
      }
    }
}

TEST(EnumeratePaths, MaximalLengthIsUnique) {
  for (int d = 2; d <= 5; ++d)
    for (std::size_t l = 0; l <= 3; ++l) {
      std::vector<BoundaryEdge> edges(kAllEdges, kAllEdges + l);
      for (const auto& cfg : marked_selections(d, edges)) {
        Points forbidden;
        for (const auto& m : cfg.marked()) forbidden.push_back(m.point);
        const auto paths =
            enumerate_paths(cfg.triangle(), static_cast<std::size_t>(d * (d + 3) / 2) - l, forbidden);
        ASSERT_EQ(paths.size(), 1u);
        EXPECT_EQ(paths.front(), build_maximal_path(cfg));
      }
    }
}
