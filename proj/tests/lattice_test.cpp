#include <gtest/gtest.h>

#include <random>

#include "tz/lattice.hpp"

using namespace tz;

TEST(LambdaOrder, TiltBreaksTiesTowardLargerY) {
  EXPECT_TRUE(lambda_less({0, 2}, {0, 1}));
  EXPECT_TRUE(lambda_less({0, 0}, {1, 1}));
  EXPECT_FALSE(lambda_less({1, 1}, {1, 1}));
}

TEST(LambdaOrder, ExtremesOfTriangleAreTheStartAndFinish) {
  const NewtonTriangle t(2);
  const auto pts = lattice_points(t);
  const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), lambda_less);
  EXPECT_EQ(*lo, (LatticePoint{0, 2}));
  EXPECT_EQ(*hi, (LatticePoint{2, 0}));
  EXPECT_EQ(t.start(), *lo);
  EXPECT_EQ(t.finish(), *hi);
}

TEST(LambdaOrder, AgreesWithSmallSlopeProjection) {
  // lambda(x, y) = x - eps*y for eps below 1/(2d) orders Delta exactly like lambda_less.
  for (int d = 1; d <= 8; ++d) {
    const double eps = 1.0 / (4.0 * d + 1.0) / 3.14159;
    const auto pts = lattice_points(NewtonTriangle(d));
    for (auto a : pts)
      for (auto b : pts)
        EXPECT_EQ(lambda_less(a, b), a.x - eps * a.y < b.x - eps * b.y);
  }
}

TEST(LambdaOrder, IsStrictTotalOrder) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    const LatticePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    const int holds = int(lambda_less(a, b)) + int(lambda_less(b, a)) + int(a == b);
    EXPECT_EQ(holds, 1) << a << ' ' << b;
  }
}

TEST(LatticePoints, SmallDegrees) {
  EXPECT_EQ(lattice_points(NewtonTriangle(1)),
            (std::vector<LatticePoint>{{0, 1}, {0, 0}, {1, 0}}));
  EXPECT_EQ(lattice_points(NewtonTriangle(2)),
            (std::vector<LatticePoint>{{0, 2}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(lattice_points(NewtonTriangle(4)).size(), 15u);
}

TEST(LatticePoints, SortedAndCounted) {
  for (int d = 1; d <= 10; ++d) {
    const auto pts = lattice_points(NewtonTriangle(d));
    EXPECT_EQ(pts.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_TRUE(lambda_less(pts[i - 1], pts[i]));
  }
}

TEST(NewtonTriangle, RejectsNonPositiveDegree) {
  EXPECT_THROW(NewtonTriangle(0), std::invalid_argument);
}

TEST(InteriorEdgePoints, Examples) {
  EXPECT_EQ(interior_edge_points(NewtonTriangle(2), BoundaryEdge::Hypotenuse),
            (std::vector<LatticePoint>{{1, 1}}));
  EXPECT_EQ(interior_edge_points(NewtonTriangle(2), BoundaryEdge::Vertical),
            (std::vector<LatticePoint>{{0, 1}}));
  EXPECT_EQ(interior_edge_points(NewtonTriangle(4), BoundaryEdge::Hypotenuse),
            (std::vector<LatticePoint>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_TRUE(interior_edge_points(NewtonTriangle(1), BoundaryEdge::Bottom).empty());
}

TEST(InteriorEdgePoints, ExactlyDMinusOneOnTheEdgeExcludingEndpoints) {
  for (int d = 2; d <= 10; ++d) {
    const NewtonTriangle t(d);
    for (auto e : kAllEdges) {
      const auto pts = interior_edge_points(t, e);
      ASSERT_EQ(pts.size(), static_cast<std::size_t>(d - 1));
      for (auto p : pts) {
        EXPECT_TRUE(t.on_edge(p, e));
        EXPECT_TRUE(t.in_edge_interior(p, e));
        EXPECT_NE(p, (LatticePoint{0, 0}));
        EXPECT_NE(p, t.start());
        EXPECT_NE(p, t.finish());
      }
    }
  }
}

TEST(TwiceArea, Examples) {
  EXPECT_EQ(twice_area({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(twice_area({0, 2}, {1, 0}, {2, 0}), 2);
  EXPECT_EQ(twice_area({0, 0}, {2, 0}, {1, 1}), 2);
  EXPECT_EQ(twice_area({0, 0}, {1, 1}, {2, 2}), 0);
}

TEST(TwiceArea, PermutationAndTranslationInvariant) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int i = 0; i < 500; ++i) {
    std::array<LatticePoint, 3> p{};
    for (auto& q : p) q = {coord(rng), coord(rng)};
    const auto ref = twice_area(p[0], p[1], p[2]);
    std::array<int, 3> idx{0, 1, 2};
    do {
      EXPECT_EQ(twice_area(p[idx[0]], p[idx[1]], p[idx[2]]), ref);
    } while (std::next_permutation(idx.begin(), idx.end()));
    const EdgeVector shift{coord(rng), coord(rng)};
    EXPECT_EQ(twice_area(p[0] + shift, p[1] + shift, p[2] + shift), ref);
  }
}

TEST(LatticeLength, GcdOfCoordinates) {
  EXPECT_EQ(lattice_length({2, -2}), 2);
  EXPECT_EQ(lattice_length({1, -2}), 1);
  EXPECT_EQ(lattice_length({0, 3}), 3);
  EXPECT_THROW(lattice_length({0, 0}), std::invalid_argument);
}

TEST(StrictConvexity, Examples) {
  EXPECT_TRUE(is_strictly_convex({0, 1}, {0, 0}, {1, 0}, Side::Plus));
  EXPECT_FALSE(is_strictly_convex({0, 1}, {0, 0}, {1, 0}, Side::Minus));
  EXPECT_FALSE(is_strictly_convex({0, 2}, {0, 1}, {0, 0}, Side::Plus));
  EXPECT_FALSE(is_strictly_convex({0, 2}, {0, 1}, {0, 0}, Side::Minus));
  // A corner bulging toward the hypotenuse is convex for the Minus region.
  EXPECT_TRUE(is_strictly_convex({0, 1}, {1, 1}, {1, 0}, Side::Minus));
}

TEST(StrictConvexity, NeverBothSides) {
  for (int d = 2; d <= 5; ++d) {
    const auto pts = lattice_points(NewtonTriangle(d));
    for (auto a : pts)
      for (auto b : pts)
        for (auto c : pts) {
          if (!(lambda_less(a, b) && lambda_less(b, c))) continue;
          EXPECT_FALSE(is_strictly_convex(a, b, c, Side::Plus) &&
                       is_strictly_convex(a, b, c, Side::Minus));
        }
  }
}
