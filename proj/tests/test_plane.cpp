#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fingeo/plane.hpp"
#include "oracle.hpp"

using namespace fingeo;

class PlaneOrders : public ::testing::TestWithParam<int> {};

TEST_P(PlaneOrders, IncidenceAxioms) {
  const Plane P(field_of_order(GetParam()));
  const int q = P.q();
  ASSERT_EQ(P.size(), q * q + q + 1);
  for (int i = 0; i < P.size(); ++i) {
    EXPECT_EQ(static_cast<int>(P.points_on(i).size()), q + 1);
    EXPECT_EQ(static_cast<int>(P.lines_through(i).size()), q + 1);
    EXPECT_EQ(P.index_of(P.point(i)), i);
  }
  for (int l = 0; l < P.size(); l += 2)
    for (int m = l + 1; m < P.size(); m += 3) {
      const int x = P.intersection(l, m);
      EXPECT_TRUE(oracle::on(P, x, l));
      EXPECT_TRUE(oracle::on(P, x, m));
    }
  for (int a = 0; a < P.size(); a += 3)
    for (int b = a + 1; b < P.size(); b += 2) {
      const int l = P.line_through(a, b);
      EXPECT_TRUE(oracle::on(P, a, l));
      EXPECT_TRUE(oracle::on(P, b, l));
      int common = 0;
      for (int m : P.lines_through(a))
        if (P.incident(b, m)) ++common;
      EXPECT_EQ(common, 1);
    }
}

TEST_P(PlaneOrders, PointsAreNormalized) {
  const Plane P(field_of_order(GetParam()));
  const Field& F = P.field();
  for (int i = 0; i < P.size(); ++i) {
    const auto& t = P.point(i);
    int last = 2;
    while (t[last].is_zero()) --last;
    EXPECT_EQ(t[last], F.one());
    // scalar multiples map to the same index
    EXPECT_EQ(P.index_of({F.mul(t[0], F.primitive()), F.mul(t[1], F.primitive()), F.mul(t[2], F.primitive())}), i);
  }
  // index 0 is (0:0:1) and line 0 is z = 0
  EXPECT_EQ(P.point(0), (Triple{F.zero(), F.zero(), F.one()}));
  EXPECT_EQ(infinity_line(P), 0);
  for (int x : P.points_on(0)) EXPECT_TRUE(P.point(x)[2].is_zero());
}

TEST_P(PlaneOrders, SingerCycleIsTransitive) {
  const Plane P(field_of_order(GetParam()));
  const Collineation s = singer_cycle(P);
  std::set<int> orbit;
  int x = 0;
  do {
    orbit.insert(x);
    x = P.apply(s, x);
  } while (x != 0);
  EXPECT_EQ(static_cast<int>(orbit.size()), P.size());
}

TEST_P(PlaneOrders, IsomorphismFindsRandomImages) {
  const Plane P(field_of_order(GetParam()));
  const Field& F = P.field();
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 5; ++trial) {
    Mat3 m;
    do {
      for (auto& x : m) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
    } while (mat::det(F, m).is_zero());
    const Collineation c{m, static_cast<int>(rng() % F.n())};
    std::vector<int> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(static_cast<int>(rng() % P.size()));
    const PointSet S(pts);
    const PointSet T = P.apply(c, S);
    const auto iso = are_isomorphic(P, S, T);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(P.apply(*iso, S), T);
  }
  // a line and a line with one point moved off it are not isomorphic
  const PointSet line = P.points_of_line(0);
  std::vector<int> moved(line.begin() + 1, line.end());
  moved.push_back(0);  // (0:0:1) is off z = 0
  EXPECT_FALSE(are_isomorphic(P, line, PointSet(moved)).has_value());
}

INSTANTIATE_TEST_SUITE_P(Small, PlaneOrders, ::testing::Values(2, 3, 4, 5, 7, 8, 9));

TEST(Plane, StandardPositionMovesTangent) {
  const Plane P(field_of_order(5));
  const Field& F = P.field();
  // an oval: conic points of y^2 = xz
  std::vector<int> pts;
  for (int i = 0; i < P.size(); ++i) {
    const auto& t = P.point(i);
    if (F.mul(t[1], t[1]) == F.mul(t[0], t[2])) pts.push_back(i);
  }
  const PointSet S(pts);
  ASSERT_EQ(S.size(), 6);
  for (int l : tangent_lines(P, S)) {
    const auto sp = standard_position_at(P, S, l);
    const PointSet img = P.apply(sp.map, S);
    EXPECT_TRUE(img.contains(P.index_of({F.one(), F.zero(), F.zero()})));
    int on_z = 0;
    for (int x : img)
      if (P.point(x)[2].is_zero()) ++on_z;
    EXPECT_EQ(on_z, 1);
    EXPECT_EQ(static_cast<int>(sp.affine.size()), S.size() - 1);
  }
}
