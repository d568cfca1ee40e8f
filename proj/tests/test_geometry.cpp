#include <gtest/gtest.h>

#include <random>

#include "fingeo/arcs.hpp"
#include "fingeo/blocking.hpp"
#include "fingeo/linearsets.hpp"
#include "oracle.hpp"

using namespace fingeo;

namespace {

QuadForm form_of(std::initializer_list<std::uint32_t> c) {
  QuadForm f{};
  int i = 0;
  for (auto x : c) f[i++] = Elem{x};
  return f;
}

// x^2 = yz up to the sign convention: x^2 - yz
QuadForm standard_conic(const Field& F) { return {F.one(), F.zero(), F.zero(), F.zero(), F.zero(), F.neg(F.one())}; }

}  // namespace

// ---- blocking sets

TEST(Blocking, LineAndBaerSubplane) {
  for (int q : {4, 9, 16}) {
    const Plane P(field_of_order(q));
    const auto line = analyze(P, P.points_of_line(0));
    EXPECT_EQ(line.size, q + 1);
    EXPECT_TRUE(line.contains_line);
    EXPECT_TRUE(line.minimal);
    const int r = static_cast<int>(nt::isqrt(q));
    const PointSet B = baer_subplane(P);
    const auto b = analyze(P, B);
    EXPECT_EQ(b.size, q + r + 1);
    // q + r + 1 secants meeting in r + 1 points, the rest tangents
    EXPECT_EQ(b.spectrum, (std::map<int, int>{{1, P.size() - (q + r + 1)}, {r + 1, q + r + 1}}));
    EXPECT_TRUE(b.minimal);
    EXPECT_FALSE(b.contains_line);
    EXPECT_TRUE(b.redei_type);  // |B| = q + (r + 1)
  }
}

TEST(Blocking, BaerPartition) {
  const Plane P(field_of_order(9));
  const auto parts = baer_partition(P);
  // q - sqrt(q) + 1 disjoint subplanes covering the plane
  ASSERT_EQ(parts.size(), 7u);
  std::vector<int> cover(P.size(), 0);
  for (const auto& S : parts) {
    EXPECT_EQ(S.size(), 13);
    EXPECT_EQ(analyze(P, S).spectrum, (std::map<int, int>{{1, 78}, {4, 13}}));
    for (int x : S) ++cover[x];
  }
  for (int c : cover) EXPECT_EQ(c, 1);
  // unions of t members are t-fold blocking
  for (int t = 1; t <= 3; ++t) EXPECT_GE(analyze(P, partition_union(P, t)).t_max, t);
  EXPECT_EQ(analyze(P, partition_union(P, 2)).spectrum, (std::map<int, int>{{2, 65}, {5, 26}}));
}

TEST(Blocking, RedeiGraphAndThreeLines) {
  const Field F = field_of_order(7);
  const Plane P(F);
  const FieldFn f = example_function(ExampleKind::HalfPower, F);
  const auto r = analyze(P, redei_graph(P, f));
  EXPECT_EQ(r.size, 7 + 5);
  EXPECT_GE(r.t_max, 1);
  EXPECT_TRUE(r.redei_type);
  EXPECT_TRUE(r.minimal);
  const auto tl = analyze(P, three_lines(P));
  EXPECT_EQ(tl.size, 3 * 7);
  EXPECT_GE(tl.t_max, 2);
}

TEST(Blocking, BoundValues) {
  EXPECT_EQ(lower_bound({3, 2, 1, BoundModel::Bruen}).value, 13);
  EXPECT_EQ(lower_bound({2, 4, 1, BoundModel::Bruen}).value, 21);
  EXPECT_EQ(lower_bound({7, 1, 1, BoundModel::Bruen}).value, 11);
  EXPECT_EQ(lower_bound({7, 1, 1, BoundModel::PrimeOrder}).value, 12);
  EXPECT_EQ(lower_bound({5, 1, 1, BoundModel::PrimeOrder}).value, 9);
  EXPECT_EQ(lower_bound({5, 1, 2, BoundModel::DoublePrime}).value, 15);
  EXPECT_EQ(lower_bound({7, 1, 2, BoundModel::DoublePrime}).value, 20);
  EXPECT_EQ(lower_bound({2, 3, 1, BoundModel::TFold}).value, 13);
  EXPECT_THROW(lower_bound({3, 1, 2, BoundModel::DoublePrime}), Error);
  EXPECT_THROW(lower_bound({3, 2, 1, BoundModel::PrimeOrder}), Error);
  EXPECT_THROW(lower_bound({4, 1, 1, BoundModel::Bruen}), Error);
}

// Bruen: nontrivial blocking sets of PG(2,3) found by subset enumeration
// respect q + sqrt(q) + 1, and the smallest has 3(q+1)/2 = 6 points.
TEST(BlockingProperty, SmallPlaneOracle) {
  const Plane P(field_of_order(3));
  const auto sets = oracle::minimal_blocking(P, 1, 13, true);
  ASSERT_FALSE(sets.empty());
  int smallest = 99;
  for (auto m : sets) {
    std::vector<int> pts;
    for (int x = 0; x < P.size(); ++x)
      if (m >> x & 1) pts.push_back(x);
    const auto r = analyze(P, PointSet(pts));
    EXPECT_TRUE(r.minimal);
    EXPECT_GE(r.t_max, 1);
    EXPECT_GE(r.size, lower_bound({3, 1, 1, BoundModel::Bruen}).value);
    smallest = std::min(smallest, r.size);
  }
  EXPECT_EQ(smallest, 6);
}

// ---- arcs

TEST(Arcs, ConicIsAnOval) {
  for (int q : {3, 4, 5, 7, 8, 9, 16}) {
    const Plane P(field_of_order(q));
    const PointSet C = conic_points(P, standard_conic(P.field()));
    EXPECT_EQ(C.size(), q + 1);
    const auto r = arc_analyze(P, C, 2);
    EXPECT_TRUE(r.is_arc);
    EXPECT_EQ(r.n_max, 2);
    EXPECT_EQ(r.is_maximal, false);
    EXPECT_EQ(r.complete, q % 2 == 1);
    const auto form = is_conic(P, C);
    ASSERT_TRUE(form.has_value());
    EXPECT_EQ(zero_set(P, *form), C);
  }
}

TEST(Arcs, HyperovalFromNucleus) {
  for (int q : {2, 4, 8, 16}) {
    const Plane P(field_of_order(q));
    const PointSet C = conic_points(P, standard_conic(P.field()));
    const int nuc = nucleus(P, C);
    EXPECT_FALSE(C.contains(nuc));
    // for x^2 = yz the nucleus is (1:0:0)
    EXPECT_EQ(nuc, P.index_of({P.field().one(), P.field().zero(), P.field().zero()}));
    const auto r = arc_analyze(P, extend_to_hyperoval(P, C), 2);
    EXPECT_EQ(r.k, q + 2);
    EXPECT_TRUE(r.is_maximal);
    EXPECT_TRUE(r.complete);
  }
  const Plane odd(field_of_order(5));
  EXPECT_THROW(nucleus(odd, conic_points(odd, standard_conic(odd.field()))), Error);
}

TEST(Arcs, DegenerateAndWrongInputs) {
  const Plane P(field_of_order(5));
  // x^2: a double line
  EXPECT_FALSE(is_nondegenerate(P, form_of({1, 0, 0, 0, 0, 0})));
  EXPECT_THROW(conic_points(P, form_of({1, 0, 0, 0, 0, 0})), Error);
  // xy: a line pair
  EXPECT_FALSE(is_nondegenerate(P, form_of({0, 0, 0, 1, 0, 0})));
  EXPECT_THROW(is_conic(P, PointSet(std::vector<int>{0, 1})), Error);
  EXPECT_THROW(arc_analyze(P, PointSet(), 1), Error);
  // six points of a line plus nothing else are no conic
  std::vector<int> line(P.points_on(0));
  EXPECT_FALSE(is_conic(P, PointSet(line)).has_value());
}

TEST(ArcsProperty, ArcCountMatchesSubsetOracle) {
  const Plane P(field_of_order(3));
  for (int k = 3; k <= 5; ++k) {
    std::int64_t lib = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << P.size()); ++m) {
      if (__builtin_popcountll(m) != k) continue;
      std::vector<int> pts;
      for (int x = 0; x < P.size(); ++x)
        if (m >> x & 1) pts.push_back(x);
      if (arc_analyze(P, PointSet(pts), 2).is_arc) ++lib;
    }
    EXPECT_EQ(lib, oracle::count_arcs(P, k)) << k;
  }
  // 13 * 12 * 9 * 4 / 4! four-arcs in PG(2,3)
  EXPECT_EQ(oracle::count_arcs(P, 4), 234);
}

// ---- linear sets

TEST(LinearSets, SubspaceEnumerationCounts) {
  for (int q : {2, 3}) {
    const Field F = field_of_order(q);
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        std::int64_t count = 0;
        std::set<Subspace> seen;
        for_each_subspace(F, n, k, [&](const Subspace& W) {
          ++count;
          EXPECT_EQ(W.dim(), k);
          seen.insert(W);
        });
        EXPECT_EQ(count, oracle::gaussian(n, k, q)) << q << ' ' << n << ' ' << k;
        EXPECT_EQ(static_cast<std::int64_t>(seen.size()), count);
      }
  }
}

TEST(LinearSets, IntersectionDimensionMatchesVectorCount) {
  const Field F = field_of_order(2);
  std::vector<Subspace> all;
  for_each_subspace(F, 4, 2, [&](const Subspace& W) { all.push_back(W); });
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 2) {
      std::set<Row> a, common;
      all[i].for_each_nonzero(F, [&](const Row& v) { a.insert(v); });
      all[j].for_each_nonzero(F, [&](const Row& v) {
        if (a.count(v)) common.insert(v);
      });
      EXPECT_EQ(static_cast<std::int64_t>(common.size()), nt::ipow(2, intersection_dim(F, all[i], all[j])) - 1);
    }
}

TEST(LinearSets, SpreadPartitionsTheVectors) {
  for (auto [big, small] : {std::pair{4, 2}, {8, 2}, {9, 3}, {16, 4}}) {
    const Reduction R(field_of_order(big), field_of_order(small));
    EXPECT_EQ(R.s() * field_of_order(small).n(), field_of_order(big).n());
    std::int64_t covered = 0;
    for (int x = 0; x < R.spread_size(); ++x) {
      const Subspace E = R.spread_element(x);
      EXPECT_EQ(E.dim(), R.s());
      E.for_each_nonzero(R.small(), [&](const Row& v) {
        ++covered;
        EXPECT_EQ(R.point_of(v), x);
      });
    }
    EXPECT_EQ(covered, nt::ipow(small, R.dim()) - 1);
  }
  EXPECT_THROW(Reduction(field_of_order(9), field_of_order(2)), Error);
  EXPECT_THROW(Reduction(field_of_order(8), field_of_order(4)), Error);
}

TEST(LinearSets, ScatteredSubspaceGivesBaerSubplane) {
  const Reduction R(field_of_order(9), field_of_order(3));
  // W = GF(3)^3 inside GF(9)^3: the points with coordinates in GF(3)
  std::vector<Row> rows;
  const Field& F = R.big();
  for (int i = 0; i < 3; ++i) {
    Triple t{F.zero(), F.zero(), F.zero()};
    t[i] = F.one();
    rows.push_back(R.to_vector(t));
  }
  const Subspace W(R.small(), R.dim(), rows);
  EXPECT_TRUE(is_scattered(R, W));
  const PointSet B = B_of_W(R, W);
  EXPECT_EQ(B, baer_subplane(R.plane()));
  EXPECT_TRUE(linear_blocking_check(R.plane(), B, 3, 2));
  // a spread element is not scattered
  EXPECT_FALSE(is_scattered(R, R.spread_element(5)));
  EXPECT_EQ(B_of_W(R, R.spread_element(5)).size(), 1);
  EXPECT_EQ(max_scattered_dim(R, 6), 3);
  EXPECT_THROW(two_intersection_from_W(R, W), Error);
}

TEST(LinearSets, RandomScatteredIsReproducible) {
  const Reduction R(field_of_order(16), field_of_order(4));
  const auto a = random_scattered(R, 3, 99, 50), b = random_scattered(R, 3, 99, 50);
  ASSERT_TRUE(a.has_value());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*a, *b);
  EXPECT_TRUE(is_scattered(R, *a));
  EXPECT_EQ(B_of_W(R, *a).size(), R.small().q() * R.small().q() + R.small().q() + 1);
}
