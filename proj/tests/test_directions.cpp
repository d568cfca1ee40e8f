#include <gtest/gtest.h>

#include <random>

#include "fingeo/directions.hpp"
#include "fingeo/redei.hpp"

using namespace fingeo;

namespace {

/// Slopes m for which x -> f(x) - m x is not injective.
std::vector<Elem> slow_directions(const FieldFn& f) {
  const Field& F = f.field;
  std::vector<Elem> out;
  for (Elem m : F.elements()) {
    std::vector<char> hit(F.q(), 0);
    bool repeat = false;
    for (Elem x : F.elements()) {
      auto& h = hit[F.sub(f(x), F.mul(m, x)).rep];
      if (h) repeat = true;
      h = 1;
    }
    if (repeat) out.push_back(m);
  }
  return out;
}

FieldFn random_fn(const Field& F, std::mt19937_64& rng) {
  return FieldFn::from(F, [&](Elem x) { return x.is_zero() ? F.zero() : Elem{static_cast<std::uint32_t>(rng() % F.q())}; });
}

}  // namespace

TEST(Directions, MatchSlowOracle) {
  std::mt19937_64 rng(23);
  for (int q : {3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const FieldFn f = random_fn(F, rng);
      EXPECT_EQ(directions_of(f).dirs, slow_directions(f));
    }
  }
}

TEST(Directions, StandardExamples) {
  // x^((q+1)/2): N = (q+3)/2
  for (int q : {5, 7, 9, 11, 13, 25, 27}) {
    const Field F = field_of_order(q);
    const auto r = directions_of(example_function(ExampleKind::HalfPower, F));
    EXPECT_EQ(r.N, (q + 3) / 2) << q;
    EXPECT_EQ(r.e, 0);
    EXPECT_TRUE(r.cases.count(1));
  }
  // x^(p^e): N = (q-1)/(p^e-1); trace to GF(p^e): N = q/p^e + 1
  for (int q : {4, 8, 9, 16, 27, 64, 81}) {
    const Field F = field_of_order(q);
    for (int e = 1; e < F.n(); ++e) {
      if (F.n() % e) continue;
      const int pe = static_cast<int>(nt::ipow(F.p(), e));
      const auto fr = directions_of(example_function(ExampleKind::FrobPower, F, e));
      EXPECT_EQ(fr.N, (q - 1) / (pe - 1)) << q << ' ' << e;
      const auto tr = directions_of(example_function(ExampleKind::SubfieldTrace, F, e));
      EXPECT_EQ(tr.N, q / pe + 1) << q << ' ' << e;
      EXPECT_EQ(tr.e, e);
      EXPECT_EQ(tr.linear_over, std::optional<int>(e));
    }
  }
  EXPECT_THROW(example_function(ExampleKind::HalfPower, field_of_order(8)), Error);
  EXPECT_THROW(example_function(ExampleKind::FrobPower, field_of_order(8), 2), Error);
}

TEST(Directions, LinearFunctionDeterminesOneDirection) {
  const Field F = field_of_order(9);
  const FieldFn f = FieldFn::from(F, [&](Elem x) { return F.mul(F.primitive(), x); });
  const auto r = directions_of(f);
  EXPECT_EQ(r.N, 1);
  EXPECT_EQ(r.e, F.n());
  EXPECT_TRUE(r.cases.count(4));
}

TEST(Directions, IntervalsAreRightClosed) {
  const Field F = field_of_order(9);
  // e = 1: (1 + 8/4, 8/2] = (3, 4]
  const auto at4 = check_redei_intervals(F, 4);
  ASSERT_EQ(at4.size(), 1u);
  EXPECT_EQ(at4[0].e, 1);
  EXPECT_FALSE(at4[0].strict);
  EXPECT_TRUE(check_redei_intervals(F, 3).empty());
  EXPECT_THROW(check_redei_intervals(F, 1), Error);
}

TEST(Directions, NormalizedRequiredForLinearityVerdict) {
  const Field F = field_of_order(9);
  const FieldFn f = FieldFn::from(F, [&](Elem x) { return F.add(x, F.one()); });
  EXPECT_THROW(linearity_verdict(f), Error);
  EXPECT_NO_THROW(linearity_verdict(f.normalized()));
}

TEST(Directions, TableRoundTrip) {
  const Field F = field_of_order(7);
  const FieldFn f = example_function(ExampleKind::HalfPower, F);
  EXPECT_EQ(FieldFn::parse(F, f.to_string()).table, f.table);
  EXPECT_THROW(FieldFn::parse(F, "1,2,3"), Error);
}

// Property: every normalized function falls in some case of the classification.
TEST(DirectionsProperty, ClassificationCoversRandomFunctions) {
  std::mt19937_64 rng(29);
  for (int q : {5, 7, 8, 9, 16, 25, 27}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 200; ++trial) {
      const FieldFn f = random_fn(F, rng);
      const auto r = directions_of(f);
      EXPECT_FALSE(r.cases.empty()) << "q=" << q << " N=" << r.N << " e=" << r.e;
    }
  }
}

TEST(Redei, SpecializationMatchesDirectProduct) {
  std::mt19937_64 rng(31);
  for (int q : {4, 5, 7, 9}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 5; ++trial) {
      const FieldFn f = random_fn(F, rng);
      const RedeiPoly R = redei_poly_of_function(f);
      EXPECT_EQ(R.degree(), q);
      for (Elem y : F.elements()) {
        // prod_w (X - w y + f(w)) has roots w y - f(w)
        std::vector<Elem> roots;
        for (Elem w : F.elements()) roots.push_back(F.sub(F.mul(w, y), f(w)));
        EXPECT_EQ(R.specialize(y), Poly::from_roots(F, roots));
      }
    }
  }
}

// Property: off the direction set R(X, y) = X^q - X, which forces r_i = 0 for
// i <= q - N, and deg(R(X, y) - X^q) <= N - 1 on the direction set.
TEST(RedeiProperty, VanishingRange) {
  std::mt19937_64 rng(37);
  for (int q : {5, 7, 8, 9}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const FieldFn f = random_fn(F, rng);
      const auto rep = directions_of(f);
      const RedeiPoly R = redei_poly_of_function(f);
      for (Elem y : F.elements())
        if (!std::binary_search(rep.dirs.begin(), rep.dirs.end(), y)) {
          EXPECT_EQ(R.specialize(y), Poly::field_poly(F));
        }
      const auto vp = vanishing_profile(R, rep.dirs);
      EXPECT_TRUE(vp.degree_drop);
      EXPECT_TRUE(vp.complement_range_holds);
      EXPECT_LE(vp.max_g_degree, vp.g_degree_bound);
    }
  }
}

TEST(Redei, BlockingSetInStandardPosition) {
  const Field F = field_of_order(9);
  const Plane P(F);
  // Redei-type blocking set: graph of x^5 plus its directions at infinity
  const FieldFn f = example_function(ExampleKind::HalfPower, F);
  std::vector<int> pts;
  for (Elem x : F.elements()) pts.push_back(P.index_of({x, f(x), F.one()}));
  for (Elem m : directions_of(f).dirs) pts.push_back(P.index_of({F.one(), m, F.zero()}));
  const PointSet B(pts);
  const auto br = blocking_redei(P, B);
  EXPECT_EQ(br.d, B.size() - 10);
  EXPECT_TRUE(br.divisibility_ok);
  EXPECT_TRUE(br.vanishing_ok);
  EXPECT_TRUE(br.shape_ok);
  // each point's tangent count is recorded
  EXPECT_EQ(tangent_profile(P, B).size(), static_cast<std::size_t>(B.size()));
  EXPECT_THROW(blocking_redei(P, PointSet(std::vector<int>{0, 1, 2})), Error);
}
