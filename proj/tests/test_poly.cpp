#include <gtest/gtest.h>

#include <random>

#include "fingeo/poly.hpp"

using namespace fingeo;

namespace {

Poly random_poly(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % F.q())};
  if (c.back().is_zero()) c.back() = F.one();
  return Poly(F, c);
}

}  // namespace

TEST(Poly, FromRootsEvaluatesAsProduct) {
  std::mt19937_64 rng(7);
  for (int q : {5, 8, 9, 16}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> roots(1 + rng() % 7);
      for (auto& r : roots) r = Elem{static_cast<std::uint32_t>(rng() % q)};
      const Poly f = Poly::from_roots(F, roots);
      EXPECT_EQ(f.deg(), static_cast<int>(roots.size()));
      for (Elem x : F.elements()) {
        Elem prod = F.one();
        for (Elem r : roots) prod = F.mul(prod, F.sub(x, r));
        EXPECT_EQ(f.eval(x), prod);
      }
    }
  }
}

TEST(Poly, DivisionIdentity) {
  std::mt19937_64 rng(11);
  for (int q : {3, 4, 7, 9}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 50; ++trial) {
      const Poly a = random_poly(F, static_cast<int>(rng() % 12), rng);
      const Poly b = random_poly(F, static_cast<int>(rng() % 6), rng);
      const Poly quo = a / b, rem = a % b;
      EXPECT_EQ(quo * b + rem, a);
      EXPECT_LT(rem.deg(), b.deg());
    }
  }
}

TEST(Poly, GcdDividesBoth) {
  std::mt19937_64 rng(13);
  const Field F = field_of_order(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly common = random_poly(F, 2, rng);
    const Poly a = common * random_poly(F, 3, rng), b = common * random_poly(F, 4, rng);
    const Poly g = Poly::gcd(a, b);
    EXPECT_TRUE(g.divides(a));
    EXPECT_TRUE(g.divides(b));
    EXPECT_TRUE(common.divides(g));
  }
}

TEST(Poly, FieldPolynomialVanishesEverywhere) {
  for (int q : {2, 4, 5, 8, 9, 25}) {
    const Field F = field_of_order(q);
    const Poly f = Poly::field_poly(F);
    EXPECT_EQ(f.deg(), q);
    for (Elem x : F.elements()) EXPECT_TRUE(f.eval(x).is_zero());
    EXPECT_TRUE(is_fully_reducible(f));
  }
}

TEST(Poly, RootMultiplicities) {
  const Field F = field_of_order(7);
  // (X-1)^3 (X-2) (X-5)^2
  const Poly f = Poly::from_roots(F, {Elem{1}, Elem{1}, Elem{1}, Elem{2}, Elem{5}, Elem{5}});
  const auto r = roots_with_multiplicity(f);
  EXPECT_EQ(r, (std::map<Elem, int>{{Elem{1}, 3}, {Elem{2}, 1}, {Elem{5}, 2}}));
  const auto split = radical_split(f);
  EXPECT_EQ(split.s, Poly::from_roots(F, {Elem{1}, Elem{2}, Elem{5}}));
  EXPECT_EQ(split.s * split.r, f);
  EXPECT_THROW(roots_with_multiplicity(Poly(F)), Error);
}

TEST(Poly, LacunarySplitRecombines) {
  std::mt19937_64 rng(17);
  for (int q : {4, 5, 9}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly f = random_poly(F, q + static_cast<int>(rng() % q), rng);
      const auto p = lacunary_split(f);
      EXPECT_EQ(Poly::monomial(F, F.one(), q) * p.g + p.h, f);
      EXPECT_LT(p.h.deg(), q);
    }
    EXPECT_THROW(lacunary_split(Poly::monomial(F, F.one(), 2 * q)), Error);
  }
}

TEST(Poly, PthPowerIndex) {
  const Field F = field_of_order(9);
  // X^9 - X^3 + X^0: exponents multiples of 3^1 only
  const Poly f(F, {F.one(), F.zero(), F.zero(), F.neg(F.one()), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.one()});
  EXPECT_EQ(f.pth_power_index(), 1);
  EXPECT_TRUE(f.in_powers_of_x(3));
  EXPECT_FALSE(f.in_powers_of_x(9));
}

TEST(Poly, ParseAndPrint) {
  const Field F = field_of_order(5);
  const Poly f = Poly::parse(F, "1,0,3");
  EXPECT_EQ(f.deg(), 2);
  EXPECT_EQ(f.coeff(2).rep, 3u);
  EXPECT_EQ(Poly::parse(F, f.to_string()), f);
  EXPECT_THROW(Poly::parse(F, "1,x"), Error);
}

// Every fully reducible X^q + g with vanishing X^(q-1) term falls in some branch.
TEST(PolyProperty, TrichotomyCoversFullyReducible) {
  std::mt19937_64 rng(19);
  for (int q : {4, 5, 7, 8, 9}) {
    const Field F = field_of_order(q);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Elem> roots(q);
      Elem sum = F.zero();
      for (int i = 0; i + 1 < q; ++i) {
        roots[i] = Elem{static_cast<std::uint32_t>(rng() % q)};
        sum = F.add(sum, roots[i]);
      }
      roots[q - 1] = F.neg(sum);
      const Poly f = Poly::from_roots(F, roots);
      ASSERT_TRUE(f.coeff(q - 1).is_zero());
      EXPECT_FALSE(classify_xq_plus_g(f).empty()) << "q=" << q << " f=" << f.to_string();
    }
  }
}
