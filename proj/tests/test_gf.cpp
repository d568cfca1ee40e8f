#include <gtest/gtest.h>

#include "fingeo/gf.hpp"

using namespace fingeo;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81};

}  // namespace

TEST(Field, PrimeFieldMatchesIntegerArithmetic) {
  for (int p : {2, 3, 5, 7, 11, 13, 31}) {
    const Field F = field_of_order(p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const Elem x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
        EXPECT_EQ(F.add(x, y).rep, static_cast<std::uint32_t>((a + b) % p));
        EXPECT_EQ(F.mul(x, y).rep, static_cast<std::uint32_t>((a * b) % p));
        EXPECT_EQ(F.sub(x, y).rep, static_cast<std::uint32_t>((a - b + p) % p));
      }
  }
}

TEST(Field, Gf4HandTable) {
  // x^2 + x + 1; reps 2 = x, 3 = x + 1
  const Field F = Field::make(2, 2, std::vector<int>{1, 1, 1});
  EXPECT_EQ(F.mul(Elem{2}, Elem{2}).rep, 3u);
  EXPECT_EQ(F.mul(Elem{2}, Elem{3}).rep, 1u);
  EXPECT_EQ(F.mul(Elem{3}, Elem{3}).rep, 2u);
  EXPECT_EQ(F.add(Elem{2}, Elem{3}).rep, 1u);
}

TEST(Field, DefaultIrreducibleIsLexSmallest) {
  EXPECT_EQ(field_of_order(4).irr(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(field_of_order(9).irr(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(field_of_order(8).irr(), (std::vector<int>{1, 1, 0, 1}));
}

TEST(Field, Axioms) {
  for (int q : kOrders) {
    const Field F = field_of_order(q);
    const auto E = F.elements();
    ASSERT_EQ(E.size(), static_cast<std::size_t>(q));
    const std::size_t step = q > 16 ? 7 : 1;
    for (std::size_t i = 0; i < E.size(); i += step)
      for (std::size_t j = 0; j < E.size(); j += step) {
        const Elem a = E[i], b = E[j];
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (std::size_t k = 0; k < E.size(); k += 5 * step) {
          const Elem c = E[k];
          EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
          EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        }
      }
    for (Elem a : E) {
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      if (a != F.zero()) {
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one()) << "q=" << q << " a=" << a.rep;
      }
    }
  }
}

TEST(Field, PrimitiveElementHasFullOrder) {
  for (int q : kOrders) {
    const Field F = field_of_order(q);
    Elem x = F.one();
    int order = 0;
    do {
      x = F.mul(x, F.primitive());
      ++order;
    } while (x != F.one());
    EXPECT_EQ(order, q - 1) << "q=" << q;
    EXPECT_EQ(F.pow(F.primitive(), q - 1), F.one());
  }
}

TEST(Field, FrobeniusIsAnAutomorphism) {
  for (int q : kOrders) {
    const Field F = field_of_order(q);
    for (Elem a : F.elements())
      for (Elem b : F.elements()) {
        if (b.rep % 3) continue;
        EXPECT_EQ(F.frob_pow(F.add(a, b), 1), F.add(F.frob_pow(a, 1), F.frob_pow(b, 1)));
        EXPECT_EQ(F.frob_pow(F.mul(a, b), 1), F.mul(F.frob_pow(a, 1), F.frob_pow(b, 1)));
      }
    for (Elem a : F.elements()) EXPECT_EQ(F.frob_pow(a, F.n()), a);
  }
}

TEST(Field, TraceAndNormLandInSubfield) {
  for (int q : {4, 8, 9, 16, 27, 64, 81}) {
    const Field F = field_of_order(q);
    for (int e = 1; e < F.n(); ++e) {
      if (F.n() % e) continue;
      EXPECT_EQ(F.subfield_elements(e).size(), static_cast<std::size_t>(nt::ipow(F.p(), e)));
      for (Elem a : F.elements()) {
        EXPECT_TRUE(F.in_subfield(e, F.trace_to(e, a)));
        EXPECT_TRUE(F.in_subfield(e, F.norm_to(e, a)));
        const Elem b = F.primitive();
        EXPECT_EQ(F.trace_to(e, F.add(a, b)), F.add(F.trace_to(e, a), F.trace_to(e, b)));
        EXPECT_EQ(F.norm_to(e, F.mul(a, b)), F.mul(F.norm_to(e, a), F.norm_to(e, b)));
      }
      // the trace is onto: every subfield value is taken q/p^e times
      std::map<std::uint32_t, int> hits;
      for (Elem a : F.elements()) ++hits[F.trace_to(e, a).rep];
      EXPECT_EQ(hits.size(), F.subfield_elements(e).size());
    }
  }
}

TEST(Field, Errors) {
  EXPECT_THROW(field_of_order(10), Error);
  EXPECT_THROW(Field::make(2, 2, std::vector<int>{1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
  try {
    field_of_order(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
}

TEST(Field, ParseRoundTrip) {
  for (int q : {8, 9, 25}) {
    const Field F = field_of_order(q);
    const Field G = Field::parse(F.to_string());
    EXPECT_EQ(G.q(), F.q());
    EXPECT_EQ(G.irr(), F.irr());
  }
}
