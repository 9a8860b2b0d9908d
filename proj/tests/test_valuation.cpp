#include <gtest/gtest.h>

#include "cake/instances.hpp"
#include "cake/valuation.hpp"
#include "oracles.hpp"

using cake::DensitySegment;
using cake::Interval;
using cake::make_rational;
using cake::Rational;
using cake::Subcake;
using cake::Valuation;

namespace {
Rational q(long p, long d) { return make_rational(p, d); }
}

TEST(Valuation, RejectsWrongMass) {
  EXPECT_THROW(Valuation({{Interval(0, 1), Rational(2)}}), cake::DomainError);
  EXPECT_THROW(Valuation({{Interval(0, q(1, 2)), Rational(1)}}), cake::DomainError);
  EXPECT_THROW(Valuation({}), cake::DomainError);
}

TEST(Valuation, RejectsOverlapAndNegativeDensity) {
  EXPECT_THROW(Valuation({{Interval(0, q(3, 4)), Rational(1)}, {Interval(q(1, 2), 1), Rational(1)}}), cake::DomainError);
  EXPECT_THROW(Valuation({{Interval(0, q(1, 2)), Rational(3)}, {Interval(q(1, 2), 1), Rational(-1)}}), cake::DomainError);
}

TEST(Valuation, CanonicalFormDecidesEquality) {
  Valuation split({{Interval(q(1, 2), 1), Rational(1)}, {Interval(0, q(1, 2)), Rational(1)}});
  EXPECT_EQ(split, Valuation::lebesgue());
  Valuation with_zero({{Interval(0, q(1, 4)), Rational(0)}, {Interval(q(1, 4), 1), q(4, 3)}});
  EXPECT_EQ(with_zero, Valuation::uniform_on(q(1, 4), 1));
  EXPECT_EQ(with_zero.segments().size(), 1u);
  EXPECT_FALSE(Valuation::lebesgue() == Valuation::uniform_on(0, q(1, 2)));
}

TEST(Valuation, MeasureExamples) {
  EXPECT_EQ(Valuation::lebesgue().measure(0, q(1, 2)), q(1, 2));
  Valuation front = Valuation::uniform_on(0, q(1, 2));
  EXPECT_EQ(front.measure(q(1, 4), q(3, 4)), q(1, 2));
  auto cx = cake::even_paz_counterexample().valuations();
  EXPECT_EQ(cx[2].measure(q(1, 2), q(51, 100)), q(1, 4));
  EXPECT_EQ(Valuation::lebesgue().measure(Subcake{Interval(0, q(1, 4)), Interval(q(1, 2), q(3, 4))}), q(1, 2));
}

TEST(Valuation, LeftmostPointExamples) {
  EXPECT_EQ(Valuation::lebesgue().leftmost_point(0, q(1, 3)), q(1, 3));
  auto ld = cake::last_diminisher_counterexample().valuations();
  EXPECT_EQ(ld[2].leftmost_point(0, q(1, 3)), q(2, 5));
  Valuation back = Valuation::uniform_on(q(1, 2), 1);
  EXPECT_EQ(back.leftmost_point(0, 0), Rational(0));
  // Density vanishes on [0, 1/2): the smallest point carrying 1/4 is 5/8.
  EXPECT_EQ(back.leftmost_point(0, q(1, 4)), q(5, 8));
  EXPECT_THROW(back.leftmost_point(q(3, 4), q(3, 4)), cake::InfeasibleCut);
  EXPECT_THROW(back.leftmost_point(0, q(-1, 4)), cake::DomainError);
}

TEST(Valuation, AgreesWithCdfOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Valuation v = cake::random_valuation(rng, 1 + trial % 6);
    oracle::Cdf F(v);
    EXPECT_EQ(F(1), Rational(1));
    for (int k = 0; k < 5; ++k) {
      Rational a = q(static_cast<long>(rng() % 31), 30), b = q(static_cast<long>(rng() % 31), 30);
      if (a > b) std::swap(a, b);
      EXPECT_EQ(v.measure(a, b), F.measure(a, b));
      Rational mass = F.measure(a, 1) * q(static_cast<long>(rng() % 8), 7);
      auto expected = F.leftmost(a, mass);
      ASSERT_TRUE(expected);
      EXPECT_EQ(v.leftmost_point(a, mass), *expected);
    }
  }
}
