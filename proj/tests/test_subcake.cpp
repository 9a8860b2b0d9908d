#include <gtest/gtest.h>

#include <random>

#include "cake/subcake.hpp"

using cake::Interval;
using cake::make_rational;
using cake::Rational;
using cake::Subcake;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

Subcake two_blocks() { return Subcake{Interval(0, q(1, 4)), Interval(q(1, 2), q(3, 4))}; }

}  // namespace

TEST(Interval, RejectsOutsideUnit) {
  EXPECT_THROW(Interval(q(-1, 2), q(1, 2)), cake::DomainError);
  EXPECT_THROW(Interval(q(1, 2), q(3, 2)), cake::DomainError);
  EXPECT_THROW(Interval(q(2, 3), q(1, 3)), cake::DomainError);
  EXPECT_NO_THROW(Interval(q(1, 3), q(1, 3)));
}

TEST(Subcake, NormalizesOrderTouchingAndEmpty) {
  Subcake s{Interval(q(1, 2), q(3, 4)), Interval(0, q(1, 4)), Interval(q(1, 4), q(1, 3)), Interval(q(9, 10), q(9, 10))};
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.intervals()[0], Interval(0, q(1, 3)));
  EXPECT_EQ(s.intervals()[1], Interval(q(1, 2), q(3, 4)));
  EXPECT_EQ(s.length(), q(7, 12));
}

TEST(Subcake, OverlapsMerge) {
  Subcake s{Interval(0, q(1, 2)), Interval(q(1, 4), q(3, 4))};
  EXPECT_EQ(s, Subcake::between(0, q(3, 4)));
}

TEST(Subcake, SetOperations) {
  Subcake x = two_blocks();
  EXPECT_EQ(x.clip(q(1, 8), q(5, 8)), (Subcake{Interval(q(1, 8), q(1, 4)), Interval(q(1, 2), q(5, 8))}));
  EXPECT_EQ(Subcake::unit().minus(x), (Subcake{Interval(q(1, 4), q(1, 2)), Interval(q(3, 4), 1)}));
  EXPECT_EQ(x.unite(Subcake::unit().minus(x)), Subcake::unit());
  EXPECT_TRUE(x.disjoint_from(Subcake::unit().minus(x)));
  EXPECT_EQ(x.intersect(Subcake::between(q(1, 5), q(3, 5))),
            (Subcake{Interval(q(1, 5), q(1, 4)), Interval(q(1, 2), q(3, 5))}));
  EXPECT_TRUE(Subcake{}.empty());
  EXPECT_THROW(Subcake{}.min(), cake::DomainError);
}

TEST(Subcake, LocateUsesClosures) {
  Subcake x = two_blocks();
  EXPECT_EQ(x.locate(q(1, 4)), 0u);
  EXPECT_EQ(x.locate(q(1, 2)), 1u);
  EXPECT_EQ(x.locate(q(3, 8)), x.size());
}

TEST(Subcake, ToString) { EXPECT_EQ(two_blocks().to_string(), "[0/1, 1/4] u [1/2, 3/4]"); }

// Random pairs of unions of intervals on a 1/24 grid: set algebra agrees
// with membership of every grid cell.
TEST(Subcake, AlgebraMatchesCellMembership) {
  std::mt19937_64 rng(11);
  auto random_subcake = [&] {
    std::vector<Interval> parts;
    for (int k = 0; k < 3; ++k) {
      long a = static_cast<long>(rng() % 25), b = static_cast<long>(rng() % 25);
      if (a > b) std::swap(a, b);
      parts.emplace_back(q(a, 24), q(b, 24));
    }
    return Subcake(parts);
  };
  auto in = [](const Subcake& s, const Rational& t) {
    for (const auto& iv : s.intervals())
      if (iv.lo < t && t < iv.hi) return true;
    return false;
  };
  for (int trial = 0; trial < 300; ++trial) {
    Subcake a = random_subcake(), b = random_subcake();
    Subcake u = a.unite(b), i = a.intersect(b), m = a.minus(b);
    for (long c = 0; c < 24; ++c) {
      Rational mid = q(2 * c + 1, 48);
      EXPECT_EQ(in(u, mid), in(a, mid) || in(b, mid));
      EXPECT_EQ(in(i, mid), in(a, mid) && in(b, mid));
      EXPECT_EQ(in(m, mid), in(a, mid) && !in(b, mid));
    }
    EXPECT_EQ(a.length(), i.length() + m.length());
    for (std::size_t k = 1; k < u.size(); ++k) EXPECT_LT(u.intervals()[k - 1].hi, u.intervals()[k].lo);
  }
}
