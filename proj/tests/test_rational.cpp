#include <gtest/gtest.h>

#include "cake/rational.hpp"

using cake::make_rational;
using cake::parse_rational;
using cake::Rational;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational("-6/8"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, StoredInLowestTerms) {
  Rational r = parse_rational("10/4");
  EXPECT_EQ(r.get_num(), 5);
  EXPECT_EQ(r.get_den(), 2);
  Rational s = make_rational(3, -9);
  EXPECT_EQ(s.get_num(), -1);
  EXPECT_EQ(s.get_den(), 3);
}

TEST(Rational, RejectsInexactText) {
  for (const char* bad : {"0.5", "1e3", "", "/3", "3/", "a/b", "1/0", "1/-2", " 1/2", "--1"})
    EXPECT_THROW(parse_rational(bad), cake::DomainError) << bad;
}

TEST(Rational, FormatsAlwaysAsFraction) {
  EXPECT_EQ(cake::format_rational(Rational(1)), "1/1");
  EXPECT_EQ(cake::format_rational(Rational(0)), "0/1");
  EXPECT_EQ(cake::format_rational(make_rational(49, 100)), "49/100");
  EXPECT_EQ(cake::format_rational(make_rational(-2, 4)), "-1/2");
}

TEST(Rational, RoundTripsThroughText) {
  for (long p = -7; p <= 7; ++p)
    for (long q = 1; q <= 9; ++q) {
      Rational r = make_rational(p, q);
      EXPECT_EQ(parse_rational(cake::format_rational(r)), r);
    }
}

TEST(Rational, ArithmeticIsExact) {
  Rational third = make_rational(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  Rational x = make_rational(1, 10);
  Rational sum = 0;
  for (int k = 0; k < 10; ++k) sum += x;
  EXPECT_EQ(sum, Rational(1));
  EXPECT_THROW(make_rational(1, 0), cake::DomainError);
}
