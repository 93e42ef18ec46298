#include "coxcone/scalar.hpp"

#include <gtest/gtest.h>

#include "coxcone/error.hpp"

namespace coxcone {
namespace {

TEST(ScalarTest, RationalArithmetic) {
  const Scalar a = Scalar::fraction(1, 3);
  const Scalar b = Scalar::fraction(1, 6);
  EXPECT_EQ(a + b, Scalar::fraction(1, 2));
  EXPECT_EQ(a - b, Scalar::fraction(1, 6));
  EXPECT_EQ(a * b, Scalar::fraction(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ(-a, Scalar::fraction(-1, 3));
  EXPECT_TRUE(Scalar(4).is_integer());
  EXPECT_FALSE(a.is_integer());
}

TEST(ScalarTest, GoldenRatio) {
  const Scalar phi = Scalar::golden();
  EXPECT_EQ(phi * phi, phi + 1);
  EXPECT_EQ(phi.inverse(), phi - 1);
  EXPECT_FALSE(phi.is_rational());
  EXPECT_FALSE(phi.is_integer());
  EXPECT_EQ(phi.rational_part(), Rational(1, 2));
  EXPECT_EQ(phi.sqrt5_part(), Rational(1, 2));
}

TEST(ScalarTest, SignIsExactNearZero) {
  // 161² = 25921 and 5·72² = 25920, so the two differ by about 0.003.
  const Scalar tiny(Rational(161), Rational(-72));
  EXPECT_EQ(tiny.sign(), 1);
  EXPECT_EQ((-tiny).sign(), -1);
  EXPECT_EQ(Scalar(Rational(0), Rational(1)).sign(), 1);
  EXPECT_EQ(Scalar(Rational(-3), Rational(1)).sign(), -1);
  EXPECT_EQ(Scalar(Rational(3), Rational(-1)).sign(), 1);
  EXPECT_EQ(Scalar().sign(), 0);
  EXPECT_LT(Scalar::fraction(8, 5), Scalar::golden());
  EXPECT_LT(Scalar::golden(), Scalar::fraction(17, 10));
}

TEST(ScalarTest, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
  EXPECT_FALSE(arith(Scalar(1), Scalar(), ArithOp::kDiv).has_value());
  EXPECT_EQ(*arith(Scalar(1), Scalar(2), ArithOp::kAdd), Scalar(3));
}

TEST(ScalarTest, TextRoundTrip) {
  const Scalar samples[] = {Scalar(0),
                            Scalar(-7),
                            Scalar::fraction(2, 3),
                            Scalar::golden(),
                            Scalar::golden().inverse(),
                            Scalar(Rational(-3, 4), Rational(5, 6))};
  for (const auto& x : samples) {
    EXPECT_EQ(Scalar::parse(x.to_string()), x) << x.to_string();
  }
  EXPECT_EQ(Scalar::golden().to_string(), "(1+1r5)/2");
  EXPECT_EQ(Scalar::fraction(-2, 4).to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse(" 6/4 "), Scalar::fraction(3, 2));
  EXPECT_EQ(Scalar::parse("(1-1r5)/2"), Scalar(1) - Scalar::golden());
}

TEST(ScalarTest, ParseRejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "(1+2r5", "(1*2r5)/3", "3/"}) {
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
  }
}

TEST(ScalarTest, HashAgreesWithEquality) {
  const Scalar x = Scalar::fraction(2, 4);
  const Scalar y = Scalar::fraction(1, 2);
  EXPECT_EQ(x.hash(), y.hash());
}

}  // namespace
}  // namespace coxcone
