#include <gtest/gtest.h>

#include "cxorder/error.hpp"
#include "cxorder/rational.hpp"
#include "generators.hpp"

using cxorder::ErrorKind;
using cxorder::ParseError;
using cxorder::Rational;

TEST(Rational, CanonicalForm) {
    const Rational r(6, -8);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, ZeroDenominatorIsBadParameter) {
    try {
        Rational(1, 0);
        FAIL();
    } catch (const cxorder::Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadParameter);
    }
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("+5"), Rational(5));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsFloatsAndJunk) {
    for (const char* bad : {"0.5", "1/0", "", "/3", "1/-2", "1e3", "1 /2", "abc"}) {
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
    }
}

TEST(Rational, ParseErrorCarriesPosition) {
    try {
        Rational::parse("12.5");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
    }
}

TEST(Rational, ArithmeticAndOrdering) {
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_THROW(a / Rational(), cxorder::Error);
}

TEST(Rational, Helpers) {
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_EQ(cxorder::positive_part(Rational(-1)), Rational());
    EXPECT_EQ(cxorder::positive_part(Rational(3, 2)), Rational(3, 2));
    EXPECT_EQ(cxorder::binomial(5, 2), Rational(10));
    EXPECT_EQ(cxorder::binomial(3, 5), Rational());
    EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
    EXPECT_EQ(Rational(-2, 3).decimal(2), "-0.66");  // truncated toward zero
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    testsupport::Gen g(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.small_rational(9, 7), b = g.small_rational(9, 7), c = g.small_rational(9, 7);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}
