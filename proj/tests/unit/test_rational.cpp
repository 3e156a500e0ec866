#include <gtest/gtest.h>

#include <stdexcept>

#include "pqappell/rational.hpp"

using pqa::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-2/3"), Rational(-2, 3));
    EXPECT_EQ(Rational::parse("+4/6"), Rational(2, 3));
}

TEST(Rational, RejectsDecimalsAndGarbage) {
    for (const char* bad : {"0.5", "1e3", "", "/", "1/", "/2", "a", "1/2/3", "1 /2", "--1", "6/-4"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(Rational, PrintsLowestTermsAndBareIntegers) {
    EXPECT_EQ(Rational(4, 6).str(), "2/3");
    EXPECT_EQ(Rational(-6, 3).str(), "-2");
    EXPECT_EQ(Rational(0).str(), "0");
    EXPECT_EQ(Rational(5, -10).str(), "-1/2");
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 2), b(-2, 3);
    EXPECT_EQ(a + b, Rational(-1, 6));
    EXPECT_EQ(a - b, Rational(7, 6));
    EXPECT_EQ(a * b, Rational(-1, 3));
    EXPECT_EQ(a / b, Rational(-3, 4));
    EXPECT_EQ(-a, Rational(-1, 2));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, PowersIncludingNegativeExponents) {
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(-5).pow(0), Rational(1));
    EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Rational, OrderingAndPredicates) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_TRUE(Rational(3, 3).is_one());
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_FALSE(Rational(1, 4).is_integer());
    EXPECT_EQ(Rational(-7, 3).sign(), -1);
    EXPECT_EQ(Rational(-7, 3).abs(), Rational(7, 3));
}

TEST(Rational, Choose2) {
    EXPECT_EQ(pqa::choose2(0), 0);
    EXPECT_EQ(pqa::choose2(1), 0);
    EXPECT_EQ(pqa::choose2(5), 10);
}
