#include <gtest/gtest.h>

#include <random>

#include "oplin/rational.hpp"
#include "test_systems.hpp"

using oplin::Rational;
using oplin::Sign;

TEST(Rational, ParsesAndNormalizes) {
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse("-2/4").to_string(), "-1/2");
    EXPECT_EQ(Rational::parse("8/4").to_string(), "2");
    EXPECT_EQ(Rational::parse(" 7 ").to_string(), "7");
    EXPECT_TRUE(Rational::parse("10/5").is_integer());
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(Rational::parse("1.5"), oplin::InputError);
    EXPECT_THROW(Rational::parse("1/0"), oplin::InputError);
    EXPECT_THROW(Rational::parse(""), oplin::InputError);
    EXPECT_THROW(Rational::parse("x"), oplin::InputError);
}

TEST(Rational, ArithmeticAndSigns) {
    Rational a(mpz_class(1), mpz_class(3)), b(mpz_class(-1), mpz_class(6));
    EXPECT_EQ((a + b).to_string(), "1/6");
    EXPECT_EQ((a * b).to_string(), "-1/18");
    EXPECT_EQ((a / b).to_string(), "-2");
    EXPECT_EQ((a - a).sign(), Sign::zero);
    EXPECT_EQ(b.sign(), Sign::negative);
    EXPECT_TRUE(b < a);
    EXPECT_THROW(a / Rational(0), oplin::InputError);
    EXPECT_EQ(oplin::sign_char(Sign::negative), '-');
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Rational x = oplin::testkit::random_rational(rng, 9, false);
        Rational y = oplin::testkit::random_rational(rng, 9, false);
        Rational z = oplin::testkit::random_rational(rng, 9, false);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) + z, x + (y + z));
        if (!y.is_zero()) {
            EXPECT_EQ((x / y) * y, x);
        }
        EXPECT_EQ(Rational::parse(x.to_string()), x);
    }
}
