#include <gtest/gtest.h>

#include "oplin/recurrence.hpp"
#include "test_systems.hpp"

using namespace oplin;

TEST(Recurrence, MonicSpecializationMapsCoefficients) {
    auto monic = monic_system<Rational>(SequenceSpec::affine(Rational(1), Rational(2)),
                                        SequenceSpec::affine(Rational(0), Rational(3)), 4, "m");
    const auto& sys = monic.system();
    EXPECT_TRUE(sys.is_monic());
    EXPECT_EQ(sys.alpha(0), Rational(0));
    EXPECT_EQ(sys.alpha(3), Rational(1));
    EXPECT_EQ(sys.beta(2), Rational(5));
    EXPECT_EQ(sys.gamma(1), monic.lambda(2));
    EXPECT_EQ(monic.lambda(0), Rational(0));
    auto back = as_monic(sys);
    EXPECT_EQ(back.b(4), monic.b(4));
    EXPECT_EQ(back.lambda(5), monic.lambda(5));
}

TEST(Recurrence, AlphaZeroIsForcedToZero) {
    CoefficientSystem<Rational> sys({Rational(9), Rational(1)}, {Rational(0), Rational(0)}, {Rational(1), Rational(1)});
    EXPECT_EQ(sys.alpha(0), Rational(0));
}

TEST(Recurrence, RangeIsEnforced) {
    auto sys = testkit::constant_system(Rational(1), Rational(0), Rational(1), 3);
    EXPECT_NO_THROW(sys.gamma(3));
    EXPECT_THROW(sys.gamma(4), RangeError);
    EXPECT_THROW(sys.require(4, "test"), RangeError);
    auto explicit_b = SequenceSpec::explicit_values({Scalar(Rational(1)), Scalar(Rational(2))}, 0);
    EXPECT_THROW(monic_system<Rational>(explicit_b, SequenceSpec::constant(Rational(1)), 5), RangeError);
    EXPECT_THROW(as_monic(testkit::constant_system(Rational(2), Rational(0), Rational(1), 3)), InputError);
}

TEST(Recurrence, NormSquaredIsGammaOverAlphaProduct) {
    auto sys = testkit::constant_system(Rational(2), Rational(1), Rational(3), 6);
    EXPECT_EQ(norm_squared(sys, 0), Rational(1));
    EXPECT_EQ(norm_squared(sys, 3), Rational(mpz_class(27), mpz_class(8)));
    auto sym = testkit::symbolic_monic<Polynomial>(4);
    EXPECT_EQ(norm_squared(sym.system(), 3).to_string(), "l1*l2*l3");
    EXPECT_THROW(norm_squared(testkit::symbolic_general(3), 1), DomainError);
}

TEST(Recurrence, PositiveDefiniteness) {
    EXPECT_TRUE(testkit::constant_system(Rational(1), Rational(0), Rational(1), 4).positive_definite());
    EXPECT_FALSE(testkit::constant_system(Rational(1), Rational(0), Rational(-1), 4).positive_definite());
}

TEST(Sequence, SymbolicValuesNeedSymbolicDomain) {
    auto s = SequenceSpec::symbolic(Family::b);
    EXPECT_EQ(s.at<Polynomial>(3).to_string(), "b3");
    EXPECT_THROW(s.at<Rational>(3), DomainError);
}
