#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "oplin/oplin.hpp"

namespace oplin::testkit {

/// Random rational with numerator in [-span, span] (or [1, span] when
/// positive) and denominator in [1, 4].
inline Rational random_rational(std::mt19937_64& rng, int span, bool positive) {
    std::uniform_int_distribution<int> num(positive ? 1 : -span, span), den(1, 4);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Random positive definite system over 0..top.
inline CoefficientSystem<Rational> random_system(std::mt19937_64& rng, unsigned top, bool monic = false,
                                                 const std::string& label = "random") {
    std::vector<Scalar> a, b, g;
    for (unsigned i = 1; i <= top; ++i) a.emplace_back(monic ? Rational(1) : random_rational(rng, 5, true));
    for (unsigned i = 0; i <= top; ++i) b.emplace_back(random_rational(rng, 5, false));
    for (unsigned i = 0; i <= top; ++i) g.emplace_back(random_rational(rng, 5, true));
    return CoefficientSystem<Rational>::from_specs(SequenceSpec::explicit_values(a, 1), SequenceSpec::explicit_values(b, 0),
                                                   SequenceSpec::explicit_values(g, 0), top, label);
}

inline MonicSystem<Rational> random_monic(std::mt19937_64& rng, unsigned top) {
    return as_monic(random_system(rng, top, true, "random monic"));
}

template <ExactRing R>
MonicSystem<R> symbolic_monic(unsigned top) {
    return monic_system<R>(SequenceSpec::symbolic(Family::b), SequenceSpec::symbolic(Family::lambda), top,
                           "symbolic");
}

inline CoefficientSystem<Polynomial> symbolic_general(unsigned top, bool prime = false) {
    using S = SequenceSpec;
    if (prime)
        return CoefficientSystem<Polynomial>::from_specs(S::symbolic(Family::alpha_prime), S::symbolic(Family::beta_prime),
                                                         S::symbolic(Family::gamma_prime), top, "symbolic prime");
    return CoefficientSystem<Polynomial>::from_specs(S::symbolic(Family::alpha), S::symbolic(Family::beta),
                                                     S::symbolic(Family::gamma), top, "symbolic");
}

inline CoefficientSystem<Rational> constant_system(Rational a, Rational b, Rational g, unsigned top,
                                                   const std::string& label = "constant") {
    return CoefficientSystem<Rational>::from_specs(SequenceSpec::constant(a), SequenceSpec::constant(b),
                                                   SequenceSpec::constant(g), top, label);
}

/// Moments by brute force over all step sequences: x p_j contributes
/// beta_j (H), alpha_{j+1} (U) and gamma_{j-1} (D).
inline Rational brute_force_moment(unsigned n, const CoefficientSystem<Rational>& sys) {
    std::function<Rational(unsigned, unsigned)> walk = [&](unsigned left, unsigned level) -> Rational {
        if (left == 0) return level == 0 ? Rational(1) : Rational(0);
        if (level > left) return Rational(0);
        Rational total = sys.beta(level) * walk(left - 1, level);
        total = total + sys.alpha(level + 1) * walk(left - 1, level + 1);
        if (level > 0) total = total + sys.gamma(level - 1) * walk(left - 1, level - 1);
        return total;
    };
    return walk(n, 0);
}

/// Motzkin numbers from M_k = M_{k-1} + sum_i M_i M_{k-2-i}.
inline std::vector<unsigned long long> motzkin_numbers(unsigned count) {
    std::vector<unsigned long long> m(count, 0);
    for (unsigned k = 0; k < count; ++k) {
        if (k < 2) {
            m[k] = 1;
            continue;
        }
        m[k] = m[k - 1];
        for (unsigned i = 0; i + 2 <= k; ++i) m[k] += m[i] * m[k - 2 - i];
    }
    return m;
}

}  // namespace oplin::testkit

namespace oplin::testkit {

/// Monic system with b and lambda nondecreasing and lambda > 0.
inline MonicSystem<Rational> random_monotone_monic(std::mt19937_64& rng, unsigned top) {
    std::vector<Rational> b{random_rational(rng, 4, false)}, lambda{Rational(0), random_rational(rng, 4, true)};
    std::bernoulli_distribution flat(0.25);
    for (unsigned i = 1; i <= top; ++i)
        b.push_back(flat(rng) ? b.back() : b.back() + random_rational(rng, 4, true));
    for (unsigned i = 2; i <= top + 1; ++i)
        lambda.push_back(flat(rng) ? lambda.back() : lambda.back() + random_rational(rng, 4, true));
    return MonicSystem<Rational>(std::move(b), std::move(lambda), "random monotone");
}

}  // namespace oplin::testkit
