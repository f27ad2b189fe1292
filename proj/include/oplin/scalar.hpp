#pragma once

#include <concepts>
#include <string>
#include <variant>

#include "oplin/errors.hpp"
#include "oplin/polynomial.hpp"
#include "oplin/rational.hpp"

namespace oplin {

/// Exact commutative ring used as the coefficient domain of every algorithm.
template <class R>
concept ExactRing = std::regular<R> && requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool symbolic = false;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw InputError("division by zero coefficient");
        return a / b;
    }
};

template <>
struct ring_traits<Polynomial> {
    static constexpr bool symbolic = true;
    static Polynomial from_rational(const Rational& q) { return Polynomial::from_rational(q); }
    /// Division is representable only by a nonzero integer constant dividing
    /// every coefficient.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw InputError("division by zero coefficient");
        if (!b.is_constant())
            throw DomainError("division by non-constant polynomial " + b.to_string() +
                              " is not representable in the symbolic domain");
        mpz_class d = b.constant_value();
        Polynomial r;
        for (const auto& [m, c] : a.terms()) {
            if (c % d != 0)
                throw DomainError("division by " + d.get_str() + " leaves a non-integral coefficient");
            r.add_term(m, c / d);
        }
        return r;
    }
};

template <ExactRing R>
R exact_div(const R& a, const R& b) {
    return ring_traits<R>::exact_div(a, b);
}

/// A value in exactly one of the two exact domains.
class Scalar {
public:
    Scalar() : v_(Rational{}) {}
    Scalar(Rational q) : v_(std::move(q)) {}    // NOLINT(google-explicit-constructor)
    Scalar(Polynomial p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

    bool is_symbolic() const { return std::holds_alternative<Polynomial>(v_); }
    const Rational& rational() const {
        if (is_symbolic()) throw DomainError("expected a rational, got a symbolic value");
        return std::get<Rational>(v_);
    }
    const Polynomial& polynomial() const {
        if (!is_symbolic()) throw DomainError("expected a symbolic value, got a rational");
        return std::get<Polynomial>(v_);
    }

    /// rational text if it parses as one, otherwise a polynomial
    static Scalar parse(std::string_view text) {
        try {
            return Rational::parse(text);
        } catch (const InputError&) {
            return Polynomial::parse(text);
        }
    }

    std::string to_string() const {
        return std::visit([](const auto& x) { return x.to_string(); }, v_);
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    template <class F>
    friend Scalar combine(const Scalar& a, const Scalar& b, F op) {
        if (a.is_symbolic() != b.is_symbolic())
            throw InputError("scalar domain mismatch: " + a.to_string() + " vs " + b.to_string());
        if (a.is_symbolic()) return Scalar(op(a.polynomial(), b.polynomial()));
        return Scalar(op(a.rational(), b.rational()));
    }

private:
    std::variant<Rational, Polynomial> v_;
};

inline Scalar ring_add(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
inline Scalar ring_mul(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
inline Scalar ring_neg(const Scalar& a) {
    if (a.is_symbolic()) return Scalar(-a.polynomial());
    return Scalar(-a.rational());
}

inline Sign scalar_sign(const Scalar& a) {
    if (a.is_symbolic()) throw DomainError("sign of a symbolic value is undefined");
    return a.rational().sign();
}
inline Sign scalar_sign(const Rational& a) { return a.sign(); }

inline bool poly_equal(const Polynomial& a, const Polynomial& b) { return a == b; }

/// Converts a configuration scalar into the computation domain R.
template <ExactRing R>
R to_domain(const Scalar& s) {
    if constexpr (ring_traits<R>::symbolic) {
        if (s.is_symbolic()) return s.polynomial();
        return Polynomial::from_rational(s.rational());
    } else {
        if (s.is_symbolic()) throw DomainError("symbolic value " + s.to_string() + " in numeric computation");
        return s.rational();
    }
}

}  // namespace oplin
