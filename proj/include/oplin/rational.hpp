#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "oplin/errors.hpp"

namespace oplin {

enum class Sign { negative, zero, positive };

inline char sign_char(Sign s) {
    switch (s) {
        case Sign::negative: return '-';
        case Sign::zero: return '0';
        case Sign::positive: return '+';
    }
    return '?';
}

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InputError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& v) : q_(v) {}

    /// Accepts "p" or "p/q" with optional leading sign; no decimals.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto trim = [](std::string& t) {
            auto b = t.find_first_not_of(" \t");
            auto e = t.find_last_not_of(" \t");
            t = (b == std::string::npos) ? std::string{} : t.substr(b, e - b + 1);
        };
        trim(s);
        auto valid_int = [](const std::string& t, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        trim(num);
        trim(den);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw InputError("not a rational literal: '" + std::string(text) + "'");
        if (num[0] == '+') num.erase(0, 1);
        return Rational(mpz_class(num), mpz_class(den));
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }

    Sign sign() const {
        int s = sgn(q_);
        return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
    }

    std::string to_string() const {
        std::string s = q_.get_num().get_str();
        if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
        return s;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

}  // namespace oplin
