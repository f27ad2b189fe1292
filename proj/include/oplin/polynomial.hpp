#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/rational.hpp"

namespace oplin {

/// Symbol families. Declaration order is the total order on indeterminates.
enum class Family : std::uint8_t { b, lambda, alpha, beta, gamma, alpha_prime, beta_prime, gamma_prime };

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::b,     Family::lambda,      Family::alpha,      Family::beta,
    Family::gamma, Family::alpha_prime, Family::beta_prime, Family::gamma_prime};

/// Text tag used in canonical rendering: b, l, a, be, g and the primed a', be', g'.
inline std::string_view family_tag(Family f) {
    switch (f) {
        case Family::b: return "b";
        case Family::lambda: return "l";
        case Family::alpha: return "a";
        case Family::beta: return "be";
        case Family::gamma: return "g";
        case Family::alpha_prime: return "a'";
        case Family::beta_prime: return "be'";
        case Family::gamma_prime: return "g'";
    }
    return "?";
}

inline std::optional<Family> family_from_tag(std::string_view tag) {
    for (Family f : kAllFamilies)
        if (family_tag(f) == tag) return f;
    // long-form aliases accepted in configuration files
    if (tag == "lambda") return Family::lambda;
    if (tag == "alpha") return Family::alpha;
    if (tag == "beta") return Family::beta;
    if (tag == "gamma") return Family::gamma;
    if (tag == "alpha'") return Family::alpha_prime;
    if (tag == "beta'") return Family::beta_prime;
    if (tag == "gamma'") return Family::gamma_prime;
    return std::nullopt;
}

struct Indeterminate {
    Family family = Family::b;
    unsigned index = 0;

    friend auto operator<=>(const Indeterminate&, const Indeterminate&) = default;

    /// "b3", "a'2"
    std::string to_string() const { return std::string(family_tag(family)) + std::to_string(index); }
    /// "b_3", "a'_2" (formula rendering)
    std::string to_subscript_string() const {
        return std::string(family_tag(family)) + "_" + std::to_string(index);
    }
};

/// Product of indeterminates with positive exponents, sorted by indeterminate.
class Monomial {
public:
    using Factor = std::pair<Indeterminate, unsigned>;

    Monomial() = default;
    explicit Monomial(Indeterminate v) : factors_{{v, 1}} {}

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                r.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                r.factors_.push_back(*j++);
            } else {
                r.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += '*';
            s += v.to_string();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

/// Canonical term order: higher degree first, then lexicographic on exponent
/// vectors with earlier indeterminates more significant (graded lex).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0;
        for (; i < fa.size() && i < fb.size(); ++i) {
            if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
            if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
        }
        return i < fa.size() && i == fb.size();
    }
};

/// Sparse polynomial with integer coefficients in indexed indeterminates.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

    Polynomial() = default;
    Polynomial(long c) { add_term(Monomial{}, mpz_class(c)); }  // NOLINT(google-explicit-constructor)
    Polynomial(int c) { add_term(Monomial{}, mpz_class(c)); }   // NOLINT(google-explicit-constructor)
    explicit Polynomial(const mpz_class& c) { add_term(Monomial{}, c); }

    static Polynomial variable(Indeterminate v) {
        Polynomial p;
        p.terms_.emplace(Monomial(v), mpz_class(1));
        return p;
    }
    static Polynomial variable(Family f, unsigned index) { return variable(Indeterminate{f, index}); }

    /// Only integral rationals embed into the symbolic domain.
    static Polynomial from_rational(const Rational& q) {
        if (!q.is_integer())
            throw DomainError("non-integral constant " + q.to_string() + " in symbolic domain");
        return Polynomial(q.numerator());
    }

    static Polynomial parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    mpz_class constant_value() const {
        if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
        return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
    }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Substitutes a rational value for every indeterminate.
    Rational evaluate(const std::function<Rational(Indeterminate)>& value) const {
        Rational total;
        for (const auto& [m, c] : terms_) {
            Rational t{c};
            for (const auto& [v, e] : m.factors()) {
                Rational x = value(v);
                for (unsigned k = 0; k < e; ++k) t *= x;
            }
            total += t;
        }
        return total;
    }

    /// "b3^2 - b0*b3 + 2*b0*b2 - 1"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool negative = c < 0;
            mpz_class mag = abs(c);
            if (first) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            if (m.is_one()) {
                s += mag.get_str();
            } else {
                if (mag != 1) s += mag.get_str() + "*";
                s += m.to_string();
            }
            first = false;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    TermMap terms_;
};

namespace detail {

/// Recursive-descent reader for +, -, *, ^, parentheses, integer literals and
/// indeterminates such as b3, l_4, a'2, be'0. Juxtaposed factors multiply.
class PolynomialReader {
public:
    explicit PolynomialReader(std::string_view text) : s_(text) {}

    Polynomial read() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse polynomial '" + std::string(s_) + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }
    Polynomial term() {
        Polynomial acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (starts_factor()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }
    Polynomial unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    Polynomial power() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            unsigned e = digits();
            Polynomial r(1);
            for (unsigned k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }
    unsigned digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }
    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.'))
                fail("symbolic coefficients must be integers");
            return Polynomial(mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string tag(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '\'') {
                tag += '\'';
                ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
            auto fam = family_from_tag(tag);
            if (!fam) fail("unknown symbol family '" + tag + "'");
            return Polynomial::variable(*fam, digits());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text) { return detail::PolynomialReader(text).read(); }

}  // namespace oplin
