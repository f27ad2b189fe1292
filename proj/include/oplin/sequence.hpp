#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/polynomial.hpp"
#include "oplin/rational.hpp"
#include "oplin/scalar.hpp"

namespace oplin {

/// An index-to-value rule for one coefficient sequence.
class SequenceSpec {
public:
    struct Explicit {
        std::vector<Scalar> values;
        unsigned first_index = 0;  // index of values[0]
    };
    struct Affine {
        Rational c0;
        Rational c1;
    };
    struct Constant {
        Scalar value;
    };
    struct Symbolic {
        Family family;
    };
    using Rule = std::variant<Explicit, Affine, Constant, Symbolic>;

    SequenceSpec() : rule_(Constant{Scalar(Rational(0))}) {}
    explicit SequenceSpec(Rule r) : rule_(std::move(r)) {}

    static SequenceSpec explicit_values(std::vector<Scalar> values, unsigned first_index = 0) {
        return SequenceSpec(Explicit{std::move(values), first_index});
    }
    static SequenceSpec affine(Rational c0, Rational c1) { return SequenceSpec(Affine{std::move(c0), std::move(c1)}); }
    static SequenceSpec constant(Scalar v) { return SequenceSpec(Constant{std::move(v)}); }
    static SequenceSpec symbolic(Family f) { return SequenceSpec(Symbolic{f}); }

    const Rule& rule() const { return rule_; }

    bool is_symbolic() const {
        return std::visit(
            [](const auto& r) -> bool {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, Symbolic>) {
                    return true;
                } else if constexpr (std::is_same_v<T, Constant>) {
                    return r.value.is_symbolic();
                } else if constexpr (std::is_same_v<T, Explicit>) {
                    for (const auto& v : r.values)
                        if (v.is_symbolic()) return true;
                    return false;
                } else {
                    return false;
                }
            },
            rule_);
    }

    /// Highest index an explicit list covers; families are unbounded.
    std::optional<unsigned> last_index() const {
        if (const auto* e = std::get_if<Explicit>(&rule_)) {
            if (e->values.empty()) return std::nullopt;
            return e->first_index + static_cast<unsigned>(e->values.size()) - 1;
        }
        return std::nullopt;
    }
    bool is_bounded() const { return std::holds_alternative<Explicit>(rule_); }

    template <ExactRing R>
    R at(unsigned i) const {
        return std::visit(
            [i](const auto& r) -> R {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, Explicit>) {
                    if (i < r.first_index || i - r.first_index >= r.values.size())
                        throw RangeError("index " + std::to_string(i) + " outside the explicit list, which covers " +
                                         std::to_string(r.first_index) + ".." +
                                         std::to_string(r.first_index + r.values.size() - 1) +
                                         "; shrink the working range or extend the list");
                    return to_domain<R>(r.values[i - r.first_index]);
                } else if constexpr (std::is_same_v<T, Affine>) {
                    return ring_traits<R>::from_rational(r.c0 + r.c1 * Rational(static_cast<long>(i)));
                } else if constexpr (std::is_same_v<T, Constant>) {
                    return to_domain<R>(r.value);
                } else {
                    if constexpr (ring_traits<R>::symbolic) {
                        return Polynomial::variable(r.family, i);
                    } else {
                        throw DomainError("symbolic sequence '" + std::string(family_tag(r.family)) +
                                          "' in numeric computation");
                    }
                }
            },
            rule_);
    }

    /// Values at first..last inclusive; errors are raised here, not on later use.
    template <ExactRing R>
    std::vector<R> materialize(unsigned first, unsigned last) const {
        std::vector<R> out;
        out.reserve(last >= first ? last - first + 1 : 0);
        for (unsigned i = first; i <= last; ++i) out.push_back(at<R>(i));
        return out;
    }

private:
    Rule rule_;
};

}  // namespace oplin
