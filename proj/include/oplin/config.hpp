#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "oplin/errors.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/scalar.hpp"
#include "oplin/sequence.hpp"

// Coefficient files:
//   {"alpha": SEQ, "beta": SEQ, "gamma": SEQ}   general three-term system
//   {"b": SEQ, "lambda": SEQ}                   monic specialization
// with optional "label" and "range" (highest index to materialize), and
//   SEQ = {"family":"explicit","values":["1/2","2",...]}
//       | {"family":"affine","c0":"0","c1":"1"}
//       | {"family":"constant","value":"1"}
//       | {"family":"symbolic","tag":"b"}
// Explicit values start at the sequence's first index: 1 for alpha and
// lambda, 0 otherwise.

namespace oplin {

/// An unmaterialized coefficient system as read from configuration.
struct SystemSpec {
    enum class Form { general, monic };
    Form form = Form::general;
    SequenceSpec alpha, beta, gamma;  // general form
    SequenceSpec b, lambda;           // monic form
    std::string label;
    std::optional<unsigned> range;

    bool is_symbolic() const {
        if (form == Form::monic) return b.is_symbolic() || lambda.is_symbolic();
        return alpha.is_symbolic() || beta.is_symbolic() || gamma.is_symbolic();
    }

    /// Largest working range the explicit lists support, if any list is explicit.
    std::optional<unsigned> natural_range() const {
        std::optional<unsigned> r;
        auto clamp = [&](const SequenceSpec& s, int shift) {
            if (auto last = s.last_index()) {
                long v = static_cast<long>(*last) - shift;
                unsigned u = v < 0 ? 0u : static_cast<unsigned>(v);
                r = r ? std::min(*r, u) : u;
            }
        };
        if (form == Form::monic) {
            clamp(b, 0);
            clamp(lambda, 1);
        } else {
            clamp(alpha, 0);
            clamp(beta, 0);
            clamp(gamma, 0);
        }
        return r;
    }

    template <ExactRing R>
    CoefficientSystem<R> materialize(unsigned max_index) const {
        if (form == Form::monic) return monic_system<R>(b, lambda, max_index, label).system();
        return CoefficientSystem<R>::from_specs(alpha, beta, gamma, max_index, label);
    }
    template <ExactRing R>
    MonicSystem<R> materialize_monic(unsigned max_index) const {
        if (form == Form::monic) return monic_system<R>(b, lambda, max_index, label);
        return as_monic(materialize<R>(max_index));
    }

    static SystemSpec monic(SequenceSpec b, SequenceSpec lambda, std::string label) {
        SystemSpec s;
        s.form = Form::monic;
        s.b = std::move(b);
        s.lambda = std::move(lambda);
        s.label = std::move(label);
        return s;
    }
    static SystemSpec general(SequenceSpec alpha, SequenceSpec beta, SequenceSpec gamma, std::string label) {
        SystemSpec s;
        s.alpha = std::move(alpha);
        s.beta = std::move(beta);
        s.gamma = std::move(gamma);
        s.label = std::move(label);
        return s;
    }
};

namespace detail {

inline std::string text_of(const nlohmann::json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(where + ": expected a \"p/q\" string");
}

inline SequenceSpec parse_sequence(const nlohmann::json& j, const std::string& name, unsigned first_index) {
    if (!j.is_object() || !j.contains("family")) throw InputError(name + ": sequence needs a \"family\" field");
    std::string fam = j.at("family").get<std::string>();
    if (fam == "explicit") {
        if (!j.contains("values") || !j.at("values").is_array())
            throw InputError(name + ": explicit sequence needs a \"values\" array");
        std::vector<Scalar> vals;
        for (const auto& v : j.at("values")) vals.push_back(Scalar::parse(text_of(v, name)));
        return SequenceSpec::explicit_values(std::move(vals), first_index);
    }
    if (fam == "affine") {
        return SequenceSpec::affine(Rational::parse(text_of(j.value("c0", nlohmann::json("0")), name)),
                                    Rational::parse(text_of(j.value("c1", nlohmann::json("0")), name)));
    }
    if (fam == "constant") {
        if (!j.contains("value")) throw InputError(name + ": constant sequence needs a \"value\"");
        return SequenceSpec::constant(Scalar::parse(text_of(j.at("value"), name)));
    }
    if (fam == "symbolic") {
        std::string tag = j.value("tag", std::string{});
        auto f = family_from_tag(tag);
        if (!f) throw InputError(name + ": unknown symbolic tag '" + tag + "'");
        return SequenceSpec::symbolic(*f);
    }
    throw InputError(name + ": unknown sequence family '" + fam + "'");
}

}  // namespace detail

inline SystemSpec parse_system(const nlohmann::json& j, const std::string& default_label = "system") {
    if (!j.is_object()) throw InputError("coefficient file must hold a JSON object");
    SystemSpec s;
    s.label = j.value("label", default_label);
    if (j.contains("range")) s.range = j.at("range").get<unsigned>();
    if (j.contains("b") || j.contains("lambda")) {
        if (!j.contains("b") || !j.contains("lambda")) throw InputError("monic form needs both \"b\" and \"lambda\"");
        s.form = SystemSpec::Form::monic;
        s.b = detail::parse_sequence(j.at("b"), "b", 0);
        s.lambda = detail::parse_sequence(j.at("lambda"), "lambda", 1);
        return s;
    }
    for (const char* key : {"alpha", "beta", "gamma"})
        if (!j.contains(key)) throw InputError(std::string("coefficient file lacks \"") + key + "\"");
    s.alpha = detail::parse_sequence(j.at("alpha"), "alpha", 1);
    s.beta = detail::parse_sequence(j.at("beta"), "beta", 0);
    s.gamma = detail::parse_sequence(j.at("gamma"), "gamma", 0);
    return s;
}

inline SystemSpec parse_system_text(const std::string& text, const std::string& default_label = "system") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_system(j, default_label);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed coefficient file: ") + e.what());
    }
}

inline SystemSpec load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read coefficient file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system_text(ss.str(), path);
}

/// Named systems: chebyshev-like (b = 0, lambda = 1), hermite-like
/// (b = 0, lambda_j = j), linear (b_j = j, lambda_j = j), symbolic (b_j and
/// lambda_j indeterminates), symbolic-general (alpha_j, beta_j, gamma_j) and
/// symbolic-prime (alpha'_j, beta'_j, gamma'_j).
inline std::optional<SystemSpec> builtin_system(const std::string& name) {
    using S = SequenceSpec;
    if (name == "chebyshev-like")
        return SystemSpec::monic(S::constant(Rational(0)), S::constant(Rational(1)), name);
    if (name == "hermite-like")
        return SystemSpec::monic(S::constant(Rational(0)), S::affine(Rational(0), Rational(1)), name);
    if (name == "linear")
        return SystemSpec::monic(S::affine(Rational(0), Rational(1)), S::affine(Rational(0), Rational(1)), name);
    if (name == "symbolic") return SystemSpec::monic(S::symbolic(Family::b), S::symbolic(Family::lambda), name);
    if (name == "symbolic-general")
        return SystemSpec::general(S::symbolic(Family::alpha), S::symbolic(Family::beta), S::symbolic(Family::gamma),
                                   name);
    if (name == "symbolic-prime")
        return SystemSpec::general(S::symbolic(Family::alpha_prime), S::symbolic(Family::beta_prime),
                                   S::symbolic(Family::gamma_prime), name);
    return std::nullopt;
}

/// A builtin name or a path to a coefficient file.
inline SystemSpec resolve_system(const std::string& name_or_path) {
    if (auto b = builtin_system(name_or_path)) return *b;
    return load_system_file(name_or_path);
}

}  // namespace oplin
