#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/scalar.hpp"
#include "oplin/sequence.hpp"

namespace oplin {

enum class Coefficient { alpha, beta, gamma };

/// Coefficients of  alpha_{n+1} p_{n+1} = (x - beta_n) p_n - gamma_{n-1} p_{n-1},
/// materialized over the working range 0..max_index.
///
/// alpha is read at indices >= 1; alpha_0 is pinned to 0. beta and gamma are
/// read at indices >= 0.
template <ExactRing R>
class CoefficientSystem {
public:
    CoefficientSystem() = default;

    /// alpha[0] is ignored and replaced by 0; all three vectors need equal length.
    CoefficientSystem(std::vector<R> alpha, std::vector<R> beta, std::vector<R> gamma, std::string label = {})
        : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), label_(std::move(label)) {
        if (alpha_.empty() || alpha_.size() != beta_.size() || beta_.size() != gamma_.size())
            throw InputError("coefficient vectors must be nonempty and of equal length");
        alpha_[0] = R(0);
    }

    static CoefficientSystem from_specs(const SequenceSpec& alpha, const SequenceSpec& beta,
                                        const SequenceSpec& gamma, unsigned max_index, std::string label = {}) {
        std::vector<R> a{R(0)};
        if (max_index >= 1) {
            auto rest = alpha.materialize<R>(1, max_index);
            a.insert(a.end(), rest.begin(), rest.end());
        }
        return CoefficientSystem(std::move(a), beta.materialize<R>(0, max_index), gamma.materialize<R>(0, max_index),
                                 std::move(label));
    }

    unsigned max_index() const { return static_cast<unsigned>(beta_.size()) - 1; }
    const std::string& label() const { return label_; }

    const R& alpha(unsigned i) const { return get(alpha_, i, "alpha"); }
    const R& beta(unsigned i) const { return get(beta_, i, "beta"); }
    const R& gamma(unsigned i) const { return get(gamma_, i, "gamma"); }

    const R& coeff_at(Coefficient which, unsigned i) const {
        switch (which) {
            case Coefficient::alpha: return alpha(i);
            case Coefficient::beta: return beta(i);
            case Coefficient::gamma: return gamma(i);
        }
        throw InputError("unknown coefficient");
    }

    /// Throws unless indices 0..top are available.
    void require(unsigned top, const std::string& what) const {
        if (top > max_index())
            throw RangeError(what + " needs coefficients through index " + std::to_string(top) +
                             ", working range of '" + label_ + "' ends at " + std::to_string(max_index()));
    }

    bool is_monic() const {
        for (unsigned i = 1; i <= max_index(); ++i)
            if (!(alpha_[i] == R(1))) return false;
        return true;
    }

    /// alpha_n > 0 (n >= 1) and gamma_n > 0 (n >= 0) over the working range.
    bool positive_definite() const
        requires(!ring_traits<R>::symbolic)
    {
        for (unsigned i = 0; i <= max_index(); ++i) {
            if (i >= 1 && alpha_[i].sign() != Sign::positive) return false;
            if (gamma_[i].sign() != Sign::positive) return false;
        }
        return true;
    }

private:
    const R& get(const std::vector<R>& v, unsigned i, const char* name) const {
        if (i >= v.size())
            throw RangeError(std::string(name) + "_" + std::to_string(i) + " outside working range 0.." +
                             std::to_string(max_index()) + " of '" + label_ + "'");
        return v[i];
    }

    std::vector<R> alpha_;
    std::vector<R> beta_;
    std::vector<R> gamma_;
    std::string label_;
};

/// Monic specialization alpha = 1, beta_n = b_n, gamma_n = lambda_{n+1}.
/// b is stored for 0..N and lambda for 1..N+1 (lambda_0 reads as 0).
template <ExactRing R>
class MonicSystem {
public:
    MonicSystem() = default;

    MonicSystem(std::vector<R> b, std::vector<R> lambda, std::string label = {})
        : b_(std::move(b)), lambda_(std::move(lambda)) {
        if (b_.empty() || lambda_.size() != b_.size() + 1)
            throw InputError("monic system needs b_0..b_N and lambda_0..lambda_{N+1}");
        lambda_[0] = R(0);
        std::vector<R> alpha(b_.size(), R(1));
        std::vector<R> gamma(lambda_.begin() + 1, lambda_.end());
        system_ = CoefficientSystem<R>(std::move(alpha), b_, std::move(gamma), std::move(label));
    }

    unsigned max_index() const { return static_cast<unsigned>(b_.size()) - 1; }

    const R& b(unsigned j) const {
        if (j >= b_.size()) throw RangeError("b_" + std::to_string(j) + " outside working range");
        return b_[j];
    }
    const R& lambda(unsigned j) const {
        if (j >= lambda_.size()) throw RangeError("lambda_" + std::to_string(j) + " outside working range");
        return lambda_[j];
    }

    const CoefficientSystem<R>& system() const { return system_; }
    const std::string& label() const { return system_.label(); }

    void require(unsigned top, const std::string& what) const {
        if (top > max_index())
            throw RangeError(what + " needs b and lambda through index " + std::to_string(top) +
                             ", working range ends at " + std::to_string(max_index()));
    }

private:
    std::vector<R> b_;
    std::vector<R> lambda_;
    CoefficientSystem<R> system_;
};

template <ExactRing R>
MonicSystem<R> monic_system(const SequenceSpec& b, const SequenceSpec& lambda, unsigned max_index,
                            std::string label = {}) {
    std::vector<R> lam{R(0)};
    auto rest = lambda.materialize<R>(1, max_index + 1);
    lam.insert(lam.end(), rest.begin(), rest.end());
    return MonicSystem<R>(b.materialize<R>(0, max_index), std::move(lam), std::move(label));
}

/// Reads a system with alpha == 1 as its monic specialization.
template <ExactRing R>
MonicSystem<R> as_monic(const CoefficientSystem<R>& sys) {
    if (!sys.is_monic()) throw InputError("system '" + sys.label() + "' is not monic (alpha != 1)");
    std::vector<R> b, lam{R(0)};
    for (unsigned i = 0; i <= sys.max_index(); ++i) {
        b.push_back(sys.beta(i));
        lam.push_back(sys.gamma(i));
    }
    return MonicSystem<R>(std::move(b), std::move(lam), sys.label());
}

/// L(p_k p_k) = gamma_0 ... gamma_{k-1} / (alpha_1 ... alpha_k), with L(1) = 1.
template <ExactRing R>
R norm_squared(const CoefficientSystem<R>& sys, unsigned k) {
    if (k > 0) sys.require(k, "norm_squared");
    R num(1), den(1);
    for (unsigned i = 0; i < k; ++i) {
        num = num * sys.gamma(i);
        den = den * sys.alpha(i + 1);
    }
    return exact_div(num, den);
}

template <ExactRing R>
R coeff_at(const CoefficientSystem<R>& sys, Coefficient which, unsigned i) {
    return sys.coeff_at(which, i);
}

}  // namespace oplin
