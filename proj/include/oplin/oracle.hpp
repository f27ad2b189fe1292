#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/scalar.hpp"

// Ground truth straight from the three-term recurrence: products of
// orthogonal polynomials are expanded in the p-basis, never through paths.

namespace oplin {

/// sum_k c_k p_k, zero coefficients never stored.
template <ExactRing R>
class BasisVector {
public:
    BasisVector() = default;
    static BasisVector unit(unsigned k) {
        BasisVector v;
        v.add(k, R(1));
        return v;
    }

    const std::map<unsigned, R>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    R at(unsigned k) const {
        auto it = c_.find(k);
        return it == c_.end() ? R(0) : it->second;
    }
    unsigned top_index() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    void add(unsigned k, const R& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.emplace(k, v);
        if (!inserted) {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    BasisVector& operator+=(const BasisVector& o) {
        for (const auto& [k, v] : o.c_) add(k, v);
        return *this;
    }
    friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
    friend BasisVector operator-(const BasisVector& a, const BasisVector& b) { return a + b.scaled(R(-1)); }

    BasisVector scaled(const R& s) const {
        BasisVector r;
        for (const auto& [k, v] : c_) r.add(k, v * s);
        return r;
    }
    BasisVector divided(const R& d) const {
        BasisVector r;
        for (const auto& [k, v] : c_) r.add(k, exact_div(v, d));
        return r;
    }

    friend bool operator==(const BasisVector&, const BasisVector&) = default;

private:
    std::map<unsigned, R> c_;
};

/// x p_n = alpha_{n+1} p_{n+1} + beta_n p_n + gamma_{n-1} p_{n-1}.
template <ExactRing R>
BasisVector<R> multiply_by_x(const BasisVector<R>& v, const CoefficientSystem<R>& sys) {
    if (!v.is_zero()) sys.require(v.top_index() + 1, "multiply_by_x");
    BasisVector<R> r;
    for (const auto& [n, c] : v.coefficients()) {
        r.add(n + 1, c * sys.alpha(n + 1));
        r.add(n, c * sys.beta(n));
        if (n > 0) r.add(n - 1, c * sys.gamma(n - 1));
    }
    return r;
}

/// The products p_m p_0 .. p_m p_n in the p-basis, by
/// p_m p_{j+1} = ((x - beta_j) p_m p_j - gamma_{j-1} p_m p_{j-1}) / alpha_{j+1}.
template <ExactRing R>
std::vector<BasisVector<R>> product_ladder(unsigned m, unsigned n, const CoefficientSystem<R>& sys) {
    if (m + n > 0) sys.require(m + n, "expand_product");
    std::vector<BasisVector<R>> ladder{BasisVector<R>::unit(m)};
    for (unsigned j = 0; j < n; ++j) {
        const auto& cur = ladder[j];
        BasisVector<R> next = multiply_by_x(cur, sys) - cur.scaled(sys.beta(j));
        if (j > 0) next = next - ladder[j - 1].scaled(sys.gamma(j - 1));
        ladder.push_back(next.divided(sys.alpha(j + 1)));
    }
    return ladder;
}

template <ExactRing R>
struct LinearizationEntry {
    R coefficient;
    R l_value;
};

/// Nonzero coefficients of one product expansion, keyed by target index.
template <ExactRing R>
struct LinearizationTable {
    unsigned first_index = 0;   // m
    unsigned second_index = 0;  // n, or k' for mixed products
    std::map<unsigned, LinearizationEntry<R>> entries;

    R coefficient(unsigned k) const {
        auto it = entries.find(k);
        return it == entries.end() ? R(0) : it->second.coefficient;
    }
    R l_value(unsigned k) const {
        auto it = entries.find(k);
        return it == entries.end() ? R(0) : it->second.l_value;
    }
};

namespace detail {

template <ExactRing R>
LinearizationTable<R> to_table(unsigned a, unsigned b, const BasisVector<R>& v, const CoefficientSystem<R>& sys) {
    LinearizationTable<R> t{a, b, {}};
    for (const auto& [k, c] : v.coefficients()) t.entries.emplace(k, LinearizationEntry<R>{c, c * norm_squared(sys, k)});
    return t;
}

}  // namespace detail

/// p_m p_n = sum_k a^k_{mn} p_k, with L(p_m p_n p_k) = a^k_{mn} L(p_k p_k).
template <ExactRing R>
LinearizationTable<R> expand_product(unsigned m, unsigned n, const CoefficientSystem<R>& sys) {
    return detail::to_table(m, n, product_ladder(m, n, sys).back(), sys);
}

/// p'_{k'} written in the unprimed basis.
template <ExactRing R>
BasisVector<R> connection_expand(unsigned k_prime, const CoefficientSystem<R>& sys,
                                 const CoefficientSystem<R>& prime) {
    if (k_prime > 0) {
        sys.require(k_prime, "connection_expand");
        prime.require(k_prime, "connection_expand (primed system)");
    }
    BasisVector<R> prev, cur = BasisVector<R>::unit(0);
    for (unsigned j = 0; j < k_prime; ++j) {
        BasisVector<R> next = multiply_by_x(cur, sys) - cur.scaled(prime.beta(j));
        if (j > 0) next = next - prev.scaled(prime.gamma(j - 1));
        prev = std::move(cur);
        cur = next.divided(prime.alpha(j + 1));
    }
    return cur;
}

/// p_m p'_{k'} = sum_n b^n_{mk'} p_n.
template <ExactRing R>
LinearizationTable<R> mixed_expand(unsigned m, unsigned k_prime, const CoefficientSystem<R>& sys,
                                   const CoefficientSystem<R>& prime) {
    BasisVector<R> conn = connection_expand(k_prime, sys, prime);
    BasisVector<R> product;
    if (!conn.is_zero()) {
        auto ladder = product_ladder(m, conn.top_index(), sys);
        for (const auto& [j, c] : conn.coefficients()) product += ladder[j].scaled(c);
    }
    return detail::to_table(m, k_prime, product, sys);
}

/// mu_n = L(x^n) with mu_0 = 1: the p_0 coefficient of x^n.
template <ExactRing R>
R moments(unsigned n, const CoefficientSystem<R>& sys) {
    BasisVector<R> v = BasisVector<R>::unit(0);
    for (unsigned i = 0; i < n; ++i) v = multiply_by_x(v, sys);
    return v.at(0);
}

/// L(p_m p_n p_k).
template <ExactRing R>
R triple_L(unsigned m, unsigned n, unsigned k, const CoefficientSystem<R>& sys) {
    R c = product_ladder(m, n, sys).back().at(k);
    if (c.is_zero()) return c;
    return c * norm_squared(sys, k);
}

/// L(p_m p_n p'_{k'}).
template <ExactRing R>
R mixed_L(unsigned m, unsigned n, unsigned k_prime, const CoefficientSystem<R>& sys,
          const CoefficientSystem<R>& prime) {
    return mixed_expand(m, k_prime, sys, prime).l_value(n);
}

}  // namespace oplin
