#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/oracle.hpp"
#include "oplin/rational.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/weights.hpp"

namespace oplin {

/// One failed inequality `relation` with its two sides evaluated.
struct Violation {
    std::string relation;  // e.g. "b_i <= b_j", "gamma_j >= alpha'_i"
    unsigned i = 0;
    unsigned j = 0;
    Rational left;
    Rational right;
};

struct HypothesisReport {
    int corollary = 1;
    unsigned window = 0;  // indices 0..window were checked
    bool strict = false;
    bool holds = true;
    std::vector<Violation> violations;

    void add(Violation v) {
        violations.push_back(std::move(v));
        holds = false;
    }
};

/// Index pairs (i, j) that the dominance inequalities range over: j >= i for
/// linearization, j <= i for connection coefficients.
enum class PairOrder { j_at_least_i, j_at_most_i };

/// Indices up to m + n + k cover every vertex of the paths of an instance.
inline unsigned required_window(unsigned m, unsigned n, unsigned k) { return m + n + k; }

namespace detail {

inline bool in_order(const Rational& small, const Rational& big, bool strict) {
    return strict ? small < big : small <= big;
}

}  // namespace detail

/// lambda_j > 0 and b_j, lambda_j increasing (weakly unless strict) on 0..window.
template <ExactRing R>
HypothesisReport check_corollary1(const MonicSystem<R>& monic, unsigned window, bool strict = false) {
    if constexpr (ring_traits<R>::symbolic) {
        throw DomainError("check_corollary1 needs numeric coefficients");
    } else {
        monic.require(window, "check_corollary1");
        HypothesisReport rep{1, window, strict, true, {}};
        for (unsigned j = 1; j <= window; ++j)
            if (monic.lambda(j).sign() != Sign::positive) rep.add({"lambda_j > 0", j, j, monic.lambda(j), Rational(0)});
        for (unsigned j = 1; j < window; ++j)
            if (!detail::in_order(monic.lambda(j), monic.lambda(j + 1), strict))
                rep.add({strict ? "lambda_i < lambda_j" : "lambda_i <= lambda_j", j, j + 1, monic.lambda(j),
                         monic.lambda(j + 1)});
        for (unsigned j = 0; j < window; ++j)
            if (!detail::in_order(monic.b(j), monic.b(j + 1), strict))
                rep.add({strict ? "b_i < b_j" : "b_i <= b_j", j, j + 1, monic.b(j), monic.b(j + 1)});
        return rep;
    }
}

namespace detail {

inline void check_positive_pair(HypothesisReport& rep, const CoefficientSystem<Rational>& sys,
                                const CoefficientSystem<Rational>& prime, unsigned window) {
    for (unsigned i = 0; i <= window; ++i) {
        if (i >= 1 && sys.alpha(i).sign() != Sign::positive) rep.add({"alpha_i > 0", i, i, sys.alpha(i), 0});
        if (i >= 1 && prime.alpha(i).sign() != Sign::positive) rep.add({"alpha'_i > 0", i, i, prime.alpha(i), 0});
        if (sys.gamma(i).sign() != Sign::positive) rep.add({"gamma_i > 0", i, i, sys.gamma(i), 0});
        if (prime.gamma(i).sign() != Sign::positive) rep.add({"gamma'_i > 0", i, i, prime.gamma(i), 0});
    }
}

/// The four dominance families at one index pair; `suffix` tags the parity split.
inline void check_dominance(HypothesisReport& rep, const CoefficientSystem<Rational>& sys,
                            const CoefficientSystem<Rational>& prime, unsigned ui, unsigned uj, unsigned reported_i,
                            unsigned reported_j, const std::string& suffix, bool with_beta) {
    auto geq = [&](const char* rel, const Rational& l, const Rational& r) {
        if (l < r) rep.add({std::string(rel) + suffix, reported_i, reported_j, l, r});
    };
    if (with_beta) geq("beta_j >= beta'_i", sys.beta(uj), prime.beta(ui));
    geq("alpha_j >= alpha'_i", sys.alpha(uj), prime.alpha(ui));
    geq("alpha_j + gamma_j >= alpha'_i + gamma'_i", sys.alpha(uj) + sys.gamma(uj), prime.alpha(ui) + prime.gamma(ui));
    geq("gamma_j >= alpha'_i", sys.gamma(uj), prime.alpha(ui));
}

}  // namespace detail

/// Positivity of alpha, alpha', gamma, gamma' and the dominance families
/// beta_j >= beta'_i, alpha_j >= alpha'_i, alpha_j+gamma_j >= alpha'_i+gamma'_i,
/// gamma_j >= alpha'_i over the index pairs of `order` inside 0..window.
/// A finite window only witnesses the hypothesis for instances it covers.
template <ExactRing R>
HypothesisReport check_corollary2(const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime, unsigned window,
                                  PairOrder order = PairOrder::j_at_least_i) {
    if constexpr (ring_traits<R>::symbolic) {
        throw DomainError("check_corollary2 needs numeric coefficients");
    } else {
        sys.require(window, "check_corollary2");
        prime.require(window, "check_corollary2 (primed system)");
        HypothesisReport rep{2, window, false, true, {}};
        detail::check_positive_pair(rep, sys, prime, window);
        for (unsigned i = 0; i <= window; ++i)
            for (unsigned j = 0; j <= window; ++j) {
                bool in_range = order == PairOrder::j_at_least_i ? j >= i : j <= i;
                if (in_range) detail::check_dominance(rep, sys, prime, i, j, i, j, "", true);
            }
        return rep;
    }
}

/// beta = beta' = 0 plus positivity and the dominance families split by
/// parity: index 2j (2j+1) of the unprimed system against 2i (2i+1) of the
/// primed one, j >= i. Reported i, j are the half indices.
template <ExactRing R>
HypothesisReport check_corollary3(const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime,
                                  unsigned window) {
    if constexpr (ring_traits<R>::symbolic) {
        throw DomainError("check_corollary3 needs numeric coefficients");
    } else {
        sys.require(window, "check_corollary3");
        prime.require(window, "check_corollary3 (primed system)");
        HypothesisReport rep{3, window, false, true, {}};
        for (unsigned i = 0; i <= window; ++i) {
            if (!sys.beta(i).is_zero()) rep.add({"beta_j = 0", i, i, sys.beta(i), 0});
            if (!prime.beta(i).is_zero()) rep.add({"beta'_i = 0", i, i, prime.beta(i), 0});
        }
        detail::check_positive_pair(rep, sys, prime, window);
        for (unsigned lo = 0; lo <= window; ++lo)
            for (unsigned hi = lo; hi <= window; hi += 2) {
                bool even = lo % 2 == 0;
                detail::check_dominance(rep, sys, prime, lo, hi, lo / 2, hi / 2, even ? " (even)" : " (odd)", false);
            }
        return rep;
    }
}

struct CertificateRow {
    Path path;
    std::string formula;
    Rational weight;
    Sign sign = Sign::zero;
};

/// Per-path weights of one instance, each witnessing its own sign.
struct PositivityCertificate {
    unsigned m = 0, n = 0, k = 0;             // instance as requested
    unsigned path_m = 0, path_n = 0, path_k = 0;  // orientation actually summed
    std::vector<CertificateRow> per_path;
    bool all_nonnegative = true;
    Rational path_sum;
    Rational l_value;
    Rational coefficient;
    HypothesisReport hypothesis;
};

namespace detail {

inline void fill_rows(PositivityCertificate& c, const std::vector<std::pair<Path, Rational>>& weights,
                      WeightSystem ws) {
    for (const auto& [p, w] : weights) {
        Sign s = w.sign();
        if (s == Sign::negative) c.all_nonnegative = false;
        c.per_path.push_back({p, render_path_formula(p, ws), w, s});
    }
}

inline unsigned resolve_window(std::optional<unsigned> window, unsigned m, unsigned n, unsigned k) {
    unsigned need = required_window(m, n, k);
    if (window && *window < need)
        throw InputError("hypothesis window 0.." + std::to_string(*window) + " too small for instance; need 0.." +
                         std::to_string(need));
    return window.value_or(need);
}

}  // namespace detail

/// Certificate for a^k_{mn}: the path sum is taken with k <= n (swapping n and
/// k if needed, L being symmetric), where every vertex (i, j) has i <= j.
inline PositivityCertificate certify_t1(unsigned m, unsigned n, unsigned k, const MonicSystem<Rational>& monic,
                                        std::optional<unsigned> window = std::nullopt, bool strict = false) {
    PositivityCertificate c;
    c.m = m;
    c.n = n;
    c.k = k;
    c.path_m = m;
    c.path_n = std::max(n, k);
    c.path_k = std::min(n, k);
    unsigned w = detail::resolve_window(window, m, n, k);
    c.hypothesis = check_corollary1(monic, w, strict);
    auto sum = path_sum_t1(c.path_m, c.path_n, c.path_k, monic);
    detail::fill_rows(c, sum.per_path, WeightSystem::t1);
    c.path_sum = sum.path_sum;
    c.l_value = sum.total;
    c.coefficient = c.l_value / norm_squared(monic.system(), k);
    return c;
}

/// Certificate for b^n_{mk'} (coefficient of p_n in p_m p'_{k'}). With
/// k' <= max{m, n} the sum runs with k' <= n (swapping m and n if needed);
/// with m = 0 or n = 0 and k' larger, it is the connection case, whose vertices
/// satisfy i >= j. `corollary` selects check 2 or 3; 3 needs the even index on
/// the path start.
inline PositivityCertificate certify_t2(unsigned m, unsigned n, unsigned k_prime,
                                        const CoefficientSystem<Rational>& sys,
                                        const CoefficientSystem<Rational>& prime,
                                        std::optional<unsigned> window = std::nullopt, int corollary = 2) {
    if (corollary != 2 && corollary != 3) throw InputError("certify_t2 checks corollary 2 or 3");
    PositivityCertificate c;
    c.m = m;
    c.n = n;
    c.k = k_prime;
    PairOrder order = PairOrder::j_at_least_i;
    if (k_prime <= std::max(m, n)) {
        c.path_m = k_prime <= n ? m : n;
        c.path_n = k_prime <= n ? n : m;
    } else if (std::min(m, n) == 0) {
        c.path_m = 0;
        c.path_n = std::max(m, n);
        order = PairOrder::j_at_most_i;
        if (corollary == 3) throw InputError("corollary 3 covers k' <= n only");
    } else {
        throw InputError("certify_t2 needs k' <= max{m,n} or a connection instance (m = 0 or n = 0)");
    }
    c.path_k = k_prime;
    if (corollary == 3 && c.path_m % 2 != 0) throw InputError("corollary 3 needs an even m");
    unsigned w = detail::resolve_window(window, m, n, k_prime);
    c.hypothesis = corollary == 2 ? check_corollary2(sys, prime, w, order) : check_corollary3(sys, prime, w);
    auto sum = path_sum_t2(c.path_m, c.path_n, c.path_k, sys, prime);
    detail::fill_rows(c, sum.per_path, WeightSystem::t2);
    c.path_sum = sum.path_sum;
    c.l_value = sum.total;
    c.coefficient = c.l_value / norm_squared(sys, n);
    return c;
}

/// "3:DHU  (b_2-b_1)*l_3 = 3  +"
inline std::string render_row(const CertificateRow& r) {
    return r.path.to_string() + "  " + r.formula + " = " + r.weight.to_string() + "  " + sign_char(r.sign);
}

inline std::string render_report(const HypothesisReport& rep) {
    std::string s = "corollary " + std::to_string(rep.corollary) + " on indices 0.." + std::to_string(rep.window) +
                    (rep.strict ? " (strict)" : "") + ": " + (rep.holds ? "holds" : "violated") + "\n";
    for (const auto& v : rep.violations)
        s += "  violated " + v.relation + " at i=" + std::to_string(v.i) + " j=" + std::to_string(v.j) + ": " +
             v.left.to_string() + " vs " + v.right.to_string() + "\n";
    return s;
}

}  // namespace oplin
