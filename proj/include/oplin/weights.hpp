#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplin/errors.hpp"
#include "oplin/paths.hpp"
#include "oplin/polynomial.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/scalar.hpp"

namespace oplin {

/// Edge-weight systems.
///   t1      Askey weights on plain paths for the monic case
///   t2      context-dependent weights on generalized paths for a pair of systems
///   merged  the context-free weights produced directly by merging pavings into paths
///   unit    every plain path weighs 1 (path counting)
enum class WeightSystem { t1, t2, merged, unit };

/// Which monomial of an edge weight a term uses. `whole` marks the atomic
/// difference on H edges.
enum class MonomialChoice : std::uint8_t {
    whole,
    gamma,           // U: gamma_j
    alpha,           // D: alpha_j
    alpha_prime,     // U after D, D after U: -alpha'_i
    hh_alpha,        // HH: alpha_j alpha'_{i+1}
    hh_gamma,        // HH: gamma_j alpha'_{i+1}
    hh_alpha_prime,  // HH after U or D: -alpha'_i alpha'_{i+1}
    hh_gamma_prime,  // HH: -gamma'_i alpha'_{i+1}
};

/// Monomials containing alpha' that the sign-reversing involution pairs off.
inline bool is_cancelling(MonomialChoice c) {
    return c == MonomialChoice::alpha_prime || c == MonomialChoice::hh_alpha || c == MonomialChoice::hh_gamma ||
           c == MonomialChoice::hh_alpha_prime;
}

struct SignedProduct {
    int sign = 1;
    std::vector<Indeterminate> factors;  // empty product = 1
    MonomialChoice role = MonomialChoice::whole;
};

/// Weight of one edge as a signed sum of products of indeterminates.
struct EdgeWeight {
    Step step = Step::U;
    unsigned x = 0;
    unsigned y = 0;
    std::vector<SignedProduct> terms;
    bool atomic = false;  // expanded as a single factor
};

namespace detail {

inline Indeterminate sym(Family f, unsigned i) { return Indeterminate{f, i}; }

inline std::string render_product(const SignedProduct& t) {
    if (t.factors.empty()) return "1";
    std::string s;
    for (const auto& v : t.factors) {
        if (!s.empty()) s += "*";
        s += v.to_subscript_string();
    }
    return s;
}

}  // namespace detail

/// H at (i,j): b_j - b_i; D followed by U: lambda_j - lambda_{i+1};
/// other D: lambda_j; U: 1.
inline EdgeWeight edge_weight_t1(Step s, std::optional<Step> next, unsigned x, unsigned y) {
    using detail::sym;
    EdgeWeight w{s, x, y, {}, false};
    switch (s) {
        case Step::H:
            w.terms = {{1, {sym(Family::b, y)}}, {-1, {sym(Family::b, x)}}};
            w.atomic = true;
            break;
        case Step::D:
            if (next == Step::U) {
                w.terms = {{1, {sym(Family::lambda, y)}}, {-1, {sym(Family::lambda, x + 1)}}};
                w.atomic = true;
            } else {
                w.terms = {{1, {sym(Family::lambda, y)}}};
            }
            break;
        case Step::U: w.terms = {{1, {}}}; break;
        case Step::HH: throw InputError("weight t1 is defined on plain Motzkin paths only");
    }
    return w;
}

/// The seven-case weight on generalized paths. `prev` is the immediately
/// preceding edge. Terms with alpha_0 are omitted (alpha_0 = 0).
inline EdgeWeight edge_weight_t2(Step s, std::optional<Step> prev, unsigned x, unsigned y) {
    using detail::sym;
    using MC = MonomialChoice;
    EdgeWeight w{s, x, y, {}, false};
    switch (s) {
        case Step::H:
            w.terms = {{1, {sym(Family::beta, y)}}, {-1, {sym(Family::beta_prime, x)}}};
            w.atomic = true;
            break;
        case Step::U:
            w.terms.push_back({1, {sym(Family::gamma, y)}, MC::gamma});
            if (prev == Step::D) w.terms.push_back({-1, {sym(Family::alpha_prime, x)}, MC::alpha_prime});
            break;
        case Step::D:
            w.terms.push_back({1, {sym(Family::alpha, y)}, MC::alpha});
            if (prev == Step::U) w.terms.push_back({-1, {sym(Family::alpha_prime, x)}, MC::alpha_prime});
            break;
        case Step::HH: {
            Indeterminate ap = sym(Family::alpha_prime, x + 1);
            if (y > 0) w.terms.push_back({1, {sym(Family::alpha, y), ap}, MC::hh_alpha});
            w.terms.push_back({1, {sym(Family::gamma, y), ap}, MC::hh_gamma});
            if (prev == Step::U || prev == Step::D)
                w.terms.push_back({-1, {sym(Family::alpha_prime, x), ap}, MC::hh_alpha_prime});
            w.terms.push_back({-1, {sym(Family::gamma_prime, x), ap}, MC::hh_gamma_prime});
            break;
        }
    }
    return w;
}

/// Context-free weights: H: beta_j - beta'_i; U: gamma_j; D: alpha_j;
/// HH: -gamma'_i alpha'_{i+1}.
inline EdgeWeight edge_weight_merged(Step s, unsigned x, unsigned y) {
    using detail::sym;
    using MC = MonomialChoice;
    EdgeWeight w{s, x, y, {}, false};
    switch (s) {
        case Step::H:
            w.terms = {{1, {sym(Family::beta, y)}}, {-1, {sym(Family::beta_prime, x)}}};
            w.atomic = true;
            break;
        case Step::U: w.terms = {{1, {sym(Family::gamma, y)}, MC::gamma}}; break;
        case Step::D: w.terms = {{1, {sym(Family::alpha, y)}, MC::alpha}}; break;
        case Step::HH:
            w.terms = {{-1, {sym(Family::gamma_prime, x), sym(Family::alpha_prime, x + 1)}, MC::hh_gamma_prime}};
            break;
    }
    return w;
}

inline EdgeWeight edge_weight(WeightSystem ws, std::optional<Step> prev, Step s, std::optional<Step> next, unsigned x,
                              unsigned y) {
    switch (ws) {
        case WeightSystem::t1: return edge_weight_t1(s, next, x, y);
        case WeightSystem::t2: return edge_weight_t2(s, prev, x, y);
        case WeightSystem::merged: return edge_weight_merged(s, x, y);
        case WeightSystem::unit: return EdgeWeight{s, x, y, {{1, {}}}, false};
    }
    throw InputError("unknown weight system");
}

inline std::vector<EdgeWeight> edge_weights(const Path& p, WeightSystem ws) {
    auto edges = p.edges();
    std::vector<EdgeWeight> out;
    out.reserve(edges.size());
    for (std::size_t t = 0; t < edges.size(); ++t) {
        std::optional<Step> prev, next;
        if (t > 0) prev = edges[t - 1].step;
        if (t + 1 < edges.size()) next = edges[t + 1].step;
        out.push_back(edge_weight(ws, prev, edges[t].step, next, edges[t].x, edges[t].y));
    }
    return out;
}

/// "(b_2-b_1)" or "l_3"; a bare 1 renders as "1".
inline std::string render_edge_weight(const EdgeWeight& w) {
    if (w.terms.size() == 1) {
        const auto& t = w.terms.front();
        return (t.sign < 0 ? "-" : "") + detail::render_product(t);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        const auto& t = w.terms[i];
        if (i > 0 || t.sign < 0) s += t.sign < 0 ? "-" : "+";
        s += detail::render_product(t);
    }
    return s + ")";
}

/// Product of the nontrivial edge factors, sums before single factors:
/// "(b_2-b_1)*l_3".
inline std::string render_path_formula(const Path& p, WeightSystem ws) {
    std::vector<std::string> sums, singles;
    for (const auto& w : edge_weights(p, ws)) {
        std::string f = render_edge_weight(w);
        if (f == "1") continue;
        (f.front() == '(' ? sums : singles).push_back(f);
    }
    sums.insert(sums.end(), singles.begin(), singles.end());
    if (sums.empty()) return "1";
    std::string s;
    for (const auto& f : sums) s += (s.empty() ? "" : "*") + f;
    return s;
}

// ---------------------------------------------------------------------------
// Valuations: bind indeterminates to coefficient values.

template <ExactRing R>
class MonicValuation {
public:
    explicit MonicValuation(const MonicSystem<R>& s) : s_(&s) {}
    R operator()(Indeterminate v) const {
        switch (v.family) {
            case Family::b: return s_->b(v.index);
            case Family::lambda: return s_->lambda(v.index);
            default: throw InputError("monic weights only read b and lambda, got " + v.to_string());
        }
    }

private:
    const MonicSystem<R>* s_;
};

template <ExactRing R>
class PairValuation {
public:
    PairValuation(const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime) : sys_(&sys), prime_(&prime) {}
    R operator()(Indeterminate v) const {
        switch (v.family) {
            case Family::alpha: return sys_->alpha(v.index);
            case Family::beta: return sys_->beta(v.index);
            case Family::gamma: return sys_->gamma(v.index);
            case Family::alpha_prime: return prime_->alpha(v.index);
            case Family::beta_prime: return prime_->beta(v.index);
            case Family::gamma_prime: return prime_->gamma(v.index);
            default: throw InputError("pair weights do not read " + v.to_string());
        }
    }

private:
    const CoefficientSystem<R>* sys_;
    const CoefficientSystem<R>* prime_;
};

template <ExactRing R, class Valuation>
R evaluate(const SignedProduct& t, const Valuation& val) {
    R r(t.sign);
    for (const auto& v : t.factors) r = r * val(v);
    return r;
}

template <ExactRing R, class Valuation>
R evaluate(const EdgeWeight& w, const Valuation& val) {
    R r(0);
    for (const auto& t : w.terms) r = r + evaluate<R>(t, val);
    return r;
}

template <ExactRing R, class Valuation>
R path_weight(const Path& p, WeightSystem ws, const Valuation& val) {
    R r(1);
    for (const auto& w : edge_weights(p, ws)) r = r * evaluate<R>(w, val);
    return r;
}

template <ExactRing R>
R weight_t1(const Path& p, const MonicSystem<R>& monic) {
    return path_weight<R>(p, WeightSystem::t1, MonicValuation<R>(monic));
}

template <ExactRing R>
R weight_t2(const Path& p, const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime) {
    return path_weight<R>(p, WeightSystem::t2, PairValuation<R>(sys, prime));
}

template <ExactRing R>
R weight_merged_t2(const Path& p, const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime) {
    return path_weight<R>(p, WeightSystem::merged, PairValuation<R>(sys, prime));
}

// ---------------------------------------------------------------------------
// Path sums.

template <ExactRing R>
struct PathSumResult {
    R total;
    R prefactor;
    R path_sum;  // sum of per_path weights
    std::vector<std::pair<Path, R>> per_path;
};

/// Highest coefficient index touched by weighted paths (0,m) -> (k,n).
inline unsigned max_path_level(unsigned m, unsigned n, unsigned k) { return (m + n + k) / 2; }

/// lambda_1...lambda_n * sum over plain paths (0,m)->(k,n) of the t1 weight.
template <ExactRing R>
PathSumResult<R> path_sum_t1(unsigned m, unsigned n, unsigned k, const MonicSystem<R>& monic) {
    monic.require(std::max({max_path_level(m, n, k), k, n}), "path_sum_t1");
    PathSumResult<R> r{R(0), R(1), R(0), {}};
    for (unsigned i = 1; i <= n; ++i) r.prefactor = r.prefactor * monic.lambda(i);
    for (auto& p : enumerate_paths(m, n, k, false)) {
        R w = weight_t1(p, monic);
        r.path_sum = r.path_sum + w;
        r.per_path.emplace_back(std::move(p), std::move(w));
    }
    r.total = r.prefactor * r.path_sum;
    return r;
}

/// Index pairing of the Theorem-2 prefactor.
///   gamma_through_m: gamma_0...gamma_{m-1} / (alpha_1...alpha_m alpha'_1...alpha'_k)
///   gamma_through_k: gamma_0...gamma_{k-1} / (alpha_1...alpha_m alpha'_1...alpha'_k)
/// Only gamma_through_m agrees with the functional; gamma_through_k is kept for reporting.
enum class PrefactorReading { gamma_through_m, gamma_through_k };

template <ExactRing R>
R prefactor_t2(unsigned m, unsigned k, const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime,
               PrefactorReading reading) {
    unsigned gamma_count = reading == PrefactorReading::gamma_through_m ? m : k;
    R num(1), den(1);
    for (unsigned i = 0; i < gamma_count; ++i) num = num * sys.gamma(i);
    for (unsigned i = 1; i <= m; ++i) den = den * sys.alpha(i);
    for (unsigned i = 1; i <= k; ++i) den = den * prime.alpha(i);
    return exact_div(num, den);
}

/// prefactor * sum over generalized paths (0,m)->(k,n) of the t2 weight.
/// In the symbolic domain the prefactor denominator must be a unit.
template <ExactRing R>
PathSumResult<R> path_sum_t2(unsigned m, unsigned n, unsigned k, const CoefficientSystem<R>& sys,
                             const CoefficientSystem<R>& prime,
                             PrefactorReading reading = PrefactorReading::gamma_through_m) {
    sys.require(std::max({max_path_level(m, n, k), m, k}), "path_sum_t2");
    prime.require(k, "path_sum_t2 (primed system)");
    PathSumResult<R> r{R(0), prefactor_t2(m, k, sys, prime, reading), R(0), {}};
    for (auto& p : enumerate_paths(m, n, k, true)) {
        R w = weight_t2(p, sys, prime);
        r.path_sum = r.path_sum + w;
        r.per_path.emplace_back(std::move(p), std::move(w));
    }
    r.total = r.prefactor * r.path_sum;
    return r;
}

// ---------------------------------------------------------------------------
// Weights of (path, paving) pairs before merging.

namespace detail {

/// x-coordinate of every edge of `merged_steps(p, pi, hh)` that comes from
/// p, and the start vertex of every block.
struct PairLayout {
    std::vector<Path::Edge> path_edges;  // levels of p's own steps
    std::vector<Path::Edge> block_edges;  // H for monominos, HH for dominos, at the block start
};

inline PairLayout pair_layout(const Path& p, const Paving& pi) {
    check_merge_sizes(p, pi);
    auto cover = pi.cover();
    PairLayout out;
    long level = p.start_level();
    std::size_t next = 0;
    for (unsigned i = 1; i <= pi.ground_size(); ++i) {
        unsigned x = i - 1, y = static_cast<unsigned>(level < 0 ? 0 : level);
        switch (cover[i]) {
            case 0: {
                Step s = p.steps()[next++];
                out.path_edges.push_back({s, x, static_cast<unsigned>(level)});
                level += step_dy(s);
                break;
            }
            case 1: out.block_edges.push_back({Step::H, x, y}); break;
            case 2: out.block_edges.push_back({Step::HH, x, y}); break;
            default: break;
        }
    }
    return out;
}

}  // namespace detail

/// Monic pair weight: steps of p weigh 1 (U), lambda_j (D from level j) and
/// b_j (H at level j); a monomino {i} weighs -b_{i-1} and a domino {i,i+1}
/// weighs -lambda_i. Defined for every pair, admissible or not.
template <ExactRing R>
R pair_weight_t1(const Path& p, const Paving& pi, const MonicSystem<R>& monic) {
    auto layout = detail::pair_layout(p, pi);
    R r(1);
    for (const auto& e : layout.path_edges) {
        if (e.step == Step::D) r = r * monic.lambda(e.y);
        if (e.step == Step::H) r = r * monic.b(e.y);
    }
    for (const auto& e : layout.block_edges)
        r = r * (e.step == Step::H ? -monic.b(e.x) : -monic.lambda(e.x + 1));
    return r;
}

/// Two-system pair weight: steps of p weigh gamma_j (U), alpha_j (D) and
/// beta_j (H) at level j; a monomino {i} weighs -beta'_{i-1} and a domino
/// {i,i+1} weighs -gamma'_{i-1} alpha'_i.
template <ExactRing R>
R pair_weight_t2(const Path& p, const Paving& pi, const CoefficientSystem<R>& sys, const CoefficientSystem<R>& prime) {
    auto layout = detail::pair_layout(p, pi);
    R r(1);
    for (const auto& e : layout.path_edges) {
        switch (e.step) {
            case Step::U: r = r * sys.gamma(e.y); break;
            case Step::D: r = r * sys.alpha(e.y); break;
            default: r = r * sys.beta(e.y); break;
        }
    }
    for (const auto& e : layout.block_edges)
        r = r * (e.step == Step::H ? -prime.beta(e.x) : -(prime.gamma(e.x) * prime.alpha(e.x + 1)));
    return r;
}

/// Sum of pair_weight_t1 over all pairs (P, pi) with P a plain path from
/// level m to level n and pi a paving of {1..k}, whether or not the merge
/// stays above the axis; `admissible_only` keeps only the mergeable pairs.
template <ExactRing R>
R pair_sum_t1(unsigned m, unsigned n, unsigned k, const MonicSystem<R>& monic, bool admissible_only) {
    R total(0);
    for (const auto& pi : enumerate_pavings(k))
        for (const auto& p : enumerate_paths(m, n, pi.isolated_count(), false))
            if (!admissible_only || merge_is_admissible(p, pi)) total = total + pair_weight_t1(p, pi, monic);
    return total;
}

/// Sum of path weights over the enumeration, without prefactor.
template <ExactRing R>
R enumeration_sum(unsigned m, unsigned n, unsigned k, WeightSystem ws, const CoefficientSystem<R>& sys,
                  const CoefficientSystem<R>& prime) {
    R total(0);
    if (ws == WeightSystem::t1) {
        auto monic = as_monic(sys);
        for (const auto& p : enumerate_paths(m, n, k, false)) total = total + weight_t1(p, monic);
    } else if (ws == WeightSystem::unit) {
        total = R(static_cast<long>(enumerate_paths(m, n, k, false).size()));
    } else {
        PairValuation<R> val(sys, prime);
        for (const auto& p : enumerate_paths(m, n, k, true)) total = total + path_weight<R>(p, ws, val);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Transfer-matrix evaluation.

namespace detail {

/// Sums a weight that may depend on the previous and next edge. States are
/// (x, level, last step, step before last); the weight of the last step is
/// applied once its successor (or the path end) is known.
template <ExactRing R, class EdgeValue>
R dp_engine(unsigned m, unsigned n, unsigned k, bool allow_hh, const EdgeValue& edge_value) {
    constexpr unsigned kNone = 4;  // index for "no step"
    const unsigned max_level = m + k;
    const unsigned levels = max_level + 1;
    auto idx = [&](unsigned x, unsigned lvl, unsigned last, unsigned before) {
        return ((static_cast<std::size_t>(x) * levels + lvl) * 5 + last) * 5 + before;
    };
    std::vector<std::optional<R>> acc(static_cast<std::size_t>(k + 1) * levels * 25);
    auto as_step = [](unsigned c) -> std::optional<Step> {
        if (c == kNone) return std::nullopt;
        return static_cast<Step>(c);
    };
    auto reachable = [&](long lvl, unsigned x) {
        long gap = lvl - static_cast<long>(n);
        return lvl >= 0 && lvl <= static_cast<long>(max_level) && x <= k &&
               (gap < 0 ? -gap : gap) <= static_cast<long>(k - x);
    };
    auto add = [](std::optional<R>& slot, R v) {
        if (slot) {
            *slot = *slot + v;
        } else {
            slot = std::move(v);
        }
    };
    if (!reachable(m, 0)) return R(0);
    acc[idx(0, m, kNone, kNone)] = R(1);

    R total(0);
    for (unsigned x = 0; x <= k; ++x) {
        for (unsigned lvl = 0; lvl < levels; ++lvl) {
            for (unsigned last = 0; last < 5; ++last) {
                for (unsigned before = 0; before < 5; ++before) {
                    auto& cell = acc[idx(x, lvl, last, before)];
                    if (!cell) continue;
                    // start vertex of the pending last edge
                    unsigned lx = 0, ly = 0;
                    if (last != kNone) {
                        Step ls = static_cast<Step>(last);
                        lx = x - step_dx(ls);
                        ly = static_cast<unsigned>(static_cast<int>(lvl) - step_dy(ls));
                    }
                    if (x == k) {
                        if (lvl == n) {
                            R v = *cell;
                            if (last != kNone)
                                v = v * edge_value(as_step(before), static_cast<Step>(last), std::nullopt, lx, ly);
                            total = total + v;
                        }
                        continue;
                    }
                    for (Step s : {Step::U, Step::D, Step::H, Step::HH}) {
                        if (s == Step::HH && !allow_hh) continue;
                        long nl = static_cast<long>(lvl) + step_dy(s);
                        unsigned nx = x + step_dx(s);
                        if (!reachable(nl, nx)) continue;
                        R v = *cell;
                        if (last != kNone) v = v * edge_value(as_step(before), static_cast<Step>(last), s, lx, ly);
                        add(acc[idx(nx, static_cast<unsigned>(nl), static_cast<unsigned>(s), last)], std::move(v));
                    }
                }
            }
        }
    }
    return total;
}

}  // namespace detail

/// Dynamic-programming value of the path sum (no prefactor). t1 reads the
/// monic specialization of `sys`; `prime` is ignored by t1 and unit.
template <ExactRing R>
R dp_sum(unsigned m, unsigned n, unsigned k, WeightSystem ws, const CoefficientSystem<R>& sys,
         const CoefficientSystem<R>& prime) {
    switch (ws) {
        case WeightSystem::t1: {
            auto monic = as_monic(sys);
            MonicValuation<R> val(monic);
            return detail::dp_engine<R>(m, n, k, false, [&](auto prev, Step s, auto next, unsigned x, unsigned y) {
                return evaluate<R>(edge_weight(ws, prev, s, next, x, y), val);
            });
        }
        case WeightSystem::unit:
            return detail::dp_engine<R>(m, n, k, false, [](auto, Step, auto, unsigned, unsigned) { return R(1); });
        case WeightSystem::t2:
        case WeightSystem::merged: {
            PairValuation<R> val(sys, prime);
            return detail::dp_engine<R>(m, n, k, true, [&](auto prev, Step s, auto next, unsigned x, unsigned y) {
                return evaluate<R>(edge_weight(ws, prev, s, next, x, y), val);
            });
        }
    }
    throw InputError("unknown weight system");
}

namespace detail {

/// Machine-integer ring used for path counting.
struct Count {
    unsigned long long v = 0;
    explicit Count(long c = 0) : v(static_cast<unsigned long long>(c)) {}
    friend Count operator+(Count a, Count b) { a.v += b.v; return a; }
    friend Count operator-(Count a, Count b) { a.v -= b.v; return a; }
    friend Count operator*(Count a, Count b) { a.v *= b.v; return a; }
    friend Count operator-(Count a) { a.v = 0 - a.v; return a; }
    friend bool operator==(Count, Count) = default;
    bool is_zero() const { return v == 0; }
    std::string to_string() const { return std::to_string(v); }
};

}  // namespace detail

/// Number of Motzkin paths (0,m)->(k,n), by the transfer matrix.
inline unsigned long long dp_count(unsigned m, unsigned n, unsigned k, bool allow_hh) {
    using detail::Count;
    return detail::dp_engine<Count>(m, n, k, allow_hh, [](auto, Step, auto, unsigned, unsigned) { return Count(1); })
        .v;
}

// ---------------------------------------------------------------------------
// Monomial expansion and the sign-reversing involution.

/// One element of the multiset obtained by choosing a monomial on every edge.
template <ExactRing R>
struct WeightedTerm {
    Path path;
    std::vector<MonomialChoice> choice;  // one per edge
    int sign = 1;
    R value;  // signed product of the chosen monomials

    bool is_fixed_point() const {
        return std::none_of(choice.begin(), choice.end(), is_cancelling);
    }
};

/// Builds the term for an explicit choice, checking each choice is offered by
/// its edge in context.
template <ExactRing R>
WeightedTerm<R> make_term(const Path& p, std::vector<MonomialChoice> choice, const CoefficientSystem<R>& sys,
                          const CoefficientSystem<R>& prime) {
    auto weights = edge_weights(p, WeightSystem::t2);
    if (choice.size() != weights.size()) throw InputError("choice length differs from edge count");
    PairValuation<R> val(sys, prime);
    WeightedTerm<R> t{p, std::move(choice), 1, R(1)};
    for (std::size_t e = 0; e < weights.size(); ++e) {
        const auto& w = weights[e];
        if (w.atomic) {
            if (t.choice[e] != MonomialChoice::whole) throw InputError("H edges are expanded atomically");
            t.value = t.value * evaluate<R>(w, val);
            continue;
        }
        auto it = std::find_if(w.terms.begin(), w.terms.end(),
                               [&](const SignedProduct& sp) { return sp.role == t.choice[e]; });
        if (it == w.terms.end())
            throw InputError("monomial choice not offered by edge " + std::to_string(e) + " of " + p.to_string());
        t.sign *= it->sign;
        t.value = t.value * evaluate<R>(*it, val);
    }
    return t;
}

/// Every combination of monomial choices on the t2 weight of `p`; H edges
/// count as a single factor. The values sum to weight_t2(p).
template <ExactRing R>
std::vector<WeightedTerm<R>> expand_choices(const Path& p, const CoefficientSystem<R>& sys,
                                            const CoefficientSystem<R>& prime) {
    auto weights = edge_weights(p, WeightSystem::t2);
    PairValuation<R> val(sys, prime);
    std::vector<WeightedTerm<R>> out;
    std::vector<MonomialChoice> choice(weights.size());
    auto rec = [&](auto&& self, std::size_t e, int sign, R value) -> void {
        if (e == weights.size()) {
            out.push_back({p, choice, sign, std::move(value)});
            return;
        }
        const auto& w = weights[e];
        if (w.atomic) {
            choice[e] = MonomialChoice::whole;
            self(self, e + 1, sign, value * evaluate<R>(w, val));
            return;
        }
        for (const auto& sp : w.terms) {
            choice[e] = sp.role;
            self(self, e + 1, sign * sp.sign, value * evaluate<R>(sp, val));
        }
    };
    rec(rec, 0, 1, R(1));
    return out;
}

/// Combinatorial part of the involution: locate the rightmost cancelling
/// monomial and trade an HH edge for a UD/DU pair or back. nullopt marks a
/// fixed point.
inline std::optional<std::pair<Path, std::vector<MonomialChoice>>> involution_move(
    const Path& p, const std::vector<MonomialChoice>& choice) {
    using MC = MonomialChoice;
    const auto& steps = p.steps();
    if (choice.size() != steps.size()) throw InputError("choice length differs from edge count");
    std::optional<std::size_t> r;
    for (std::size_t e = steps.size(); e-- > 0;) {
        if (is_cancelling(choice[e])) {
            r = e;
            break;
        }
    }
    if (!r) return std::nullopt;

    std::vector<Step> ns;
    std::vector<MC> nc;
    auto splice = [&](std::size_t from, std::size_t count, std::vector<Step> with_steps, std::vector<MC> with_choice) {
        ns.assign(steps.begin(), steps.begin() + static_cast<long>(from));
        nc.assign(choice.begin(), choice.begin() + static_cast<long>(from));
        ns.insert(ns.end(), with_steps.begin(), with_steps.end());
        nc.insert(nc.end(), with_choice.begin(), with_choice.end());
        ns.insert(ns.end(), steps.begin() + static_cast<long>(from + count), steps.end());
        nc.insert(nc.end(), choice.begin() + static_cast<long>(from + count), choice.end());
    };

    const std::size_t e = *r;
    const MC c = choice[e];
    switch (steps[e]) {
        case Step::HH: {
            std::optional<Step> prev;
            if (e > 0) prev = steps[e - 1];
            if (c == MC::hh_alpha) {
                splice(e, 1, {Step::D, Step::U}, {MC::alpha, MC::alpha_prime});
            } else if (c == MC::hh_gamma) {
                splice(e, 1, {Step::U, Step::D}, {MC::gamma, MC::alpha_prime});
            } else if (prev == Step::D) {
                splice(e, 1, {Step::U, Step::D}, {MC::alpha_prime, MC::alpha_prime});
            } else if (prev == Step::U) {
                splice(e, 1, {Step::D, Step::U}, {MC::alpha_prime, MC::alpha_prime});
            } else {
                throw InputError("alpha'_i alpha'_{i+1} chosen on an HH edge without a U/D predecessor");
            }
            break;
        }
        case Step::U:
            if (e == 0 || steps[e - 1] != Step::D) throw InputError("-alpha' chosen on a U edge not preceded by D");
            splice(e - 1, 2, {Step::HH}, {choice[e - 1] == MC::alpha ? MC::hh_alpha : MC::hh_alpha_prime});
            break;
        case Step::D:
            if (e == 0 || steps[e - 1] != Step::U) throw InputError("-alpha' chosen on a D edge not preceded by U");
            splice(e - 1, 2, {Step::HH}, {choice[e - 1] == MC::gamma ? MC::hh_gamma : MC::hh_alpha_prime});
            break;
        case Step::H: throw InputError("H edges carry no cancelling monomial");
    }
    return std::make_pair(Path(p.start_level(), std::move(ns)), std::move(nc));
}

/// Sign-reversing involution on the expanded multiset; fixed points are
/// returned unchanged and carry the merged weights.
template <ExactRing R>
WeightedTerm<R> involution_phi(const WeightedTerm<R>& t, const CoefficientSystem<R>& sys,
                               const CoefficientSystem<R>& prime) {
    auto moved = involution_move(t.path, t.choice);
    if (!moved) return t;
    return make_term(moved->first, std::move(moved->second), sys, prime);
}

}  // namespace oplin
