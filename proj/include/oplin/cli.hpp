#pragma once

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oplin/config.hpp"
#include "oplin/errors.hpp"
#include "oplin/oracle.hpp"
#include "oplin/paths.hpp"
#include "oplin/positivity.hpp"
#include "oplin/recurrence.hpp"
#include "oplin/weights.hpp"

// Batch command surface shared by the `oplin` executable and the tests.

namespace oplin::cli {

enum class Command { lincoef, connect, verify, positivity, paths, moments, symbolic };
enum class Format { table, records };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
    Command command = Command::verify;
    std::optional<std::string> system;        // builtin name or file
    std::optional<std::string> system_prime;  // defaults to `system`
    std::optional<unsigned> m, n, k, max;
    std::string method = "all";  // theorem1 | theorem2 | oracle | all
    Format format = Format::table;
    std::optional<unsigned> window;
    bool strict = false;
    bool generalized = false;           // paths: allow HH steps
    std::optional<std::string> weights;  // paths: t1 | t2 | merged | none
    std::optional<int> corollary;        // positivity: 1, 2 or 3
};

inline std::optional<Command> parse_command(const std::string& s) {
    if (s == "lincoef") return Command::lincoef;
    if (s == "connect") return Command::connect;
    if (s == "verify") return Command::verify;
    if (s == "positivity") return Command::positivity;
    if (s == "paths") return Command::paths;
    if (s == "moments") return Command::moments;
    if (s == "symbolic") return Command::symbolic;
    return std::nullopt;
}

namespace detail {

using nlohmann::json;

inline unsigned need(const std::optional<unsigned>& v, const char* flag) {
    if (!v) throw InputError(std::string("missing --") + flag);
    return *v;
}

/// Emits rows either as whitespace-separated columns or as one JSON object
/// per line with stable keys.
class Sink {
public:
    Sink(std::ostream& out, Format f) : out_(out), format_(f) {}

    void comment(const std::string& s) {
        if (format_ == Format::table) out_ << "# " << s << "\n";
    }
    void header(const std::vector<std::string>& cols) {
        if (format_ == Format::table) line(cols);
    }
    void row(const json& record, const std::vector<std::string>& cols) {
        if (format_ == Format::table) {
            line(cols);
        } else {
            out_ << record.dump() << "\n";
        }
        out_.flush();
    }
    void text(const std::string& s) {
        if (format_ == Format::table) out_ << s << "\n";
    }

private:
    void line(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "  " : "") << cols[i];
        out_ << "\n";
    }

    std::ostream& out_;
    Format format_;
};

inline bool wants(const std::string& method, const char* name) { return method == "all" || method == name; }

inline void check_method(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.method == "all") return;
    for (const char* a : allowed)
        if (cfg.method == a) return;
    throw InputError("method '" + cfg.method + "' does not apply to this command");
}

template <ExactRing R>
class Runner {
public:
    Runner(const RunConfig& cfg, const SystemSpec& spec, const SystemSpec& prime_spec, std::ostream& out)
        : cfg_(cfg), spec_(spec), prime_spec_(prime_spec), sink_(out, cfg.format) {}

    int run() {
        switch (cfg_.command) {
            case Command::lincoef: return lincoef();
            case Command::connect: return connect();
            case Command::verify: return verify();
            case Command::positivity: return positivity();
            case Command::paths: return paths();
            case Command::moments: return moments();
            case Command::symbolic: return symbolic();
        }
        return kExitInputError;
    }

private:
    CoefficientSystem<R> system(unsigned needed) const {
        return spec_.template materialize<R>(spec_.range.value_or(needed));
    }
    CoefficientSystem<R> prime(unsigned needed) const {
        return prime_spec_.template materialize<R>(prime_spec_.range.value_or(needed));
    }
    MonicSystem<R> monic(unsigned needed) const {
        return spec_.template materialize_monic<R>(spec_.range.value_or(needed));
    }
    bool spec_is_monic(unsigned needed) const {
        if (spec_.form == SystemSpec::Form::monic) return true;
        return system(needed).is_monic();
    }

    int lincoef() {
        check_method(cfg_, {"oracle", "theorem1"});
        unsigned m = need(cfg_.m, "m"), n = need(cfg_.n, "n");
        unsigned top = m + n + 1;
        auto sys = system(top);
        bool with_t1 = wants(cfg_.method, "theorem1");
        std::optional<MonicSystem<R>> mon;
        if (with_t1) {
            if (cfg_.method == "all" && !spec_is_monic(top)) {
                with_t1 = false;
            } else {
                mon = monic(top);
            }
        }
        bool with_oracle = wants(cfg_.method, "oracle");
        sink_.comment("lincoef m=" + std::to_string(m) + " n=" + std::to_string(n) + " system=" + sys.label());
        std::vector<std::string> head{"k"};
        if (with_oracle) head.insert(head.end(), {"a_{mn}^k", "L(p_m p_n p_k)"});
        if (with_t1) head.insert(head.end(), {"theorem1_a", "theorem1_L"});
        if (with_oracle && with_t1) head.push_back("match");
        sink_.header(head);

        auto table = expand_product(m, n, sys);
        int status = kExitOk;
        unsigned lo = m > n ? m - n : n - m;
        for (unsigned k = lo; k <= m + n; ++k) {
            json rec{{"command", "lincoef"}, {"m", m}, {"n", n}, {"k", k}};
            std::vector<std::string> cols{std::to_string(k)};
            R oa = table.coefficient(k), ol = table.l_value(k);
            if (with_oracle) {
                rec["oracle_coefficient"] = oa.to_string();
                rec["oracle_l_value"] = ol.to_string();
                cols.insert(cols.end(), {oa.to_string(), ol.to_string()});
            }
            if (with_t1) {
                R tl = path_sum_t1(m, n, k, *mon).total;
                R ta = exact_div(tl, norm_squared(sys, k));
                rec["theorem1_coefficient"] = ta.to_string();
                rec["theorem1_l_value"] = tl.to_string();
                cols.insert(cols.end(), {ta.to_string(), tl.to_string()});
                if (with_oracle) {
                    bool ok = tl == ol;
                    rec["match"] = ok;
                    cols.push_back(ok ? "yes" : "NO");
                    if (!ok) status = kExitMismatch;
                }
            }
            sink_.row(rec, cols);
        }
        return status;
    }

    int connect() {
        check_method(cfg_, {"oracle", "theorem2"});
        unsigned m = need(cfg_.m, "m"), kp = need(cfg_.k, "k");
        unsigned top = m + kp + 1;
        auto sys = system(top);
        auto pr = prime(top);
        bool with_oracle = wants(cfg_.method, "oracle"), with_t2 = wants(cfg_.method, "theorem2");
        sink_.comment("connect m=" + std::to_string(m) + " k'=" + std::to_string(kp) + " system=" + sys.label() +
                      " system'=" + pr.label());
        std::vector<std::string> head{"n"};
        if (with_oracle) head.insert(head.end(), {"b_{mk}^n", "L(p_m p'_k p_n)"});
        if (with_t2) head.insert(head.end(), {"theorem2_b", "theorem2_L"});
        if (with_oracle && with_t2) head.push_back("match");
        sink_.header(head);
        auto table = mixed_expand(m, kp, sys, pr);
        int status = kExitOk;
        for (unsigned n = 0; n <= m + kp; ++n) {
            json rec{{"command", "connect"}, {"m", m}, {"k_prime", kp}, {"n", n}};
            std::vector<std::string> cols{std::to_string(n)};
            R ob = table.coefficient(n), ol = table.l_value(n);
            if (with_oracle) {
                rec["oracle_coefficient"] = ob.to_string();
                rec["oracle_l_value"] = ol.to_string();
                cols.insert(cols.end(), {ob.to_string(), ol.to_string()});
            }
            if (with_t2) {
                R tl = path_sum_t2(m, n, kp, sys, pr).total;
                R tb = exact_div(tl, norm_squared(sys, n));
                rec["theorem2_coefficient"] = tb.to_string();
                rec["theorem2_l_value"] = tl.to_string();
                cols.insert(cols.end(), {tb.to_string(), tl.to_string()});
                if (with_oracle) {
                    bool ok = tl == ol;
                    rec["match"] = ok;
                    cols.push_back(ok ? "yes" : "NO");
                    if (!ok) status = kExitMismatch;
                }
            }
            sink_.row(rec, cols);
        }
        return status;
    }

    void verify_row(unsigned m, unsigned n, unsigned k, const std::string& method, const R& value,
                    std::optional<bool> match, bool counted) {
        json rec{{"command", "verify"}, {"m", m}, {"n", n}, {"k", k}, {"method", method}, {"value", value.to_string()}};
        std::string flag = "-";
        if (match) {
            rec["match"] = *match;
            flag = *match ? "yes" : (counted ? "NO" : "no (reported only)");
        }
        rec["counted"] = counted;
        sink_.row(rec, {std::to_string(m), std::to_string(n), std::to_string(k), method, value.to_string(), flag});
    }

    int verify() {
        check_method(cfg_, {"oracle", "theorem1", "theorem2"});
        unsigned mx = need(cfg_.max, "max");
        unsigned top = 2 * mx + 1;
        auto sys = system(top);
        auto pr = prime(top);
        bool with_t1 = wants(cfg_.method, "theorem1");
        if (with_t1 && cfg_.method == "all" && !spec_is_monic(top)) with_t1 = false;
        std::optional<MonicSystem<R>> mon;
        if (with_t1) mon = monic(top);
        bool with_t2 = wants(cfg_.method, "theorem2");

        sink_.comment("verify max=" + std::to_string(mx) + " system=" + sys.label() + " system'=" + pr.label() +
                      " method=" + cfg_.method + (with_t1 ? "" : " (theorem1 skipped: system not monic)"));
        sink_.header({"m", "n", "k", "method", "value", "match"});
        unsigned count = 0, t1_bad = 0, t2_bad = 0, alt_bad = 0;
        std::optional<std::string> first_alt_bad;
        std::vector<std::string> t1_bad_list;
        for (unsigned m = 0; m <= mx; ++m)
            for (unsigned n = 0; n <= mx; ++n)
                for (unsigned k = 0; k <= mx; ++k) {
                    ++count;
                    if (with_t1) {
                        R oracle = triple_L(m, n, k, sys);
                        verify_row(m, n, k, "oracle/triple_L", oracle, std::nullopt, false);
                        auto ps = path_sum_t1(m, n, k, *mon);
                        R dp = ps.prefactor * dp_sum(m, n, k, WeightSystem::t1, mon->system(), mon->system());
                        bool ok_e = ps.total == oracle, ok_d = dp == oracle;
                        verify_row(m, n, k, "theorem1/enumeration", ps.total, ok_e, true);
                        verify_row(m, n, k, "theorem1/dp", dp, ok_d, true);
                        if (!ok_e || !ok_d) {
                            ++t1_bad;
                            t1_bad_list.push_back("(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                                  std::to_string(k) + ")");
                        }
                    }
                    if (with_t2) {
                        R oracle = mixed_L(m, n, k, sys, pr);
                        verify_row(m, n, k, "oracle/mixed_L", oracle, std::nullopt, false);
                        auto ps = path_sum_t2(m, n, k, sys, pr);
                        R dp = ps.prefactor * dp_sum(m, n, k, WeightSystem::t2, sys, pr);
                        R alt = prefactor_t2(m, k, sys, pr, PrefactorReading::gamma_through_k) * ps.path_sum;
                        bool ok_e = ps.total == oracle, ok_d = dp == oracle, ok_p = alt == oracle;
                        verify_row(m, n, k, "theorem2/enumeration", ps.total, ok_e, true);
                        verify_row(m, n, k, "theorem2/dp", dp, ok_d, true);
                        verify_row(m, n, k, "theorem2/gamma-k-prefactor", alt, ok_p, false);
                        if (!ok_e || !ok_d) ++t2_bad;
                        if (!ok_p) {
                            ++alt_bad;
                            if (!first_alt_bad)
                                first_alt_bad = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                                    std::to_string(k) + ")";
                        }
                    }
                    if (cfg_.method == "oracle") {
                        verify_row(m, n, k, "oracle/triple_L", triple_L(m, n, k, sys), std::nullopt, false);
                    }
                }
        json summary{{"command", "verify"},
                     {"summary", true},
                     {"instances", count},
                     {"theorem1_mismatches", t1_bad},
                     {"theorem2_mismatches", t2_bad},
                     {"gamma_k_prefactor_mismatches", alt_bad}};
        std::string text = "summary: " + std::to_string(count) + " instances; theorem1 mismatches " +
                           std::to_string(t1_bad) + "; theorem2 mismatches " + std::to_string(t2_bad) +
                           "; gamma-k prefactor mismatches " + std::to_string(alt_bad);
        if (first_alt_bad) {
            summary["gamma_k_prefactor_first_mismatch"] = *first_alt_bad;
            text += " (first at " + *first_alt_bad + ")";
        }
        if (!t1_bad_list.empty()) summary["theorem1_mismatch_instances"] = t1_bad_list;
        sink_.row(summary, {text});
        return (t1_bad || t2_bad) ? kExitMismatch : kExitOk;
    }

    int positivity() {
        if constexpr (ring_traits<R>::symbolic) {
            throw DomainError("positivity needs numeric coefficient systems");
        } else {
            unsigned m = need(cfg_.m, "m"), n = need(cfg_.n, "n"), k = need(cfg_.k, "k");
            int cor = cfg_.corollary.value_or(cfg_.system_prime ? 2 : 1);
            unsigned window = cfg_.window.value_or(required_window(m, n, k));
            unsigned top = std::max(window, m + n + k) + 1;
            PositivityCertificate cert;
            WeightSystem ws = WeightSystem::t1;
            if (cor == 1) {
                cert = certify_t1(m, n, k, monic(top), window, cfg_.strict);
            } else {
                cert = certify_t2(m, n, k, system(top), prime(top), window, cor);
                ws = WeightSystem::t2;
            }
            (void)ws;
            const auto& rep = cert.hypothesis;
            sink_.comment("positivity m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" +
                          std::to_string(k) + " corollary=" + std::to_string(cor) + " paths summed from (0," +
                          std::to_string(cert.path_m) + ") to (" + std::to_string(cert.path_k) + "," +
                          std::to_string(cert.path_n) + ")");
            std::string rep_text = render_report(rep);
            rep_text.pop_back();
            json rrec{{"command", "positivity"}, {"kind", "hypothesis"}, {"corollary", rep.corollary},
                      {"window", rep.window},    {"strict", rep.strict},   {"holds", rep.holds}};
            json viol = json::array();
            for (const auto& v : rep.violations)
                viol.push_back({{"relation", v.relation},
                                {"i", v.i},
                                {"j", v.j},
                                {"left", v.left.to_string()},
                                {"right", v.right.to_string()}});
            rrec["violations"] = viol;
            sink_.row(rrec, {rep_text});
            for (const auto& r : cert.per_path) {
                json rec{{"command", "positivity"}, {"kind", "path"},       {"path", r.path.to_string()},
                         {"formula", r.formula},    {"weight", r.weight.to_string()},
                         {"sign", std::string(1, sign_char(r.sign))}};
                sink_.row(rec, {render_row(r)});
            }
            json srec{{"command", "positivity"},
                      {"kind", "summary"},
                      {"path_sum", cert.path_sum.to_string()},
                      {"l_value", cert.l_value.to_string()},
                      {"coefficient", cert.coefficient.to_string()},
                      {"all_nonnegative", cert.all_nonnegative}};
            sink_.row(srec, {"sum " + cert.path_sum.to_string() + "  L " + cert.l_value.to_string() + "  coefficient " +
                             cert.coefficient.to_string() + "  all nonnegative: " +
                             (cert.all_nonnegative ? "yes" : "no")});
            return (rep.holds && !cert.all_nonnegative) ? kExitMismatch : kExitOk;
        }
    }

    int paths() {
        unsigned m = need(cfg_.m, "m"), n = need(cfg_.n, "n"), k = need(cfg_.k, "k");
        std::string ws_name = cfg_.weights.value_or(cfg_.system ? (cfg_.generalized ? "t2" : "t1") : "none");
        if (ws_name == "t1" && cfg_.generalized) throw InputError("t1 weights apply to plain paths only");
        auto enumerated = enumerate_paths(m, n, k, cfg_.generalized);
        unsigned top = m + n + k + 1;
        std::optional<MonicSystem<R>> mon;
        std::optional<CoefficientSystem<R>> sys, pr;
        WeightSystem ws = WeightSystem::unit;
        if (ws_name == "t1") {
            mon = monic(top);
            ws = WeightSystem::t1;
        } else if (ws_name == "t2" || ws_name == "merged") {
            sys = system(top);
            pr = prime(top);
            ws = ws_name == "t2" ? WeightSystem::t2 : WeightSystem::merged;
        } else if (ws_name != "none") {
            throw InputError("unknown weight system '" + ws_name + "'");
        }
        sink_.comment("paths from (0," + std::to_string(m) + ") to (" + std::to_string(k) + "," + std::to_string(n) +
                      ")" + (cfg_.generalized ? " with HH (written X)" : "") + " weights=" + ws_name);
        for (const auto& p : enumerated) {
            json rec{{"command", "paths"}, {"path", p.to_string()}};
            std::vector<std::string> cols{p.to_string()};
            if (ws != WeightSystem::unit) {
                std::string formula = render_path_formula(p, ws);
                R w = ws == WeightSystem::t1 ? path_weight<R>(p, ws, MonicValuation<R>(*mon))
                                             : path_weight<R>(p, ws, PairValuation<R>(*sys, *pr));
                rec["formula"] = formula;
                rec["weight"] = w.to_string();
                cols.insert(cols.end(), {formula, "=", w.to_string()});
            }
            sink_.row(rec, cols);
        }
        sink_.row(json{{"command", "paths"}, {"count", enumerated.size()}},
                  {"count " + std::to_string(enumerated.size())});
        return kExitOk;
    }

    int moments() {
        unsigned mx = cfg_.max ? *cfg_.max : need(cfg_.n, "max");
        auto sys = system(mx + 1);
        sink_.comment("moments system=" + sys.label());
        sink_.header({"n", "mu_n"});
        for (unsigned i = 0; i <= mx; ++i) {
            R mu = oplin::moments(i, sys);
            sink_.row(json{{"command", "moments"}, {"n", i}, {"mu", mu.to_string()}}, {std::to_string(i), mu.to_string()});
        }
        return kExitOk;
    }

    int symbolic() {
        check_method(cfg_, {"theorem1", "theorem2"});
        unsigned m = need(cfg_.m, "m"), n = need(cfg_.n, "n"), k = need(cfg_.k, "k");
        unsigned top = m + n + k + 1;
        bool t2 = cfg_.method == "theorem2";
        sink_.comment(std::string("symbolic ") + (t2 ? "theorem2" : "theorem1") + " m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " k=" + std::to_string(k));
        R sum(0);
        auto emit = [&](const Path& p, const std::string& formula, const R& w) {
            sink_.row(json{{"command", "symbolic"}, {"path", p.to_string()}, {"formula", formula},
                           {"expansion", w.to_string()}},
                      {p.to_string(), formula, "=", w.to_string()});
        };
        if (!t2) {
            auto mon = monic(top);
            auto ps = path_sum_t1(m, n, k, mon);
            for (const auto& [p, w] : ps.per_path) emit(p, render_path_formula(p, WeightSystem::t1), w);
            sink_.row(json{{"command", "symbolic"}, {"prefactor", ps.prefactor.to_string()}},
                      {"prefactor", ps.prefactor.to_string()});
            sink_.row(json{{"command", "symbolic"}, {"sum", ps.path_sum.to_string()}}, {"sum", ps.path_sum.to_string()});
            sink_.row(json{{"command", "symbolic"}, {"total", ps.total.to_string()}}, {"total", ps.total.to_string()});
        } else {
            auto sys = system(top);
            auto pr = prime(top);
            for (const auto& p : enumerate_paths(m, n, k, true)) {
                R w = weight_t2(p, sys, pr);
                sum = sum + w;
                emit(p, render_path_formula(p, WeightSystem::t2), w);
            }
            sink_.row(json{{"command", "symbolic"}, {"sum", sum.to_string()}}, {"sum", sum.to_string()});
        }
        return kExitOk;
    }

    const RunConfig& cfg_;
    const SystemSpec& spec_;
    const SystemSpec& prime_spec_;
    Sink sink_;
};

}  // namespace detail

/// Executes one command. Exit status: 0 success, 1 mismatch found, 2 invalid
/// input or configuration.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::string default_system = "symbolic";
        if (cfg.command == Command::symbolic && cfg.method == "theorem2") default_system = "symbolic-general";
        if (!cfg.system && cfg.command != Command::symbolic && cfg.command != Command::paths)
            throw InputError("missing --system");
        SystemSpec spec = resolve_system(cfg.system.value_or(default_system));
        SystemSpec prime_spec = spec;
        if (cfg.system_prime) {
            prime_spec = resolve_system(*cfg.system_prime);
        } else if (cfg.command == Command::symbolic && cfg.method == "theorem2" && !cfg.system) {
            prime_spec = *builtin_system("symbolic-prime");
        }
        if (spec.is_symbolic() || prime_spec.is_symbolic())
            return detail::Runner<Polynomial>(cfg, spec, prime_spec, out).run();
        if (cfg.command == Command::symbolic) throw DomainError("symbolic command needs a symbolic system");
        return detail::Runner<Rational>(cfg, spec, prime_spec, out).run();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace oplin::cli
