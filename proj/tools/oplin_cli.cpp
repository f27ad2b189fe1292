#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oplin/cli.hpp"

namespace {

void add_system_flags(CLI::App* sub, oplin::cli::RunConfig& cfg) {
    sub->add_option("--system", cfg.system, "builtin name or JSON coefficient file");
    sub->add_option("--system-prime", cfg.system_prime, "second system p' (defaults to --system)");
    sub->add_option("--format", cfg.format, "table or records")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, oplin::cli::Format>{{"table", oplin::cli::Format::table},
                                                      {"records", oplin::cli::Format::records}}));
}

void add_method(CLI::App* sub, std::string& method) {
    sub->add_option("--method", method, "theorem1, theorem2, oracle or all")
        ->check(CLI::IsMember({"theorem1", "theorem2", "oracle", "all"}));
}

}  // namespace

int main(int argc, char** argv) {
    using oplin::cli::Command;
    oplin::cli::RunConfig cfg;
    std::string method;
    CLI::App app{"Linearization and connection coefficients of orthogonal polynomials via Motzkin paths"};
    app.require_subcommand(1);

    auto* lincoef = app.add_subcommand("lincoef", "coefficients a_{mn}^k of p_m p_n");
    add_system_flags(lincoef, cfg);
    lincoef->add_option("--m", cfg.m)->required();
    lincoef->add_option("--n", cfg.n)->required();
    add_method(lincoef, method);

    auto* connect = app.add_subcommand("connect", "coefficients b_{mk'}^n of p_m p'_{k'}");
    add_system_flags(connect, cfg);
    connect->add_option("--m", cfg.m)->required();
    connect->add_option("--k", cfg.k, "index k' of the p' factor")->required();
    add_method(connect, method);

    auto* verify = app.add_subcommand("verify", "compare the path formulas with the recurrence oracle");
    add_system_flags(verify, cfg);
    verify->add_option("--max", cfg.max, "check all m, n, k <= MAX")->required();
    add_method(verify, method);

    auto* positivity = app.add_subcommand("positivity", "hypothesis check and per-path sign certificate");
    add_system_flags(positivity, cfg);
    positivity->add_option("--m", cfg.m)->required();
    positivity->add_option("--n", cfg.n)->required();
    positivity->add_option("--k", cfg.k)->required();
    positivity->add_option("--window", cfg.window, "check hypotheses on indices 0..WINDOW");
    positivity->add_option("--corollary", cfg.corollary, "1, 2 or 3")->check(CLI::Range(1, 3));
    positivity->add_flag("--strict", cfg.strict, "strict inequalities (corollary 1)");

    auto* paths = app.add_subcommand("paths", "enumerate Motzkin paths with their weights");
    add_system_flags(paths, cfg);
    paths->add_option("--m", cfg.m)->required();
    paths->add_option("--n", cfg.n)->required();
    paths->add_option("--k", cfg.k)->required();
    paths->add_flag("--hh", cfg.generalized, "allow double horizontal steps");
    paths->add_option("--weights", cfg.weights, "t1, t2, merged or none")
        ->check(CLI::IsMember({"t1", "t2", "merged", "none"}));

    auto* moments = app.add_subcommand("moments", "moments mu_0..mu_MAX");
    add_system_flags(moments, cfg);
    moments->add_option("--max", cfg.max)->required();

    auto* symbolic = app.add_subcommand("symbolic", "path sums as polynomials in the indeterminates");
    add_system_flags(symbolic, cfg);
    symbolic->add_option("--m", cfg.m)->required();
    symbolic->add_option("--n", cfg.n)->required();
    symbolic->add_option("--k", cfg.k)->required();
    add_method(symbolic, method);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : oplin::cli::kExitInputError;
    }

    const std::pair<CLI::App*, Command> table[] = {
        {lincoef, Command::lincoef}, {connect, Command::connect}, {verify, Command::verify},
        {positivity, Command::positivity}, {paths, Command::paths}, {moments, Command::moments},
        {symbolic, Command::symbolic}};
    for (const auto& [sub, cmd] : table)
        if (sub->parsed()) cfg.command = cmd;
    cfg.method = !method.empty() ? method : cfg.command == Command::symbolic ? "theorem1" : "all";
    return oplin::cli::run(cfg, std::cout, std::cerr);
}
