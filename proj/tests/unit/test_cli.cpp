#include <gtest/gtest.h>

#include <sstream>

#include "oplin/cli.hpp"

using namespace oplin::cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_cli(const RunConfig& cfg) {
    std::ostringstream out, err;
    int status = run(cfg, out, err);
    return {status, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(OPLIN_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, LincoefTable) {
    RunConfig cfg;
    cfg.command = Command::lincoef;
    cfg.system = "chebyshev-like";
    cfg.m = 1;
    cfg.n = 1;
    cfg.method = "oracle";
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("0  1  1\n1  0  0\n2  1  1\n"), std::string::npos) << r.out;
}

TEST(Cli, RecordsAreOneJsonObjectPerLine) {
    RunConfig cfg;
    cfg.command = Command::moments;
    cfg.system = "hermite-like";
    cfg.max = 4;
    cfg.format = Format::records;
    auto r = run_cli(cfg);
    ASSERT_EQ(r.status, kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> mu;
    while (std::getline(lines, line)) mu.push_back(nlohmann::json::parse(line).at("mu").get<std::string>());
    EXPECT_EQ(mu, (std::vector<std::string>{"1", "0", "1", "0", "3"}));
}

TEST(Cli, Theorem1NeedsMonicSystem) {
    RunConfig cfg;
    cfg.command = Command::lincoef;
    cfg.system = sample("scaled-chebyshev.json");
    cfg.m = 1;
    cfg.n = 2;
    cfg.method = "theorem1";
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitInputError);
    EXPECT_NE(r.err.find("not monic"), std::string::npos);
    cfg.method = "all";
    EXPECT_EQ(run_cli(cfg).status, kExitOk);  // oracle only
}

TEST(Cli, VerifyReportsBothPrefactorReadings) {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.system = sample("scaled-chebyshev.json");
    cfg.system_prime = sample("scaled-chebyshev-prime.json");
    cfg.max = 2;
    cfg.method = "theorem2";
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("theorem2 mismatches 0"), std::string::npos);
    EXPECT_NE(r.out.find("0  1  1  theorem2/gamma-k-prefactor"), std::string::npos);
    EXPECT_NE(r.out.find("gamma-k prefactor mismatches"), std::string::npos);
}

TEST(Cli, VerifyFlagsMonicPathSumBeyondDegreeRange) {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.system = "linear";
    cfg.max = 2;
    cfg.method = "theorem1";
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitMismatch);
    EXPECT_NE(r.out.find("0  0  2  theorem1/enumeration  1  NO"), std::string::npos) << r.out;
}

TEST(Cli, PositivityCertificate) {
    RunConfig cfg;
    cfg.command = Command::positivity;
    cfg.system = "linear";
    cfg.m = cfg.n = cfg.k = 3;
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("3:DHU  (b_2-b_1)*l_3 = 3  +"), std::string::npos);
    EXPECT_NE(r.out.find("coefficient 42"), std::string::npos);
    cfg.window = 4;
    EXPECT_EQ(run_cli(cfg).status, kExitInputError);
}

TEST(Cli, SymbolicExpansion) {
    RunConfig cfg;
    cfg.command = Command::symbolic;
    cfg.m = cfg.n = cfg.k = 3;
    cfg.method = "theorem1";
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("prefactor  l1*l2*l3"), std::string::npos);
    EXPECT_NE(r.out.find("3:HHH  (b_3-b_0)*(b_3-b_1)*(b_3-b_2)"), std::string::npos);
}

TEST(Cli, PathsListing) {
    RunConfig cfg;
    cfg.command = Command::paths;
    cfg.m = 0;
    cfg.n = 0;
    cfg.k = 4;
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("count 9"), std::string::npos);
    cfg.generalized = true;
    cfg.weights = "t1";
    cfg.system = "linear";
    EXPECT_EQ(run_cli(cfg).status, kExitInputError);
}

TEST(Cli, InputErrors) {
    RunConfig cfg;
    cfg.command = Command::lincoef;
    cfg.m = 1;
    cfg.n = 1;
    EXPECT_EQ(run_cli(cfg).status, kExitInputError);  // no system
    cfg.system = "/nonexistent.json";
    EXPECT_EQ(run_cli(cfg).status, kExitInputError);
    cfg.system = sample("legendre-monic.json");
    cfg.m = 15;
    cfg.n = 15;
    auto r = run_cli(cfg);
    EXPECT_EQ(r.status, kExitInputError);  // explicit list too short
    EXPECT_NE(r.err.find("range"), std::string::npos) << r.err;
}
