#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "starnet/cli_reports.hpp"

namespace starnet {
namespace {

RunConfig make(std::string command, std::size_t m, std::size_t n) {
    RunConfig c;
    c.command = std::move(command);
    c.m = m;
    c.n = n;
    return c;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

TEST(CmdOptimum, ThreeInputs) {
    const Report r = execute(make("optimum", 3, 2));
    EXPECT_DOUBLE_EQ(r.json["results"]["classical"].get<double>(), 4.0);
    EXPECT_NEAR(r.json["results"]["quantum"].get<double>(), 5.19615, 1e-5);
    EXPECT_NEAR(r.json["results"]["ratio"].get<double>(), 0.76980, 1e-5);
}

TEST(CmdOptimum, FourInputs) {
    const Report r = execute(make("optimum", 4, 2));
    EXPECT_DOUBLE_EQ(r.json["results"]["classical"].get<double>(), 6.0);
    EXPECT_NEAR(r.json["results"]["quantum"].get<double>(), 7.39104, 1e-5);
}

TEST(CmdOptimum, InvalidMIsUsageError) { EXPECT_THROW(execute(make("optimum", 1, 2)), UsageError); }

TEST(CmdOptimum, WithOptimizer) {
    RunConfig c = make("optimum", 3, 2);
    c.restarts = 5;
    const Report r = execute(c);
    EXPECT_NEAR(r.json["results"]["numerical"].get<double>(), 5.196152423, 1e-8);
}

TEST(Report, TopLevelShape) {
    for (const auto& cmd : {"optimum", "classical-bound", "critical", "capacity", "capacity-table", "bound"}) {
        const Report r = execute(make(cmd, 3, 2));
        for (const auto* key : {"command", "parameters", "results", "tool_version"}) {
            EXPECT_TRUE(r.json.contains(key)) << cmd << " lacks " << key;
        }
        EXPECT_EQ(r.json["command"], cmd);
        EXPECT_FALSE(r.csv.empty());
        EXPECT_EQ(r.csv.find('\r'), std::string::npos);
        EXPECT_EQ(r.csv.back(), '\n');
    }
}

TEST(Report, ByteStable) {
    RunConfig c = make("simulate", 4, 3);
    c.mode = SharingMode::Symmetric;
    c.lambdas = {0.91, 0.33, 1.0};
    EXPECT_EQ(render(execute(c), OutputFormat::Json), render(execute(c), OutputFormat::Json));
    EXPECT_EQ(render(execute(c), OutputFormat::Csv), render(execute(c), OutputFormat::Csv));
}

TEST(FormatNumber, TenSignificantDigits) {
    EXPECT_EQ(format_number(5.196152422706632), "5.196152423");
    EXPECT_EQ(format_number(4.0), "4");
    EXPECT_EQ(format_number(0.0), "0");
}

TEST(CmdCapacityTable, FourInputAsymmetric) {
    RunConfig c = make("capacity-table", 4, 3);
    c.n_max = 5;
    const auto rows = lines(execute(c).csv);
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[0].rfind("n,k_max,lambda_1,lambda_2,", 0), 0U);
    EXPECT_EQ(rows[1].rfind("3,5,", 0), 0U);
    EXPECT_EQ(rows[2].rfind("4,9,", 0), 0U);
    EXPECT_EQ(rows[3].rfind("5,14,", 0), 0U);
}

TEST(CmdCapacityTable, ThreeInputAsymmetric) {
    RunConfig c = make("capacity-table", 3, 2);
    c.n_max = 3;
    const auto rows = lines(execute(c).csv);
    EXPECT_EQ(rows[1].rfind("2,4,0.5925925926,", 0), 0U);
    EXPECT_EQ(rows[2].rfind("3,8,", 0), 0U);
}

TEST(CmdCapacityTable, FourInputSymmetricAllOne) {
    RunConfig c = make("capacity-table", 4, 2);
    c.n_max = 5;
    c.mode = SharingMode::Symmetric;
    const auto rows = lines(execute(c).csv);
    EXPECT_EQ(rows[0], "n,k_max,lambda_1");
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i], std::to_string(i + 1) + ",1,0.8117941502");
}

TEST(CmdCapacityTable, RangeValidation) {
    RunConfig c = make("capacity-table", 3, 2);
    c.n_max = 17;
    EXPECT_THROW(execute(c), UsageError);
    c.n_max = 1;
    EXPECT_THROW(execute(c), UsageError);
}

TEST(CmdSimulate, ClosedFormAgreement) {
    RunConfig c = make("simulate", 3, 2);
    c.lambdas = {0.7, 0.8};
    const Report r = execute(c);
    for (const auto& obs : r.json["results"]["observers"]) {
        EXPECT_NEAR(obs["beta_sim"].get<double>(), obs["beta_closed_form"].get<double>(), 1e-9);
    }
    EXPECT_LE(r.json["results"]["max_delta"].get<double>(), 1e-10);
}

TEST(CmdSimulate, SharpAndZero) {
    RunConfig c = make("simulate", 3, 2);
    c.lambdas = {1.0};
    EXPECT_NEAR(execute(c).json["results"]["observers"][0]["beta_sim"].get<double>(), 5.19615, 1e-5);

    c.mode = SharingMode::Symmetric;
    c.lambdas = {0.0};
    const auto obs = execute(c).json["results"]["observers"][0];
    EXPECT_DOUBLE_EQ(obs["beta_sim"].get<double>(), 0.0);
    EXPECT_FALSE(obs["violated"].get<bool>());
}

TEST(CmdSimulate, ValidationErrors) {
    RunConfig c = make("simulate", 3, 2);
    EXPECT_THROW(execute(c), UsageError);  // no schedule
    c.lambdas = {0.5, 1.2};
    EXPECT_THROW(execute(c), UsageError);
}

TEST(CmdCritical, IncludesBisectionCrossCheck) {
    RunConfig c = make("critical", 3, 2);
    const Report r = execute(c);
    const auto& res = r.json["results"];
    EXPECT_EQ(res["k_max"].get<std::size_t>(), 4U);
    ASSERT_EQ(res["bisection"].size(), 4U);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(res["bisection"][k].get<double>(), res["critical_lambdas"][k].get<double>(), 1e-5);
    }
}

TEST(CmdBound, RequiredParties) {
    RunConfig c = make("bound", 3, 3);
    c.k = 7;
    const Report r = execute(c);
    EXPECT_EQ(r.json["results"]["required_parties"].get<std::size_t>(), 4U);
    EXPECT_EQ(r.json["results"]["conservative_capacity_bound"].get<std::size_t>(), 4U);
}

TEST(CmdVerify, SubsetAndNegativeControl) {
    RunConfig c;
    c.command = "verify";
    c.only = "certificates";
    Report r = execute(c);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.json["results"]["checks"].size(), 1U);

    c.only = "optimum";
    c.perturb_angle = 0.1;
    r = execute(c);
    EXPECT_FALSE(r.success);

    c.only = "nonexistent";
    EXPECT_THROW(execute(c), std::invalid_argument);
}

TEST(RunConfigJson, ParsesAndRejectsUnknownKeys) {
    const auto j = nlohmann::json::parse(R"({"command":"simulate","m":4,"n":3,"mode":"sym",
        "lambdas":[0.9,0.95],"output_format":"csv","seed":7})");
    const RunConfig c = run_config_from_json(j);
    EXPECT_EQ(c.command, "simulate");
    EXPECT_EQ(c.m, 4U);
    EXPECT_EQ(c.mode, SharingMode::Symmetric);
    EXPECT_EQ(c.lambdas.size(), 2U);
    EXPECT_EQ(c.output, OutputFormat::Csv);
    EXPECT_THROW(run_config_from_json(nlohmann::json::parse(R"({"bogus":1})")), UsageError);
    EXPECT_THROW(run_config_from_json(nlohmann::json::parse(R"({"mode":"both"})")), UsageError);
}

TEST(ParseLambdaList, Values) {
    EXPECT_EQ(parse_lambda_list("0.5,1,0.25"), (std::vector<double>{0.5, 1.0, 0.25}));
    EXPECT_THROW(parse_lambda_list("0.5,,1"), UsageError);
    EXPECT_THROW(parse_lambda_list("0.5,abc"), UsageError);
}

}  // namespace
}  // namespace starnet
