#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "starnet/network_model.hpp"

namespace starnet {

/// Bad arguments or configuration; the CLI maps this to exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string command;
    std::size_t m = 3;
    std::size_t n = 2;
    std::optional<std::size_t> n_max;
    SharingMode mode = SharingMode::Asymmetric;
    std::vector<double> lambdas;
    std::optional<std::size_t> k;
    std::size_t restarts = 0;
    std::uint64_t seed = 1;
    OutputFormat output = OutputFormat::Json;
    std::optional<std::string> out_path;
    // verify only
    std::string only;
    double perturb_angle = 0.0;
};

const std::vector<std::string>& command_names();

/// Reads the keys of RunConfig from a JSON object; unknown keys are rejected.
RunConfig run_config_from_json(const nlohmann::json& j, RunConfig base = {});

/// Throws UsageError describing the first invalid field.
void validate(const RunConfig& cfg);

std::vector<double> parse_lambda_list(const std::string& text);

struct Report {
    nlohmann::json json;      // {command, parameters, results, tool_version}
    std::string csv;          // header + rows, LF terminated
    bool success = true;      // false when verify has a failing check
    std::string summary;      // human-readable pass/fail table (verify only)
};

/// Validates and runs one command.
Report execute(const RunConfig& cfg);

std::string render(const Report& report, OutputFormat format);

/// Ten significant digits, shortest form ("%.10g").
std::string format_number(double v);

const char* tool_version();

}  // namespace starnet
