// starnet: command-line front end for the star-network nonlocality toolkit.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "starnet/cli_reports.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t n_max = 0;
    std::string mode;
    std::string lambdas;
    std::size_t k = 0;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string out;
    std::string only;
    double perturb = 0.0;
};

}  // namespace

int main(int argc, char** argv) {
    using namespace starnet;

    CLI::App app{"Sharing of n-local chain nonlocality in star networks"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    auto* o_config = app.add_option("--config", f.config_path, "JSON file with RunConfig fields")->check(CLI::ExistingFile);
    auto* o_m = app.add_option("--m", f.m, "inputs per party");
    auto* o_n = app.add_option("--n", f.n, "number of sources / edge parties (table: first n)");
    auto* o_nmax = app.add_option("--n-max", f.n_max, "last n for capacity-table");
    auto* o_mode = app.add_option("--mode", f.mode, "sym | asym")->check(CLI::IsMember({"sym", "asym", "symmetric", "asymmetric"}));
    auto* o_lambdas = app.add_option("--lambdas", f.lambdas, "comma-separated unsharpness schedule");
    auto* o_k = app.add_option("--k", f.k, "sequence length limit / desired observer count");
    auto* o_restarts = app.add_option("--restarts", f.restarts, "optimizer restarts (optimum)");
    auto* o_seed = app.add_option("--seed", f.seed, "random seed");
    auto* o_output = app.add_option("--output", f.output, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    auto* o_out = app.add_option("--out", f.out, "write the report to this path");

    const std::map<std::string, std::string> help{
        {"optimum", "classical bound, quantum optimum and their ratio"},
        {"classical-bound", "classical bound by exhaustive deterministic enumeration"},
        {"simulate", "sequential unsharp observers for a given --lambdas schedule"},
        {"critical", "critical sharpness sequence with bisection cross-check"},
        {"capacity", "number of observers that can violate the inequality"},
        {"capacity-table", "capacity and critical values for n = --n .. --n-max"},
        {"bound", "conservative capacity bound and parties needed for --k observers"},
        {"verify", "run the built-in acceptance checks"},
    };
    for (const auto& name : command_names()) app.add_subcommand(name, help.count(name) ? help.at(name) : "");
    auto* verify = app.get_subcommand("verify");
    auto* o_only = verify->add_option("--only", f.only, "run a single check by name or number");
    auto* o_perturb = verify->add_option("--perturb-angle", f.perturb, "negative control: shift b_1 by this angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (*o_config) {
            std::ifstream in(f.config_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("config file: ") + e.what());
            }
            cfg = run_config_from_json(j);
        }
        cfg.command = app.get_subcommands().front()->get_name();
        if (*o_m) cfg.m = f.m;
        if (*o_n) cfg.n = f.n;
        if (*o_nmax) cfg.n_max = f.n_max;
        if (*o_mode) cfg.mode = parse_mode(f.mode);
        if (*o_lambdas) cfg.lambdas = parse_lambda_list(f.lambdas);
        if (*o_k) cfg.k = f.k;
        if (*o_restarts) cfg.restarts = f.restarts;
        if (*o_seed) cfg.seed = f.seed;
        if (*o_output) cfg.output = f.output == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        if (*o_out) cfg.out_path = f.out;
        if (*o_only) cfg.only = f.only;
        if (*o_perturb) cfg.perturb_angle = f.perturb;

        const Report report = execute(cfg);
        const std::string text = render(report, cfg.output);
        if (cfg.out_path) {
            std::ofstream os(*cfg.out_path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot open " + *cfg.out_path);
            os << text;
        } else {
            std::cout << text;
        }
        if (!report.summary.empty()) std::cerr << report.summary;
        return report.success ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
