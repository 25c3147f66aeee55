#include "starnet/cli_reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "starnet/capacity_analysis.hpp"
#include "starnet/chain_observables.hpp"
#include "starnet/quantum_optimizer.hpp"
#include "starnet/sequential_engine.hpp"
#include "starnet/verify.hpp"

namespace starnet {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxTableN = 16;

// Round to ten significant digits so JSON output is byte-stable.
double sig10(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_number(v).c_str(), nullptr);
}

json sig10(const std::vector<double>& vs) {
    json arr = json::array();
    for (double v : vs) arr.push_back(sig10(v));
    return arr;
}

Report make_report(json results, std::string csv) {
    Report r;
    r.json["results"] = std::move(results);
    r.csv = std::move(csv);
    return r;
}

std::string mode_flag(SharingMode mode) { return mode == SharingMode::Symmetric ? "sym" : "asym"; }

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : width_(header.size()) { add(std::move(header)); }

    void add(std::vector<std::string> row) {
        row.resize(std::max(row.size(), width_));
        rows_.push_back(std::move(row));
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t width_;
    std::vector<std::vector<std::string>> rows_;
};

json parameters_json(const RunConfig& cfg) {
    json p = json::object();
    p["m"] = cfg.m;
    p["n"] = cfg.n;
    if (cfg.command == "capacity-table") p["n_max"] = cfg.n_max.value_or(cfg.n);
    if (cfg.command == "simulate" || cfg.command == "critical" || cfg.command == "capacity" ||
        cfg.command == "capacity-table") {
        p["mode"] = mode_flag(cfg.mode);
    }
    if (cfg.command == "simulate") p["lambdas"] = sig10(cfg.lambdas);
    if (cfg.k) p["k"] = *cfg.k;
    if (cfg.command == "optimum") {
        p["restarts"] = cfg.restarts;
        p["seed"] = cfg.seed;
    }
    if (cfg.command == "verify") {
        p = json::object();
        p["only"] = cfg.only;
        p["perturb_angle"] = sig10(cfg.perturb_angle);
        p["seed"] = cfg.seed;
    }
    return p;
}

Report cmd_optimum(const RunConfig& cfg) {
    const double classical = classical_bound(cfg.m);
    const double quantum = quantum_optimum(cfg.m);
    json res;
    res["classical"] = sig10(classical);
    res["quantum"] = sig10(quantum);
    res["ratio"] = sig10(classical / quantum);
    res["margin"] = sig10(quantum - classical);
    CsvTable t({"m", "n", "classical", "quantum", "ratio", "margin"});
    std::vector<std::string> row{std::to_string(cfg.m), std::to_string(cfg.n), format_number(classical),
                                 format_number(quantum), format_number(classical / quantum),
                                 format_number(quantum - classical)};
    if (cfg.restarts > 0) {
        OptimizerOptions oo;
        oo.restarts = cfg.restarts;
        oo.seed = cfg.seed;
        const OptimizationResult best = optimize_angles(ScenarioConfig{cfg.n, cfg.m, cfg.mode}, oo);
        res["numerical"] = sig10(best.value);
        res["alice_angles"] = sig10(best.angles.alice_angles);
        res["bob_angles"] = sig10(best.angles.bob_angles);
        t = CsvTable({"m", "n", "classical", "quantum", "ratio", "margin", "numerical"});
        row.push_back(format_number(best.value));
    }
    t.add(std::move(row));
    return make_report(std::move(res), t.str());
}

Report cmd_classical_bound(const RunConfig& cfg) {
    const ClassicalOptimum best = classical_bound_enumerate(cfg.n, cfg.m);
    json res;
    res["enumerated"] = sig10(best.value);
    res["bound"] = sig10(classical_bound(cfg.m));
    res["attaining_signs"] = best.signs;
    CsvTable t({"m", "n", "enumerated", "bound"});
    t.add({std::to_string(cfg.m), std::to_string(cfg.n), format_number(best.value),
           format_number(classical_bound(cfg.m))});
    return make_report(std::move(res), t.str());
}

Report cmd_simulate(const RunConfig& cfg) {
    const ScenarioConfig scenario{cfg.n, cfg.m, cfg.mode};
    const UnsharpnessSchedule schedule(cfg.mode, cfg.lambdas);
    const ChainFamily alice = alice_family(cfg.m);
    const BobFamily bob = bob_family(alice);
    const auto reports = simulate_sequence(scenario, schedule, alice, bob);

    json records = json::array();
    CsvTable t({"k", "lambda", "beta_sim", "beta_closed_form", "delta", "violated"});
    double max_delta = 0.0;
    for (std::size_t k = 1; k <= reports.size(); ++k) {
        const double sim = reports[k - 1].beta;
        const double closed = degradation_predict(scenario, schedule, k);
        const double delta = std::abs(sim - closed);
        max_delta = std::max(max_delta, delta);
        json r;
        r["k"] = k;
        r["lambda"] = sig10(cfg.lambdas[k - 1]);
        r["beta_sim"] = sig10(sim);
        r["beta_closed_form"] = sig10(closed);
        r["delta"] = sig10(delta);
        r["violated"] = reports[k - 1].violated;
        records.push_back(r);
        t.add({std::to_string(k), format_number(cfg.lambdas[k - 1]), format_number(sim), format_number(closed),
               format_number(delta), reports[k - 1].violated ? "true" : "false"});
    }
    json res;
    res["bound"] = sig10(classical_bound(cfg.m));
    res["observers"] = records;
    res["max_delta"] = sig10(max_delta);
    return make_report(std::move(res), t.str());
}

Report cmd_critical(const RunConfig& cfg) {
    const CapacityResult cr = critical_sequence(cfg.m, cfg.n, cfg.mode, cfg.k.value_or(kMaxSequenceLength));
    json res;
    res["critical_lambdas"] = sig10(cr.critical_lambdas);
    res["k_max"] = cr.k_max;
    res["first_infeasible_lambda"] =
        cr.first_infeasible_lambda ? json(sig10(*cr.first_infeasible_lambda)) : json(nullptr);

    // Independent check of the first few positions by bisection over the simulation.
    const std::size_t checked = std::min<std::size_t>(cr.k_max, 8);
    json bis = json::array();
    CsvTable t({"k", "lambda_recursion", "lambda_bisection"});
    for (std::size_t k = 1; k <= cr.k_max; ++k) {
        std::string b;
        if (k <= checked) {
            const auto v = critical_bisection(cfg.m, cfg.n, cfg.mode, k,
                                              std::span<const double>(cr.critical_lambdas.data(), k - 1));
            bis.push_back(v ? json(sig10(*v)) : json(nullptr));
            b = v ? format_number(*v) : "";
        }
        t.add({std::to_string(k), format_number(cr.critical_lambdas[k - 1]), b});
    }
    res["bisection"] = bis;
    return make_report(std::move(res), t.str());
}

Report cmd_capacity(const RunConfig& cfg) {
    const std::size_t k = capacity(cfg.m, cfg.n, cfg.mode);
    json res;
    res["k_max"] = k;
    CsvTable t({"m", "n", "mode", "k_max"});
    t.add({std::to_string(cfg.m), std::to_string(cfg.n), mode_flag(cfg.mode), std::to_string(k)});
    return make_report(std::move(res), t.str());
}

Report cmd_capacity_table(const RunConfig& cfg) {
    const std::size_t n_max = cfg.n_max.value_or(cfg.n);
    std::vector<CapacityResult> rows;
    std::size_t widest = 0;
    for (std::size_t n = cfg.n; n <= n_max; ++n) {
        CapacityResult cr = critical_sequence(cfg.m, n, cfg.mode, kMaxSequenceLength);
        if (!cr.first_infeasible_lambda) {
            throw std::length_error("capacity-table: sequence exceeds " + std::to_string(kMaxSequenceLength));
        }
        widest = std::max(widest, cr.k_max);
        rows.push_back(std::move(cr));
    }
    std::vector<std::string> header{"n", "k_max"};
    for (std::size_t k = 1; k <= widest; ++k) header.push_back("lambda_" + std::to_string(k));
    CsvTable t(header);
    json jrows = json::array();
    for (const auto& cr : rows) {
        std::vector<std::string> row{std::to_string(cr.n), std::to_string(cr.k_max)};
        for (double l : cr.critical_lambdas) row.push_back(format_number(l));
        t.add(std::move(row));
        json jr;
        jr["n"] = cr.n;
        jr["k_max"] = cr.k_max;
        jr["critical_lambdas"] = sig10(cr.critical_lambdas);
        jr["first_infeasible_lambda"] = sig10(*cr.first_infeasible_lambda);
        jrows.push_back(jr);
    }
    json res;
    res["rows"] = jrows;
    return make_report(std::move(res), t.str());
}

Report cmd_bound(const RunConfig& cfg) {
    const std::size_t lower = conservative_capacity_bound(cfg.m, cfg.n);
    const std::size_t exact = capacity(cfg.m, cfg.n, SharingMode::Asymmetric);
    json res;
    res["conservative_capacity_bound"] = lower;
    res["exact_asymmetric_capacity"] = exact;
    std::vector<std::string> header{"m", "n", "conservative", "exact_asymmetric"};
    std::vector<std::string> row{std::to_string(cfg.m), std::to_string(cfg.n), std::to_string(lower),
                                 std::to_string(exact)};
    if (cfg.k) {
        const std::size_t parties = required_parties(cfg.m, *cfg.k);
        res["required_parties"] = parties;
        header.insert(header.end(), {"k", "required_parties"});
        row.insert(row.end(), {std::to_string(*cfg.k), std::to_string(parties)});
    }
    CsvTable t(header);
    t.add(row);
    return make_report(std::move(res), t.str());
}

Report cmd_verify(const RunConfig& cfg) {
    VerifyOptions vo;
    vo.only = cfg.only;
    vo.perturb_angle = cfg.perturb_angle;
    vo.seed = cfg.seed;
    const auto checks = run_verification(vo);

    Report rep;
    json arr = json::array();
    CsvTable t({"id", "name", "passed"});
    std::ostringstream summary;
    for (const auto& c : checks) {
        rep.success = rep.success && c.passed;
        arr.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"details", c.details}});
        t.add({std::to_string(c.id), c.name, c.passed ? "true" : "false"});
        summary << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << '\n';
        for (const auto& d : c.details) {
            if (!c.passed && d.rfind("FAIL", 0) == 0) summary << "         " << d << '\n';
        }
    }
    rep.json = {{"results", {{"checks", arr}, {"all_passed", rep.success}}}};
    rep.csv = t.str();
    rep.summary = summary.str();
    return rep;
}

}  // namespace

const char* tool_version() { return STARNET_VERSION; }

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"optimum",        "classical-bound", "simulate", "critical",
                                                   "capacity",       "capacity-table",  "bound",    "verify"};
    return names;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0') {
            throw UsageError("invalid unsharpness value '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

RunConfig run_config_from_json(const json& j, RunConfig cfg) {
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "command") cfg.command = value.get<std::string>();
            else if (key == "m") cfg.m = value.get<std::size_t>();
            else if (key == "n") cfg.n = value.get<std::size_t>();
            else if (key == "n_max") cfg.n_max = value.get<std::size_t>();
            else if (key == "mode") cfg.mode = parse_mode(value.get<std::string>());
            else if (key == "lambdas") cfg.lambdas = value.get<std::vector<double>>();
            else if (key == "k") cfg.k = value.get<std::size_t>();
            else if (key == "restarts") cfg.restarts = value.get<std::size_t>();
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "output_format" || key == "output") {
                const auto f = value.get<std::string>();
                if (f == "json") cfg.output = OutputFormat::Json;
                else if (f == "csv") cfg.output = OutputFormat::Csv;
                else throw UsageError("output format must be json or csv");
            } else if (key == "output_path" || key == "out") cfg.out_path = value.get<std::string>();
            else if (key == "only") cfg.only = value.get<std::string>();
            else if (key == "perturb_angle") cfg.perturb_angle = value.get<double>();
            else throw UsageError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("config file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), cfg.command) == names.end()) {
        throw UsageError("unknown command '" + cfg.command + "'");
    }
    if (cfg.command == "verify") return;
    if (cfg.m < 2) throw UsageError("--m must be >= 2");
    if (cfg.n < 2) throw UsageError("--n must be >= 2");
    for (double l : cfg.lambdas) {
        if (!(l >= 0.0 && l <= 1.0)) throw UsageError("unsharpness " + format_number(l) + " outside [0, 1]");
    }
    if (cfg.command == "simulate" && cfg.lambdas.empty()) throw UsageError("simulate requires --lambdas");
    if (cfg.command == "classical-bound" && cfg.m * cfg.n > kEnumerationGuard) {
        throw UsageError("classical-bound: m*n must be <= " + std::to_string(kEnumerationGuard));
    }
    if (cfg.command == "capacity-table") {
        const std::size_t n_max = cfg.n_max.value_or(cfg.n);
        if (n_max < cfg.n || n_max > kMaxTableN) {
            throw UsageError("capacity-table: need n <= n-max <= " + std::to_string(kMaxTableN));
        }
    }
    if (cfg.k && *cfg.k < 1) throw UsageError("--k must be >= 1");
}

Report execute(const RunConfig& cfg) {
    validate(cfg);
    Report rep;
    if (cfg.command == "optimum") rep = cmd_optimum(cfg);
    else if (cfg.command == "classical-bound") rep = cmd_classical_bound(cfg);
    else if (cfg.command == "simulate") rep = cmd_simulate(cfg);
    else if (cfg.command == "critical") rep = cmd_critical(cfg);
    else if (cfg.command == "capacity") rep = cmd_capacity(cfg);
    else if (cfg.command == "capacity-table") rep = cmd_capacity_table(cfg);
    else if (cfg.command == "bound") rep = cmd_bound(cfg);
    else rep = cmd_verify(cfg);

    json results = std::move(rep.json["results"]);
    rep.json = json::object();
    rep.json["command"] = cfg.command;
    rep.json["parameters"] = parameters_json(cfg);
    rep.json["results"] = std::move(results);
    rep.json["tool_version"] = tool_version();
    return rep;
}

std::string render(const Report& report, OutputFormat format) {
    if (format == OutputFormat::Csv) return report.csv;
    return report.json.dump(2) + "\n";
}

}  // namespace starnet
