#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starnet/capacity_analysis.hpp"
#include "starnet/chain_observables.hpp"
#include "starnet/cli_reports.hpp"
#include "starnet/network_model.hpp"
#include "starnet/quantum_optimizer.hpp"
#include "starnet/sequential_engine.hpp"
#include "starnet/verify.hpp"

namespace py = pybind11;
using namespace starnet;

namespace {

std::vector<CorrelationReport> simulate_default(std::size_t m, std::size_t n, SharingMode mode,
                                                std::vector<double> lambdas) {
    const ChainFamily alice = alice_family(m);
    return simulate_sequence(ScenarioConfig{n, m, mode}, UnsharpnessSchedule(mode, std::move(lambdas)), alice,
                             bob_family(alice));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequential sharing of n-local chain nonlocality in star networks";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::enum_<SharingMode>(m, "SharingMode")
        .value("SYMMETRIC", SharingMode::Symmetric)
        .value("ASYMMETRIC", SharingMode::Asymmetric);

    m.def("pauli_plane_observable", [](double theta) { return pauli_plane_observable(theta).matrix(); },
          py::arg("theta"));
    m.def("alice_angles", [](std::size_t mm) { return alice_family(mm).angles(); }, py::arg("m"));
    m.def("bob_angles", [](std::size_t mm) { return bob_family(alice_family(mm)).angles(); }, py::arg("m"));
    m.def("anticommutator_table", [](std::size_t mm) { return anticommutator_table(alice_family(mm)); },
          py::arg("m"));

    py::class_<CorrelationReport>(m, "CorrelationReport")
        .def_readonly("J", &CorrelationReport::J)
        .def_readonly("beta", &CorrelationReport::beta)
        .def_readonly("bound", &CorrelationReport::bound)
        .def_readonly("violated", &CorrelationReport::violated);

    m.def("quantum_optimum", &quantum_optimum, py::arg("m"));
    m.def("classical_bound", &classical_bound, py::arg("m"));
    m.def("classical_bound_enumerate",
          [](std::size_t n, std::size_t mm) {
              const ClassicalOptimum c = classical_bound_enumerate(n, mm);
              return py::make_tuple(c.value, c.signs);
          },
          py::arg("n"), py::arg("m"));
    m.def("beta_value",
          [](std::size_t n, std::size_t mm, std::vector<double> js) {
              return beta_value(ScenarioConfig{n, mm}, js);
          },
          py::arg("n"), py::arg("m"), py::arg("J"));

    m.def("simulate_sequence", &simulate_default, py::arg("m"), py::arg("n"), py::arg("mode"), py::arg("lambdas"),
          "Simulate sequential unsharp observers on the optimal construction.");
    m.def("degradation_predict",
          [](std::size_t mm, std::size_t n, SharingMode mode, std::vector<double> lambdas, std::size_t k) {
              return degradation_predict(ScenarioConfig{n, mm, mode}, UnsharpnessSchedule(mode, std::move(lambdas)), k);
          },
          py::arg("m"), py::arg("n"), py::arg("mode"), py::arg("lambdas"), py::arg("k"));
    m.def("degradation_factor", &degradation_factor, py::arg("lam"));

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("m", &CapacityResult::m)
        .def_readonly("n", &CapacityResult::n)
        .def_readonly("mode", &CapacityResult::mode)
        .def_readonly("critical_lambdas", &CapacityResult::critical_lambdas)
        .def_readonly("k_max", &CapacityResult::k_max)
        .def_readonly("first_infeasible_lambda", &CapacityResult::first_infeasible_lambda);

    m.def("initial_threshold", &initial_threshold, py::arg("m"), py::arg("n"), py::arg("mode"));
    m.def("critical_sequence", &critical_sequence, py::arg("m"), py::arg("n"), py::arg("mode"),
          py::arg("k_limit") = kMaxSequenceLength);
    m.def("capacity", &capacity, py::arg("m"), py::arg("n"), py::arg("mode"));
    m.def("conservative_capacity_bound", &conservative_capacity_bound, py::arg("m"), py::arg("n"));
    m.def("required_parties", &required_parties, py::arg("m"), py::arg("k"));
    m.def("critical_bisection",
          [](std::size_t mm, std::size_t n, SharingMode mode, std::size_t k, std::vector<double> prior) {
              return critical_bisection(mm, n, mode, k, prior);
          },
          py::arg("m"), py::arg("n"), py::arg("mode"), py::arg("k"), py::arg("prior_lambdas"));

    m.def("optimize_angles",
          [](std::size_t mm, std::size_t n, std::size_t restarts, std::uint64_t seed) {
              OptimizerOptions o;
              o.restarts = restarts;
              o.seed = seed;
              const OptimizationResult r = optimize_angles(ScenarioConfig{n, mm}, o);
              return py::make_tuple(r.value, r.angles.alice_angles, r.angles.bob_angles);
          },
          py::arg("m"), py::arg("n"), py::arg("restarts") = 50, py::arg("seed") = 1);
    m.def("omega_values", &omega_values, py::arg("m"));
    m.def("sos_residual", py::overload_cast<std::size_t>(&sos_residual), py::arg("m"));

    m.def("verify",
          [](const std::string& only) {
              VerifyOptions o;
              o.only = only;
              py::list out;
              for (const auto& r : run_verification(o)) out.append(py::make_tuple(r.id, r.name, r.passed, r.details));
              return out;
          },
          py::arg("only") = "");

    m.def("run_json",
          [](const std::string& config_json) {
              const RunConfig cfg = run_config_from_json(nlohmann::json::parse(config_json));
              return render(execute(cfg), cfg.output);
          },
          py::arg("config_json"), "Run one CLI command from a JSON RunConfig and return the rendered report.");

    m.attr("__version__") = tool_version();
}
