#include "starnet/sequential_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace starnet {

void check_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("unsharpness " + std::to_string(lambda) + " outside [0, 1]");
    }
}

UnsharpnessSchedule::UnsharpnessSchedule(SharingMode mode, std::vector<double> lambdas)
    : mode_(mode), lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw std::invalid_argument("UnsharpnessSchedule: empty schedule");
    for (double l : lambdas_) check_lambda(l);
}

KrausPair kraus_pair(const Observable& obs, double lambda) {
    check_lambda(lambda);
    if (obs.dim() != 2) throw std::invalid_argument("kraus_pair: expected a single-qubit observable");
    const ComplexMatrix id = pauli::identity(2);
    const ComplexMatrix proj_plus = (id + obs.matrix()) / 2.0;
    const ComplexMatrix proj_minus = (id - obs.matrix()) / 2.0;
    const double hi = std::sqrt((1.0 + lambda) / 2.0);
    const double lo = std::sqrt((1.0 - lambda) / 2.0);
    return KrausPair{hi * proj_plus + lo * proj_minus, lo * proj_plus + hi * proj_minus, lambda};
}

double degradation_factor(double lambda) {
    check_lambda(lambda);
    return 0.5 * (1.0 + std::sqrt(1.0 - lambda * lambda));
}

namespace {

// Re-symmetrise to absorb rounding before DensityOperator validation.
EdgeState make_edge(const ComplexMatrix& rho) {
    return EdgeState(DensityOperator(ComplexMatrix(0.5 * (rho + rho.adjoint()))));
}

}  // namespace

EdgeState unsharp_channel(const EdgeState& state, const ChainFamily& family, double lambda) {
    const double f = degradation_factor(lambda);
    const ComplexMatrix& rho = state.rho().matrix();
    const ComplexMatrix id = pauli::identity(2);
    ComplexMatrix flipped = ComplexMatrix::Zero(4, 4);
    for (const auto& a : family.observables()) {
        const ComplexMatrix op = tensor({a.matrix(), id});
        flipped += op * rho * op;
    }
    flipped /= static_cast<double>(family.m());
    return make_edge(f * rho + (1.0 - f) * flipped);
}

EdgeState unsharp_channel_kraus(const EdgeState& state, const ChainFamily& family, double lambda) {
    check_lambda(lambda);
    const ComplexMatrix& rho = state.rho().matrix();
    const ComplexMatrix id = pauli::identity(2);
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (const auto& a : family.observables()) {
        const KrausPair k = kraus_pair(a, lambda);
        for (const ComplexMatrix* op : {&k.plus, &k.minus}) {
            const ComplexMatrix full = tensor({*op, id});
            out += full * rho * full.adjoint();
        }
    }
    out /= static_cast<double>(family.m());
    return make_edge(out);
}

double measured_correlation(const EdgeState& state, const ComplexMatrix& alice_pair, const Observable& bob,
                            double lambda) {
    check_lambda(lambda);
    return lambda * expectation(state.rho(), tensor({alice_pair, bob.matrix()}));
}

std::vector<CorrelationReport> simulate_sequence(const ScenarioConfig& config, const UnsharpnessSchedule& schedule,
                                                 const ChainFamily& alice, const BobFamily& bob) {
    config.validate();
    if (schedule.mode() != config.mode) {
        throw std::invalid_argument("simulate_sequence: schedule mode does not match scenario mode");
    }
    if (alice.m() != config.m || bob.m() != config.m) {
        throw std::invalid_argument("simulate_sequence: observable families do not have m inputs");
    }
    const std::size_t evolving = config.mode == SharingMode::Symmetric ? config.n : 1;

    // Sharp edges keep the source state; only sequentially measured edges evolve.
    std::vector<EdgeState> edges(config.n, phi_plus_state());
    std::vector<CorrelationReport> reports;
    reports.reserve(schedule.size());

    for (double lambda : schedule.lambdas()) {
        std::vector<double> Js(config.m);
        for (std::size_t i = 0; i < config.m; ++i) {
            const ComplexMatrix pair = alice.pair_sum(i);
            double prod = 1.0;
            for (std::size_t l = 0; l < config.n; ++l) {
                const double readout = l < evolving ? lambda : 1.0;
                prod *= measured_correlation(edges[l], pair, bob.observables()[i], readout);
            }
            Js[i] = prod;
        }
        reports.push_back(beta_value(config, Js));
        for (std::size_t l = 0; l < evolving; ++l) edges[l] = unsharp_channel(edges[l], alice, lambda);
    }
    return reports;
}

double degradation_multiplier(const UnsharpnessSchedule& schedule, std::size_t k) {
    if (k < 1 || k > schedule.size()) {
        throw std::out_of_range("sequence position " + std::to_string(k) + " outside 1.." +
                                std::to_string(schedule.size()));
    }
    const auto& l = schedule.lambdas();
    double g = l[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) g *= degradation_factor(l[j]);
    return g;
}

double degradation_predict(const ScenarioConfig& config, const UnsharpnessSchedule& schedule, std::size_t k) {
    config.validate();
    const double g = degradation_multiplier(schedule, k);
    const double e = schedule.mode() == SharingMode::Symmetric ? static_cast<double>(config.n) : 1.0;
    return std::pow(g, e / static_cast<double>(config.n)) * quantum_optimum(config.m);
}

}  // namespace starnet
