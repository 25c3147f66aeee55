#include "starnet/network_model.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace starnet {

std::string_view to_string(SharingMode mode) {
    return mode == SharingMode::Symmetric ? "symmetric" : "asymmetric";
}

SharingMode parse_mode(std::string_view text) {
    if (text == "sym" || text == "symmetric") return SharingMode::Symmetric;
    if (text == "asym" || text == "asymmetric") return SharingMode::Asymmetric;
    throw std::invalid_argument("unknown sharing mode '" + std::string(text) + "'");
}

void ScenarioConfig::validate() const {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
}

EdgeState::EdgeState(DensityOperator rho) : rho_(std::move(rho)) {
    if (rho_.dim() != 4) throw std::invalid_argument("EdgeState: expected a two-qubit state");
}

EdgeState phi_plus_state() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = psi(3) = 1.0 / std::numbers::sqrt2;
    return EdgeState(DensityOperator(pure_state_projector(psi)));
}

EdgeState maximally_mixed_edge() { return EdgeState(DensityOperator(pauli::identity(4) / 4.0)); }

namespace {

void check_inputs(const ScenarioConfig& config, std::span<const EdgeState> edges,
                  const ChainFamily& alice, const BobFamily& bob, std::size_t i) {
    config.validate();
    if (edges.size() != config.n) {
        throw std::invalid_argument("correlation_J: expected " + std::to_string(config.n) + " edge states, got " +
                                    std::to_string(edges.size()));
    }
    if (alice.m() != config.m || bob.m() != config.m) {
        throw std::invalid_argument("correlation_J: observable families do not have m inputs");
    }
    if (i >= config.m) throw std::out_of_range("correlation_J: input index " + std::to_string(i));
}

}  // namespace

double edge_correlator(const EdgeState& edge, const ChainFamily& alice, const BobFamily& bob, std::size_t i) {
    return expectation(edge.rho(), tensor({alice.pair_sum(i), bob.observables().at(i).matrix()}));
}

double correlation_J(const ScenarioConfig& config, std::span<const EdgeState> edges,
                     const ChainFamily& alice, const BobFamily& bob, std::size_t i) {
    check_inputs(config, edges, alice, bob, i);
    double prod = 1.0;
    for (const auto& edge : edges) prod *= edge_correlator(edge, alice, bob, i);
    return prod;
}

double correlation_J_joint(const ScenarioConfig& config, std::span<const EdgeState> edges,
                           const ChainFamily& alice, const BobFamily& bob, std::size_t i) {
    check_inputs(config, edges, alice, bob, i);
    if (config.n > 4) throw std::invalid_argument("correlation_J_joint: n > 4 is too large for a dense joint state");
    std::vector<ComplexMatrix> states;
    std::vector<ComplexMatrix> ops;
    const ComplexMatrix edge_op = tensor({alice.pair_sum(i), bob.observables()[i].matrix()});
    for (const auto& edge : edges) {
        states.push_back(edge.rho().matrix());
        ops.push_back(edge_op);
    }
    return expectation(DensityOperator(tensor(states)), tensor(ops));
}

CorrelationReport beta_value(const ScenarioConfig& config, std::span<const double> Js) {
    config.validate();
    if (Js.size() != config.m) {
        throw std::invalid_argument("beta_value: expected " + std::to_string(config.m) + " correlators");
    }
    CorrelationReport rep;
    rep.J.assign(Js.begin(), Js.end());
    const double inv_n = 1.0 / static_cast<double>(config.n);
    for (double j : Js) rep.beta += std::pow(std::abs(j), inv_n);
    rep.bound = classical_bound(config.m);
    rep.violated = rep.beta > rep.bound;
    return rep;
}

double classical_bound(std::size_t m) { return 2.0 * static_cast<double>(m) - 2.0; }

ClassicalOptimum classical_bound_enumerate(std::size_t n, std::size_t m) {
    if (n < 1 || m < 2) throw std::invalid_argument("classical_bound_enumerate: need n >= 1, m >= 2");
    if (m * n > kEnumerationGuard) {
        throw std::invalid_argument("classical_bound_enumerate: m*n = " + std::to_string(m * n) +
                                    " exceeds enumeration guard " + std::to_string(kEnumerationGuard));
    }
    const std::uint64_t total = std::uint64_t{1} << (m * n);
    const double inv_n = 1.0 / static_cast<double>(n);

    // Bit (l*m + x) set means s^l_x = -1.
    auto sign = [m](std::uint64_t mask, std::size_t l, std::size_t x) -> int {
        if (x == m) return -(((mask >> (l * m)) & 1U) ? -1 : 1);
        return ((mask >> (l * m + x)) & 1U) ? -1 : 1;
    };

    double best = -1.0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double value = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double prod = 1.0;
            for (std::size_t l = 0; l < n && prod != 0.0; ++l) {
                prod *= std::abs(sign(mask, l, i) + sign(mask, l, i + 1));
            }
            value += std::pow(prod, inv_n);
        }
        if (value > best) {
            best = value;
            best_mask = mask;
        }
    }

    ClassicalOptimum out;
    out.value = best;
    out.signs.assign(n, std::vector<int>(m));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t x = 0; x < m; ++x) out.signs[l][x] = sign(best_mask, l, x);
    return out;
}

double quantum_optimum(std::size_t m) {
    if (m < 2) throw std::invalid_argument("quantum_optimum: m must be >= 2");
    const double md = static_cast<double>(m);
    return 2.0 * md * std::cos(std::numbers::pi / (2.0 * md));
}

}  // namespace starnet
