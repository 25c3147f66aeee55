#include "starnet/capacity_analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "starnet/chain_observables.hpp"
#include "starnet/sequential_engine.hpp"

namespace starnet {

double classical_quantum_ratio(std::size_t m) { return classical_bound(m) / quantum_optimum(m); }

double initial_threshold(std::size_t m, std::size_t n, SharingMode mode) {
    ScenarioConfig{n, m, mode}.validate();
    const double r = classical_quantum_ratio(m);
    return mode == SharingMode::Symmetric ? r : std::pow(r, static_cast<double>(n));
}

double next_critical(double previous) {
    check_lambda(previous);
    return 2.0 * previous / (1.0 + std::sqrt(1.0 - previous * previous));
}

CapacityResult critical_sequence(std::size_t m, std::size_t n, SharingMode mode, std::size_t k_limit) {
    if (k_limit < 1) throw std::invalid_argument("critical_sequence: k_limit must be >= 1");
    CapacityResult out;
    out.m = m;
    out.n = n;
    out.mode = mode;
    double lambda = initial_threshold(m, n, mode);
    while (lambda <= 1.0) {
        if (out.critical_lambdas.size() == k_limit) break;
        out.critical_lambdas.push_back(lambda);
        lambda = next_critical(lambda);
    }
    if (lambda > 1.0) out.first_infeasible_lambda = lambda;
    out.k_max = out.critical_lambdas.size();
    return out;
}

std::size_t capacity(std::size_t m, std::size_t n, SharingMode mode) {
    const CapacityResult res = critical_sequence(m, n, mode, kMaxSequenceLength);
    if (!res.first_infeasible_lambda) {
        throw std::length_error("capacity: sequence for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                " exceeds " + std::to_string(kMaxSequenceLength) + " observers");
    }
    return res.k_max;
}

std::size_t conservative_capacity_bound(std::size_t m, std::size_t n) {
    ScenarioConfig{n, m, SharingMode::Asymmetric}.validate();
    const double inv_r = 1.0 / classical_quantum_ratio(m);
    // Slack so exact powers such as (sqrt 2)^4 = 4 survive rounding.
    return static_cast<std::size_t>(std::floor(std::pow(inv_r, 2.0 * static_cast<double>(n)) + 1e-9));
}

std::size_t required_parties(std::size_t m, std::size_t k) {
    if (k < 1) throw std::invalid_argument("required_parties: k must be >= 1");
    const double log_inv_r = std::log(1.0 / classical_quantum_ratio(m));
    const double raw = std::ceil(std::log(static_cast<double>(k)) / (2.0 * log_inv_r) - 1e-9);
    return std::max<std::size_t>(2, static_cast<std::size_t>(raw));
}

std::optional<double> critical_bisection(std::size_t m, std::size_t n, SharingMode mode, std::size_t k,
                                         std::span<const double> prior_lambdas, double tol) {
    if (k < 1 || prior_lambdas.size() != k - 1) {
        throw std::invalid_argument("critical_bisection: need exactly k-1 prior unsharpness values");
    }
    const ScenarioConfig config{n, m, mode};
    config.validate();
    const ChainFamily alice = alice_family(m);
    const BobFamily bob = bob_family(alice);
    const double bound = classical_bound(m);

    std::vector<double> lambdas(prior_lambdas.begin(), prior_lambdas.end());
    lambdas.push_back(1.0);
    auto beta_at = [&](double lambda) {
        lambdas.back() = lambda;
        return simulate_sequence(config, UnsharpnessSchedule(mode, lambdas), alice, bob).back().beta;
    };

    if (beta_at(1.0) < bound) return std::nullopt;
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (beta_at(mid) >= bound) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace starnet
