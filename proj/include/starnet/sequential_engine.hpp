#pragma once

#include <cstddef>
#include <vector>

#include "starnet/chain_observables.hpp"
#include "starnet/network_model.hpp"
#include "starnet/qops.hpp"

namespace starnet {

/// Two-outcome unsharp measurement of a qubit observable.
struct KrausPair {
    ComplexMatrix plus;
    ComplexMatrix minus;
    double lambda = 1.0;
};

/// Per-position unsharpness values. Symmetric: the value at position j is
/// used on every edge. Asymmetric: it is used on edge 1 only and every other
/// edge party measures sharply.
class UnsharpnessSchedule {
public:
    /// Throws std::invalid_argument on an empty list or any value outside [0, 1].
    UnsharpnessSchedule(SharingMode mode, std::vector<double> lambdas);

    SharingMode mode() const noexcept { return mode_; }
    const std::vector<double>& lambdas() const noexcept { return lambdas_; }
    std::size_t size() const noexcept { return lambdas_.size(); }

private:
    SharingMode mode_;
    std::vector<double> lambdas_;
};

void check_lambda(double lambda);

/// M_pm = sqrt((1 +- l)/2) P_+ + sqrt((1 -+ l)/2) P_-, P_pm = (I +- A)/2.
KrausPair kraus_pair(const Observable& obs, double lambda);

/// Quality factor F(l) = (1 + sqrt(1 - l^2)) / 2 by which x-z correlations of
/// the measured qubit survive one input-averaged unsharp measurement.
double degradation_factor(double lambda);

/// Post-measurement edge state after an unsharp measurement of a uniformly
/// random input on the edge qubit, outcome discarded:
///   rho' = F rho + (1 - F) (1/m) sum_x (A_x (x) I) rho (A_x (x) I).
EdgeState unsharp_channel(const EdgeState& state, const ChainFamily& family, double lambda);

/// Same channel built term by term from the 2m Kraus operators.
EdgeState unsharp_channel_kraus(const EdgeState& state, const ChainFamily& family, double lambda);

/// lambda * <alice_pair (x) bob>.
double measured_correlation(const EdgeState& state, const ComplexMatrix& alice_pair, const Observable& bob,
                            double lambda);

/// One report per sequence position, simulated on explicit density operators.
std::vector<CorrelationReport> simulate_sequence(const ScenarioConfig& config, const UnsharpnessSchedule& schedule,
                                                 const ChainFamily& alice, const BobFamily& bob);

/// g_k = lambda_k prod_{j<k} F(lambda_j) for one unsharp edge, 1-based k.
double degradation_multiplier(const UnsharpnessSchedule& schedule, std::size_t k);

/// Closed-form beta at 1-based position k: g_k^(e/n) * quantum_optimum(m),
/// with e = n (symmetric) or e = 1 (asymmetric).
double degradation_predict(const ScenarioConfig& config, const UnsharpnessSchedule& schedule, std::size_t k);

}  // namespace starnet
