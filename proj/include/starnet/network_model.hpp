#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starnet/chain_observables.hpp"
#include "starnet/qops.hpp"

namespace starnet {

enum class SharingMode { Symmetric, Asymmetric };

std::string_view to_string(SharingMode mode);
/// Accepts "sym", "symmetric", "asym", "asymmetric".
SharingMode parse_mode(std::string_view text);

struct ScenarioConfig {
    std::size_t n = 2;  // sources == edge parties
    std::size_t m = 3;  // inputs per party
    SharingMode mode = SharingMode::Asymmetric;

    /// Throws std::invalid_argument unless n >= 2 and m >= 2.
    void validate() const;
};

/// Two-qubit state shared by one edge party (first factor) and the central
/// party (second factor).
class EdgeState {
public:
    explicit EdgeState(DensityOperator rho);

    const DensityOperator& rho() const noexcept { return rho_; }

private:
    DensityOperator rho_;
};

struct CorrelationReport {
    std::vector<double> J;
    double beta = 0.0;
    double bound = 0.0;
    bool violated = false;  // beta > bound
};

EdgeState phi_plus_state();
EdgeState maximally_mixed_edge();

/// Per-edge factor <(A_i + A_{i+1}) (x) b_i> on one edge state.
double edge_correlator(const EdgeState& edge, const ChainFamily& alice, const BobFamily& bob, std::size_t i);

/// J_i = prod_l <(A_i + A_{i+1}) (x) b_i>_l, 0-based i.
double correlation_J(const ScenarioConfig& config, std::span<const EdgeState> edges,
                     const ChainFamily& alice, const BobFamily& bob, std::size_t i);

/// Same quantity evaluated on the full tensor-product state of all edges
/// (dimension 4^n). Intended as a cross-check for small n.
double correlation_J_joint(const ScenarioConfig& config, std::span<const EdgeState> edges,
                           const ChainFamily& alice, const BobFamily& bob, std::size_t i);

/// beta = sum_i |J_i|^(1/n) against the n-local bound 2m - 2.
CorrelationReport beta_value(const ScenarioConfig& config, std::span<const double> Js);

double classical_bound(std::size_t m);

struct ClassicalOptimum {
    double value = 0.0;
    // signs[l][x] in {-1, +1}, one row per edge party.
    std::vector<std::vector<int>> signs;
};

inline constexpr std::size_t kEnumerationGuard = 24;

/// Exhaustive search over deterministic edge strategies. Throws
/// std::invalid_argument when m * n exceeds kEnumerationGuard.
ClassicalOptimum classical_bound_enumerate(std::size_t n, std::size_t m);

/// 2m cos(pi / 2m).
double quantum_optimum(std::size_t m);

}  // namespace starnet
