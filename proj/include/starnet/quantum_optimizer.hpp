#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starnet/chain_observables.hpp"
#include "starnet/network_model.hpp"

namespace starnet {

/// x-z plane measurement angles. Alice's angles are shared by all edges.
struct AngleConfiguration {
    std::vector<double> alice_angles;
    std::vector<double> bob_angles;
};

/// Angle reduced to [0, 2 pi).
double wrap_angle(double theta);

/// Optimal construction: theta_i = (i-1) pi / m, Bob on the bisectors.
AngleConfiguration optimal_angles(std::size_t m);

/// beta of the n-local chain expression with |Phi+> on every edge.
double beta_of_angles(const ScenarioConfig& config, const AngleConfiguration& angles);

struct OptimizerOptions {
    std::size_t restarts = 50;
    std::uint64_t seed = 1;
    std::size_t max_sweeps = 200;
    std::size_t scan_points = 48;   // coarse bracket per coordinate
    double tolerance = 1e-9;        // golden-section interval width
};

struct OptimizationResult {
    AngleConfiguration angles;
    double value = 0.0;
};

/// Coordinate ascent over all 2m angles with seeded random restarts; each
/// coordinate update scans a coarse grid and refines by golden-section
/// search. Deterministic for a fixed seed.
OptimizationResult optimize_angles(const ScenarioConfig& config, const OptimizerOptions& options);

/// ||(A_i + A_{i+1}) (x) I |Phi+>||_2 for the equally spaced family.
std::vector<double> omega_values(std::size_t m);

/// ||((A_i + A_{i+1}) / omega_i (x) I - I (x) b_i) |Phi+>||_2 per input.
std::vector<double> sos_residual(const ChainFamily& alice, const BobFamily& bob);
std::vector<double> sos_residual(std::size_t m);

}  // namespace starnet
