#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "starnet/network_model.hpp"

namespace starnet {

struct CapacityResult {
    std::size_t m = 0;
    std::size_t n = 0;
    SharingMode mode = SharingMode::Asymmetric;
    std::vector<double> critical_lambdas;  // strictly increasing, all <= 1
    std::size_t k_max = 0;                 // == critical_lambdas.size()
    // First recursion value above 1; empty only when k_limit cut the run short.
    std::optional<double> first_infeasible_lambda;
};

inline constexpr std::size_t kMaxSequenceLength = 1'000'000;

/// r = (2m - 2) / (2m cos(pi / 2m)), the classical-to-quantum ratio.
double classical_quantum_ratio(std::size_t m);

/// Critical unsharpness of the first observer: r (symmetric) or r^n (asymmetric).
double initial_threshold(std::size_t m, std::size_t n, SharingMode mode);

/// Smallest lambda_k keeping observer k at the bound, given lambda_{k-1}:
/// 2 lambda / (1 + sqrt(1 - lambda^2)).
double next_critical(double previous);

/// Iterates next_critical from initial_threshold while the value stays <= 1,
/// recording at most k_limit entries.
CapacityResult critical_sequence(std::size_t m, std::size_t n, SharingMode mode,
                                 std::size_t k_limit = kMaxSequenceLength);

/// Number of sequential observers that can each violate the n-local bound.
/// Throws std::length_error if the sequence exceeds kMaxSequenceLength.
std::size_t capacity(std::size_t m, std::size_t n, SharingMode mode);

/// floor((1/r)^(2n)). Derived from the relaxed recursion
/// lambda_k >= lambda_{k-1} / sqrt(1 - lambda_{k-1}^2), so it never exceeds
/// the exact asymmetric capacity.
std::size_t conservative_capacity_bound(std::size_t m, std::size_t n);

/// Smallest n with n >= log k / (2 log(1/r)), clamped to n >= 2.
std::size_t required_parties(std::size_t m, std::size_t k);

/// Bisection over lambda in [0, 1] on the simulated beta of observer k
/// (1-based), holding the earlier observers at prior_lambdas. Returns the
/// smallest lambda reaching the bound 2m - 2, or nullopt if lambda = 1 falls
/// short.
std::optional<double> critical_bisection(std::size_t m, std::size_t n, SharingMode mode, std::size_t k,
                                         std::span<const double> prior_lambdas, double tol = 1e-6);

}  // namespace starnet
