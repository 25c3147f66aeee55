#pragma once

#include <cstddef>
#include <vector>

#include "starnet/qops.hpp"

namespace starnet {

/// Ordered single-qubit observables A_1..A_m in the x-z plane. Indices are
/// 0-based; index m refers to the wrapped element A_{m+1} = -A_1.
class ChainFamily {
public:
    /// Throws std::invalid_argument for fewer than two angles.
    explicit ChainFamily(std::vector<double> angles);

    std::size_t m() const noexcept { return angles_.size(); }
    const std::vector<double>& angles() const noexcept { return angles_; }
    const std::vector<Observable>& observables() const noexcept { return obs_; }

    /// A_i for i in [0, m]; i == m yields -A_1.
    Observable chained(std::size_t i) const;

    /// A_i + A_{i+1} with the chain convention (not itself an observable).
    ComplexMatrix pair_sum(std::size_t i) const;

private:
    std::vector<double> angles_;
    std::vector<Observable> obs_;
};

/// Central-party factors b_1..b_m acting on one edge qubit.
class BobFamily {
public:
    BobFamily(std::vector<double> angles, std::vector<Observable> observables);

    std::size_t m() const noexcept { return obs_.size(); }
    const std::vector<double>& angles() const noexcept { return angles_; }
    const std::vector<Observable>& observables() const noexcept { return obs_; }

    static BobFamily from_angles(std::vector<double> angles);

private:
    std::vector<double> angles_;
    std::vector<Observable> obs_;
};

/// Equally spaced family, theta_i = (i-1) pi / m.
ChainFamily alice_family(std::size_t m);

/// b_i = (A_i + A_{i+1}) / (2 cos(pi / 2m)), i.e. the bisectors of
/// neighbouring chain directions.
BobFamily bob_family(const ChainFamily& alice);

/// c_i with {A_i, A_{i+1}} = c_i I. Throws std::domain_error when an
/// anticommutator is not proportional to the identity within 1e-12.
std::vector<double> anticommutator_table(const ChainFamily& family);

/// Scalar s with {a, b} = s I; throws std::domain_error otherwise.
double anticommutator_scalar(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-12);

}  // namespace starnet
