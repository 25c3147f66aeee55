#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace starnet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kInvolutionTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

// Largest entrywise modulus of (a - b).
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_power_of_two(Eigen::Index n);

/// Dichotomic (+1/-1) measurement: Hermitian and squares to the identity.
class Observable {
public:
    /// Throws std::invalid_argument when `m` is not square, not Hermitian,
    /// or not involutory.
    explicit Observable(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

    Observable operator-() const;

private:
    ComplexMatrix m_;
};

/// Positive semidefinite, unit-trace operator.
class DensityOperator {
public:
    /// Throws std::invalid_argument on non-Hermitian input, trace != 1 or a
    /// negative eigenvalue below -kEigenTol.
    explicit DensityOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

private:
    ComplexMatrix m_;
};

namespace pauli {
ComplexMatrix identity(Eigen::Index dim = 2);
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// cos(theta) sigma_z + sin(theta) sigma_x, Bloch vector (sin theta, 0, cos theta).
Observable pauli_plane_observable(double theta);

/// Kronecker product of the factors, left to right. Throws on an empty list.
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);

/// Re tr(state * obs). Throws std::invalid_argument on dimension mismatch
/// and std::domain_error if the imaginary part of the trace exceeds 1e-10.
double expectation(const DensityOperator& state, const ComplexMatrix& obs);

/// Projector onto a pure state vector.
ComplexMatrix pure_state_projector(const Eigen::VectorXcd& psi);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& hermitian);

}  // namespace starnet
