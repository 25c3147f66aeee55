#include "starnet/qops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace starnet {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Observable::Observable(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_power_of_two(m_.rows())) {
        throw std::invalid_argument("Observable: matrix must be square with power-of-two dimension");
    }
    if (!is_hermitian(m_, kHermitianTol)) {
        throw std::invalid_argument("Observable: matrix is not Hermitian");
    }
    const ComplexMatrix sq = m_ * m_;
    if (max_abs_diff(sq, ComplexMatrix::Identity(m_.rows(), m_.cols())) > kInvolutionTol) {
        throw std::invalid_argument("Observable: matrix is not involutory");
    }
}

Observable Observable::operator-() const { return Observable(ComplexMatrix(-m_)); }

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_power_of_two(m_.rows())) {
        throw std::invalid_argument("DensityOperator: matrix must be square with power-of-two dimension");
    }
    if (!is_hermitian(m_, kHermitianTol)) {
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr.real()) + " != 1");
    }
    if (min_eigenvalue(m_) < -kEigenTol) {
        throw std::invalid_argument("DensityOperator: negative eigenvalue");
    }
}

namespace pauli {

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
    return m;
}

ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

}  // namespace pauli

Observable pauli_plane_observable(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("pauli_plane_observable: angle must be finite");
    }
    return Observable(std::cos(theta) * pauli::z() + std::sin(theta) * pauli::x());
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor: empty factor list");
    }
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        ComplexMatrix next = Eigen::kroneckerProduct(out, factors[i]).eval();
        out = std::move(next);
    }
    return out;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
    return tensor(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

double expectation(const DensityOperator& state, const ComplexMatrix& obs) {
    if (obs.rows() != state.dim() || obs.cols() != state.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch (state " +
                                    std::to_string(state.dim()) + ", observable " +
                                    std::to_string(obs.rows()) + "x" + std::to_string(obs.cols()) + ")");
    }
    // tr(AB) without forming the product.
    const Complex tr = (state.matrix().transpose().cwiseProduct(obs)).sum();
    if (std::abs(tr.imag()) > kEigenTol) {
        throw std::domain_error("expectation: trace has imaginary part " + std::to_string(tr.imag()));
    }
    return tr.real();
}

ComplexMatrix pure_state_projector(const Eigen::VectorXcd& psi) { return psi * psi.adjoint(); }

double min_eigenvalue(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace starnet
