#include "starnet/chain_observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace starnet {

ChainFamily::ChainFamily(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.size() < 2) {
        throw std::invalid_argument("ChainFamily: need at least two inputs, got " +
                                    std::to_string(angles_.size()));
    }
    obs_.reserve(angles_.size());
    for (double theta : angles_) obs_.push_back(pauli_plane_observable(theta));
}

Observable ChainFamily::chained(std::size_t i) const {
    if (i < m()) return obs_[i];
    if (i == m()) return -obs_.front();
    throw std::out_of_range("ChainFamily::chained: index " + std::to_string(i));
}

ComplexMatrix ChainFamily::pair_sum(std::size_t i) const {
    if (i >= m()) throw std::out_of_range("ChainFamily::pair_sum: index " + std::to_string(i));
    return chained(i).matrix() + chained(i + 1).matrix();
}

BobFamily::BobFamily(std::vector<double> angles, std::vector<Observable> observables)
    : angles_(std::move(angles)), obs_(std::move(observables)) {
    if (obs_.size() < 2 || angles_.size() != obs_.size()) {
        throw std::invalid_argument("BobFamily: need at least two observables with matching angles");
    }
}

BobFamily BobFamily::from_angles(std::vector<double> angles) {
    std::vector<Observable> obs;
    obs.reserve(angles.size());
    for (double theta : angles) obs.push_back(pauli_plane_observable(theta));
    return BobFamily(std::move(angles), std::move(obs));
}

ChainFamily alice_family(std::size_t m) {
    if (m < 2) throw std::invalid_argument("alice_family: m must be >= 2");
    std::vector<double> angles(m);
    for (std::size_t i = 0; i < m; ++i) {
        angles[i] = static_cast<double>(i) * std::numbers::pi / static_cast<double>(m);
    }
    return ChainFamily(std::move(angles));
}

BobFamily bob_family(const ChainFamily& alice) {
    const std::size_t m = alice.m();
    const double norm = 2.0 * std::cos(std::numbers::pi / (2.0 * static_cast<double>(m)));
    std::vector<double> angles(m);
    std::vector<Observable> obs;
    obs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        // -A_1 sits at theta_1 + pi.
        const double next = (i + 1 < m) ? alice.angles()[i + 1] : alice.angles()[0] + std::numbers::pi;
        angles[i] = 0.5 * (alice.angles()[i] + next);
        obs.emplace_back(ComplexMatrix(alice.pair_sum(i) / norm));
    }
    return BobFamily(std::move(angles), std::move(obs));
}

double anticommutator_scalar(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    const ComplexMatrix ac = a * b + b * a;
    const Eigen::Index d = ac.rows();
    const double c = ac.trace().real() / static_cast<double>(d);
    if (max_abs_diff(ac, c * ComplexMatrix::Identity(d, d)) > tol) {
        throw std::domain_error("anticommutator is not proportional to the identity");
    }
    return c;
}

std::vector<double> anticommutator_table(const ChainFamily& family) {
    std::vector<double> out(family.m());
    for (std::size_t i = 0; i < family.m(); ++i) {
        out[i] = anticommutator_scalar(family.chained(i).matrix(), family.chained(i + 1).matrix());
    }
    return out;
}

}  // namespace starnet
