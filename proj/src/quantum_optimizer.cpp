#include "starnet/quantum_optimizer.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace starnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXcd phi_plus_vector() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = psi(3) = 1.0 / std::numbers::sqrt2;
    return psi;
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

}  // namespace

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

AngleConfiguration optimal_angles(std::size_t m) {
    const ChainFamily alice = alice_family(m);
    const BobFamily bob = bob_family(alice);
    return {alice.angles(), bob.angles()};
}

double beta_of_angles(const ScenarioConfig& config, const AngleConfiguration& angles) {
    config.validate();
    if (angles.alice_angles.size() != config.m || angles.bob_angles.size() != config.m) {
        throw std::invalid_argument("beta_of_angles: expected m Alice and m Bob angles");
    }
    const ChainFamily alice(angles.alice_angles);
    const BobFamily bob = BobFamily::from_angles(angles.bob_angles);
    const std::vector<EdgeState> edges(config.n, phi_plus_state());
    std::vector<double> Js(config.m);
    for (std::size_t i = 0; i < config.m; ++i) Js[i] = correlation_J(config, edges, alice, bob, i);
    return beta_value(config, Js).beta;
}

namespace {

// Optimizer objective: same quantity as beta_of_angles, on fixed-size real
// matrices (x-z plane observables are real) without per-call validation.
class FastBeta {
public:
    explicit FastBeta(const ScenarioConfig& config) : n_(config.n), m_(config.m) {
        Eigen::Vector4d psi(1.0, 0.0, 0.0, 1.0);
        psi /= std::numbers::sqrt2;
        rho_ = psi * psi.transpose();
    }

    double operator()(const AngleConfiguration& a) const {
        const double inv_n = 1.0 / static_cast<double>(n_);
        double beta = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            const double next = i + 1 < m_ ? a.alice_angles[i + 1] : a.alice_angles[0] + std::numbers::pi;
            const Eigen::Matrix2d pair = plane(a.alice_angles[i]) + plane(next);
            const Eigen::Matrix2d b = plane(a.bob_angles[i]);
            Eigen::Matrix4d op;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) op.block<2, 2>(2 * r, 2 * c) = pair(r, c) * b;
            const double edge = (rho_.cwiseProduct(op.transpose())).sum();
            beta += std::pow(std::abs(std::pow(edge, static_cast<double>(n_))), inv_n);
        }
        return beta;
    }

private:
    static Eigen::Matrix2d plane(double t) {
        Eigen::Matrix2d m;
        m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
        return m;
    }

    std::size_t n_;
    std::size_t m_;
    Eigen::Matrix4d rho_;
};

}  // namespace

OptimizationResult optimize_angles(const ScenarioConfig& config, const OptimizerOptions& options) {
    config.validate();
    if (options.restarts < 1) throw std::invalid_argument("optimize_angles: restarts must be >= 1");
    if (options.scan_points < 3) throw std::invalid_argument("optimize_angles: scan_points must be >= 3");

    const std::size_t m = config.m;
    const FastBeta beta(config);
    std::mt19937_64 rng(options.seed);
    OptimizationResult best;
    best.value = -1.0;

    for (std::size_t restart = 0; restart < options.restarts; ++restart) {
        AngleConfiguration cur{std::vector<double>(m), std::vector<double>(m)};
        for (auto& t : cur.alice_angles) t = kTwoPi * unit_uniform(rng);
        for (auto& t : cur.bob_angles) t = kTwoPi * unit_uniform(rng);
        double value = beta(cur);

        for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
            const double before = value;
            for (std::size_t coord = 0; coord < 2 * m; ++coord) {
                double& slot = coord < m ? cur.alice_angles[coord] : cur.bob_angles[coord - m];
                const double keep = slot;
                auto objective = [&](double t) {
                    slot = t;
                    return beta(cur);
                };
                // |cos|-type objectives have several peaks per period; bracket the best one first.
                const double step = kTwoPi / static_cast<double>(options.scan_points);
                double best_t = keep;
                double best_f = value;
                for (std::size_t s = 0; s < options.scan_points; ++s) {
                    const double t = keep + step * static_cast<double>(s);
                    const double f = objective(t);
                    if (f > best_f) {
                        best_f = f;
                        best_t = t;
                    }
                }
                const double refined = golden_section_max(objective, best_t - step, best_t + step, options.tolerance);
                const double f_refined = objective(refined);
                if (f_refined >= best_f) {
                    slot = refined;
                    value = f_refined;
                } else {
                    slot = best_t;
                    value = best_f;
                }
            }
            if (value - before < 1e-14) break;
        }
        if (value > best.value) {
            best.value = value;
            best.angles = cur;
        }
    }
    for (auto& t : best.angles.alice_angles) t = wrap_angle(t);
    for (auto& t : best.angles.bob_angles) t = wrap_angle(t);
    best.value = beta_of_angles(config, best.angles);
    return best;
}

std::vector<double> omega_values(std::size_t m) {
    const ChainFamily alice = alice_family(m);
    const Eigen::VectorXcd psi = phi_plus_vector();
    const ComplexMatrix id = pauli::identity(2);
    std::vector<double> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = (tensor({alice.pair_sum(i), id}) * psi).norm();
    return out;
}

std::vector<double> sos_residual(const ChainFamily& alice, const BobFamily& bob) {
    if (alice.m() != bob.m()) throw std::invalid_argument("sos_residual: family sizes differ");
    const Eigen::VectorXcd psi = phi_plus_vector();
    const ComplexMatrix id = pauli::identity(2);
    std::vector<double> out(alice.m());
    for (std::size_t i = 0; i < alice.m(); ++i) {
        const ComplexMatrix pair_op = tensor({alice.pair_sum(i), id});
        const double omega = (pair_op * psi).norm();
        const ComplexMatrix nulling = pair_op / omega - tensor({id, bob.observables()[i].matrix()});
        out[i] = (nulling * psi).norm();
    }
    return out;
}

std::vector<double> sos_residual(std::size_t m) {
    const ChainFamily alice = alice_family(m);
    return sos_residual(alice, bob_family(alice));
}

}  // namespace starnet
