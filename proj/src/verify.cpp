#include "starnet/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "starnet/capacity_analysis.hpp"
#include "starnet/chain_observables.hpp"
#include "starnet/network_model.hpp"
#include "starnet/qops.hpp"
#include "starnet/quantum_optimizer.hpp"
#include "starnet/sequential_engine.hpp"

namespace starnet {

namespace {

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

class Checker {
public:
    explicit Checker(CheckResult& out) : out_(out) {}

    void expect(bool ok, std::string what) {
        out_.details.push_back((ok ? "ok   " : "FAIL ") + std::move(what));
        if (!ok) out_.passed = false;
    }

    void near(double actual, double expected, double tol, const std::string& what) {
        const double err = std::abs(actual - expected);
        expect(err <= tol, fmt("%s: got %.12g, expected %.12g (|err| %.3g, tol %.1g)", what.c_str(), actual, expected,
                               err, tol));
    }

private:
    CheckResult& out_;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DensityOperator random_density(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss;
    ComplexMatrix g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(ComplexMatrix(0.5 * (rho + rho.adjoint())));
}

void check_optimum(Checker& c, const VerifyOptions& opt) {
    for (std::size_t m = 2; m <= 8; ++m) {
        const ChainFamily alice = alice_family(m);
        std::vector<double> bob_angles = bob_family(alice).angles();
        bob_angles[0] += opt.perturb_angle;
        const BobFamily bob = BobFamily::from_angles(bob_angles);
        for (std::size_t n = 2; n <= 5; ++n) {
            const ScenarioConfig cfg{n, m, SharingMode::Asymmetric};
            const auto reports = simulate_sequence(cfg, UnsharpnessSchedule(cfg.mode, {1.0}), alice, bob);
            c.near(reports.front().beta, quantum_optimum(m), 1e-10, fmt("beta(m=%zu, n=%zu)", m, n));
        }
    }
    c.near(quantum_optimum(3), 3.0 * std::sqrt(3.0), 1e-12, "optimum m=3 equals 3*sqrt(3)");
    c.near(quantum_optimum(4), 7.3910, 1e-4, "optimum m=4");
}

void check_classical(Checker& c, const VerifyOptions&) {
    for (std::size_t n : {2, 3}) {
        for (std::size_t m : {2, 3, 4}) {
            const auto t0 = std::chrono::steady_clock::now();
            const ClassicalOptimum best = classical_bound_enumerate(n, m);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.near(best.value, classical_bound(m), 1e-12, fmt("enumerated bound (n=%zu, m=%zu)", n, m));
            c.expect(secs < 1.0, fmt("enumeration time (n=%zu, m=%zu) %.4fs < 1s", n, m, secs));
        }
    }
}

void check_oracle(Checker& c, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t n : {2, 3}) {
        for (std::size_t m : {3, 4, 5}) {
            const ChainFamily alice = alice_family(m);
            const BobFamily bob = bob_family(alice);
            for (SharingMode mode : {SharingMode::Symmetric, SharingMode::Asymmetric}) {
                double worst = 0.0;
                for (int trial = 0; trial < 100; ++trial) {
                    const std::size_t len = 1 + rng() % 5;
                    std::vector<double> lambdas(len);
                    for (auto& l : lambdas) l = uniform(rng, 0.0, 1.0);
                    const ScenarioConfig cfg{n, m, mode};
                    const UnsharpnessSchedule schedule(mode, lambdas);
                    const auto sim = simulate_sequence(cfg, schedule, alice, bob);
                    for (std::size_t k = 1; k <= len; ++k) {
                        worst = std::max(worst, std::abs(sim[k - 1].beta - degradation_predict(cfg, schedule, k)));
                    }
                }
                c.expect(worst <= 1e-10, fmt("max |beta_sim - beta_closed| (n=%zu, m=%zu, %s) = %.3g <= 1e-10", n, m,
                                             std::string(to_string(mode)).c_str(), worst));
            }
        }
    }
}

void check_bisection_agrees(Checker& c, const CapacityResult& res, std::size_t positions) {
    for (std::size_t k = 1; k <= positions; ++k) {
        const std::span<const double> prior(res.critical_lambdas.data(), k - 1);
        const auto b = critical_bisection(res.m, res.n, res.mode, k, prior);
        if (k <= res.k_max) {
            c.expect(b.has_value(), fmt("bisection feasible at k=%zu", k));
            if (b) c.near(*b, res.critical_lambdas[k - 1], 1e-5, fmt("bisection vs recursion k=%zu", k));
        } else {
            c.expect(!b.has_value(), fmt("bisection reports infeasible at k=%zu", k));
        }
    }
}

void check_critical_sym(Checker& c, const VerifyOptions&) {
    const CapacityResult res = critical_sequence(3, 2, SharingMode::Symmetric);
    c.expect(res.k_max == 2, fmt("capacity = %zu (expected 2)", res.k_max));
    if (res.k_max >= 2) {
        c.near(res.critical_lambdas[0], 0.76980, 1e-4, "lambda_1");
        c.near(res.critical_lambdas[1], 0.93974, 1e-4, "lambda_2");
        check_bisection_agrees(c, res, 3);
    }
    c.expect(res.first_infeasible_lambda && *res.first_infeasible_lambda > 1.0,
             fmt("lambda_3 = %.6f > 1 (printed as 1.374 in the source; exact recursion differs)",
                 res.first_infeasible_lambda.value_or(0.0)));
}

void check_critical_asym(Checker& c, const VerifyOptions&) {
    const CapacityResult res = critical_sequence(3, 2, SharingMode::Asymmetric);
    const double quoted[] = {0.59, 0.66, 0.75, 0.90};
    c.expect(res.k_max == 4, fmt("capacity = %zu (expected 4)", res.k_max));
    for (std::size_t k = 0; k < std::min<std::size_t>(4, res.k_max); ++k) {
        c.near(res.critical_lambdas[k], quoted[k], 0.01, fmt("lambda_%zu", k + 1));
    }
    c.near(res.first_infeasible_lambda.value_or(0.0), 1.25, 0.01, "lambda_5 (infeasible)");
    check_bisection_agrees(c, res, 5);
}

void check_capacities(Checker& c, const VerifyOptions&) {
    auto expect_cap = [&](std::size_t m, std::size_t n, SharingMode mode, std::size_t want) {
        const std::size_t got = capacity(m, n, mode);
        c.expect(got == want, fmt("capacity(m=%zu, n=%zu, %s) = %zu (expected %zu)", m, n,
                                  std::string(to_string(mode)).c_str(), got, want));
    };
    expect_cap(3, 2, SharingMode::Asymmetric, 4);
    expect_cap(3, 3, SharingMode::Asymmetric, 7);
    for (std::size_t n = 2; n <= 6; ++n) expect_cap(3, n, SharingMode::Symmetric, 2);
    for (std::size_t n = 2; n <= 6; ++n) expect_cap(4, n, SharingMode::Symmetric, 1);
    const CapacityResult sym4 = critical_sequence(4, 2, SharingMode::Symmetric);
    c.near(sym4.first_infeasible_lambda.value_or(0.0), 1.02, 0.01, "m=4 symmetric lambda_2 (infeasible)");
    expect_cap(4, 2, SharingMode::Asymmetric, 3);
    const CapacityResult asym4 = critical_sequence(4, 2, SharingMode::Asymmetric);
    c.near(asym4.first_infeasible_lambda.value_or(0.0), 1.3, 0.05, "m=4, n=2 asymmetric lambda_4 (infeasible)");
    expect_cap(4, 3, SharingMode::Asymmetric, 5);
    expect_cap(4, 4, SharingMode::Asymmetric, 9);
    expect_cap(4, 5, SharingMode::Asymmetric, 13);
}

void check_bounds(Checker& c, const VerifyOptions&) {
    for (std::size_t m = 3; m <= 6; ++m) {
        for (std::size_t n = 2; n <= 6; ++n) {
            const std::size_t lower = conservative_capacity_bound(m, n);
            const std::size_t exact = capacity(m, n, SharingMode::Asymmetric);
            c.expect(lower <= exact, fmt("conservative %zu <= exact %zu (m=%zu, n=%zu)", lower, exact, m, n));
        }
    }
    const std::size_t rp = required_parties(3, 7);
    c.expect(rp == 4, fmt("required_parties(3, 7) = %zu (expected 4)", rp));
    for (std::size_t m = 3; m <= 6; ++m) {
        bool monotone = true;
        std::size_t prev = required_parties(m, 1);
        for (std::size_t k = 2; k <= 1000; ++k) {
            const std::size_t cur = required_parties(m, k);
            monotone = monotone && cur >= prev;
            prev = cur;
        }
        c.expect(monotone, fmt("required_parties(%zu, k) non-decreasing for k = 1..1000", m));
    }
}

void check_optimizer(Checker& c, const VerifyOptions& opt) {
    for (std::size_t m = 2; m <= 5; ++m) {
        for (std::size_t n : {2, 3}) {
            const ScenarioConfig cfg{n, m, SharingMode::Asymmetric};
            OptimizerOptions oo;
            oo.restarts = 50;
            oo.seed = opt.seed + 17 * m + n;
            const OptimizationResult best = optimize_angles(cfg, oo);
            const double q = quantum_optimum(m);
            c.near(best.value, q, 1e-6, fmt("optimizer (m=%zu, n=%zu)", m, n));
            c.expect(best.value <= q + 1e-6, fmt("optimizer (m=%zu, n=%zu) does not exceed optimum", m, n));
        }
    }
}

void check_certificates(Checker& c, const VerifyOptions&) {
    for (std::size_t m = 2; m <= 8; ++m) {
        double worst = 0.0;
        for (double r : sos_residual(m)) worst = std::max(worst, r);
        c.expect(worst <= 1e-10, fmt("max sos residual m=%zu: %.3g <= 1e-10", m, worst));
        const double omega = 2.0 * std::cos(std::numbers::pi / (2.0 * static_cast<double>(m)));
        double worst_omega = 0.0;
        for (double w : omega_values(m)) worst_omega = std::max(worst_omega, std::abs(w - omega));
        c.expect(worst_omega <= 1e-12, fmt("omega values m=%zu within %.3g of 2cos(pi/2m)", m, worst_omega));
    }
    const ChainFamily a3 = alice_family(3);
    const auto& o = a3.observables();
    c.near(anticommutator_scalar(o[0].matrix(), o[1].matrix()), 1.0, 1e-12, "{A1,A2}");
    c.near(anticommutator_scalar(o[1].matrix(), o[2].matrix()), 1.0, 1e-12, "{A2,A3}");
    c.near(anticommutator_scalar(o[0].matrix(), o[2].matrix()), -1.0, 1e-12, "{A1,A3}");
}

void check_channel(Checker& c, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    double worst_completeness = 0.0;
    double worst_trace = 0.0;
    const ComplexMatrix id2 = pauli::identity(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const double lambda = uniform(rng, 0.0, 1.0);
        const KrausPair k = kraus_pair(pauli_plane_observable(theta), lambda);
        const ComplexMatrix sum = k.plus.adjoint() * k.plus + k.minus.adjoint() * k.minus;
        worst_completeness = std::max(worst_completeness, max_abs_diff(sum, id2));

        const std::size_t m = 2 + rng() % 7;
        const EdgeState in(random_density(rng, 4));
        const EdgeState out = unsharp_channel_kraus(in, alice_family(m), lambda);
        worst_trace = std::max(worst_trace, std::abs(out.rho().matrix().trace().real() - 1.0));
    }
    c.expect(worst_completeness <= 1e-12, fmt("Kraus completeness max error %.3g <= 1e-12", worst_completeness));
    c.expect(worst_trace <= 1e-12, fmt("trace preservation max error %.3g <= 1e-12", worst_trace));

    for (std::size_t m = 2; m <= 8; ++m) {
        const ChainFamily fam = alice_family(m);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
            const ComplexMatrix o = std::cos(phi) * pauli::z() + std::sin(phi) * pauli::x();
            ComplexMatrix acc = ComplexMatrix::Zero(2, 2);
            for (const auto& a : fam.observables()) acc += a.matrix() * o * a.matrix();
            acc /= static_cast<double>(m);
            worst = std::max(worst, acc.cwiseAbs().maxCoeff());
        }
        c.expect(worst <= 1e-12, fmt("tight-frame cancellation m=%zu: %.3g <= 1e-12", m, worst));
    }
}

struct CheckDef {
    const char* name;
    std::function<void(Checker&, const VerifyOptions&)> run;
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"optimum", check_optimum},         {"classical", check_classical},
        {"oracle", check_oracle},           {"critical-sym", check_critical_sym},
        {"critical-asym", check_critical_asym}, {"capacity", check_capacities},
        {"bounds", check_bounds},           {"optimizer", check_optimizer},
        {"certificates", check_certificates}, {"channel", check_channel},
    };
    return defs;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    int id = 0;
    for (const auto& def : registry()) {
        ++id;
        if (!options.only.empty() && options.only != def.name && options.only != std::to_string(id)) continue;
        CheckResult res;
        res.id = id;
        res.name = def.name;
        res.passed = true;
        Checker checker(res);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            def.run(checker, options);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(res));
    }
    if (results.empty()) throw std::invalid_argument("verify: no check named '" + options.only + "'");
    return results;
}

}  // namespace starnet
