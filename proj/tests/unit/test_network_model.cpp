#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "starnet/network_model.hpp"

namespace starnet {
namespace {

using std::numbers::pi;

std::vector<EdgeState> phi_edges(std::size_t n) { return std::vector<EdgeState>(n, phi_plus_state()); }

// Independent classical oracle: collect the distinct per-edge patterns
// |s_i + s_{i+1}| / 2 in {0,1}^m, then take the best product over n edges.
double classical_oracle(std::size_t n, std::size_t m) {
    std::set<std::vector<int>> patterns;
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
        std::vector<int> s(m);
        for (std::size_t x = 0; x < m; ++x) s[x] = (mask >> x) & 1U ? -1 : 1;
        std::vector<int> p(m);
        for (std::size_t i = 0; i < m; ++i) {
            const int next = i + 1 < m ? s[i + 1] : -s[0];
            p[i] = std::abs(s[i] + next) / 2;
        }
        patterns.insert(p);
    }
    const std::vector<std::vector<int>> pats(patterns.begin(), patterns.end());
    double best = 0.0;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        double value = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            int all = 1;
            for (std::size_t l = 0; l < n; ++l) all *= pats[pick[l]][i];
            value += 2.0 * all;  // (prod_l 2 p_l)^(1/n) = 2 when every factor is 2
        }
        best = std::max(best, value);
        std::size_t l = 0;
        while (l < n && ++pick[l] == pats.size()) pick[l++] = 0;
        if (l == n) break;
    }
    return best;
}

TEST(PhiPlus, IsPureNormalisedAndStabilised) {
    const EdgeState e = phi_plus_state();
    const ComplexMatrix& r = e.rho().matrix();
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-15);
    EXPECT_NEAR((r * r).trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(expectation(e.rho(), tensor({pauli::z(), pauli::z()})), 1.0, 1e-15);
    EXPECT_NEAR(expectation(e.rho(), tensor({pauli::x(), pauli::x()})), 1.0, 1e-15);
}

TEST(CorrelationJ, BilocalThreeInputOptimum) {
    const ChainFamily alice = alice_family(3);
    const BobFamily bob = bob_family(alice);
    const ScenarioConfig cfg{2, 3, SharingMode::Asymmetric};
    const auto edges = phi_edges(2);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(correlation_J(cfg, edges, alice, bob, i), 3.0, 1e-12);
}

TEST(CorrelationJ, MixedEdgeKillsCorrelator) {
    const ChainFamily alice = alice_family(3);
    const BobFamily bob = bob_family(alice);
    const ScenarioConfig cfg{2, 3, SharingMode::Asymmetric};
    const std::vector<EdgeState> edges{phi_plus_state(), maximally_mixed_edge()};
    EXPECT_NEAR(correlation_J(cfg, edges, alice, bob, 0), 0.0, 1e-15);
}

TEST(CorrelationJ, TrilocalFourInput) {
    const ChainFamily alice = alice_family(4);
    const BobFamily bob = bob_family(alice);
    const ScenarioConfig cfg{3, 4, SharingMode::Asymmetric};
    const double per_edge = 2.0 * std::cos(pi / 8.0);
    EXPECT_NEAR(correlation_J(cfg, phi_edges(3), alice, bob, 2), per_edge * per_edge * per_edge, 1e-12);
    EXPECT_NEAR(correlation_J(cfg, phi_edges(3), alice, bob, 2), 6.308644, 1e-6);
}

TEST(CorrelationJ, JointStateCrossCheck) {
    const ChainFamily alice(std::vector<double>{0.1, 0.9, 2.0});
    const BobFamily bob = BobFamily::from_angles({0.4, 1.3, 2.9});
    const std::vector<EdgeState> edges{phi_plus_state(), maximally_mixed_edge()};
    for (std::size_t n : {2, 3}) {
        const ScenarioConfig cfg{n, 3, SharingMode::Asymmetric};
        const auto es = phi_edges(n);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(correlation_J(cfg, es, alice, bob, i), correlation_J_joint(cfg, es, alice, bob, i), 1e-12);
        }
    }
    const ScenarioConfig cfg{2, 3, SharingMode::Asymmetric};
    EXPECT_NEAR(correlation_J_joint(cfg, edges, alice, bob, 1), 0.0, 1e-14);
}

TEST(CorrelationJ, IndexOutOfRange) {
    const ChainFamily alice = alice_family(3);
    const BobFamily bob = bob_family(alice);
    EXPECT_THROW(correlation_J(ScenarioConfig{2, 3}, phi_edges(2), alice, bob, 3), std::out_of_range);
    EXPECT_THROW(correlation_J(ScenarioConfig{2, 3}, phi_edges(3), alice, bob, 0), std::invalid_argument);
}

TEST(BetaValue, Examples) {
    const ScenarioConfig cfg{2, 3};
    const std::vector<double> js{3.0, 3.0, 3.0};
    const CorrelationReport rep = beta_value(cfg, js);
    EXPECT_NEAR(rep.beta, 3.0 * std::sqrt(3.0), 1e-12);
    EXPECT_DOUBLE_EQ(rep.bound, 4.0);
    EXPECT_TRUE(rep.violated);

    const std::vector<double> zeros(3, 0.0);
    const CorrelationReport z = beta_value(cfg, zeros);
    EXPECT_DOUBLE_EQ(z.beta, 0.0);
    EXPECT_FALSE(z.violated);

    const std::vector<double> neg{-3.0, 3.0, -3.0};
    EXPECT_NEAR(beta_value(cfg, neg).beta, 3.0 * std::sqrt(3.0), 1e-12);
    EXPECT_THROW(beta_value(cfg, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(BetaValue, OptimalConstructionMatchesClosedFormOverGrid) {
    for (std::size_t m = 2; m <= 8; ++m) {
        const ChainFamily alice = alice_family(m);
        const BobFamily bob = bob_family(alice);
        for (std::size_t n = 2; n <= 5; ++n) {
            const ScenarioConfig cfg{n, m};
            const auto edges = phi_edges(n);
            std::vector<double> js(m);
            const double per_edge = 2.0 * std::cos(pi / (2.0 * static_cast<double>(m)));
            for (std::size_t i = 0; i < m; ++i) {
                js[i] = correlation_J(cfg, edges, alice, bob, i);
                EXPECT_NEAR(js[i], std::pow(per_edge, static_cast<double>(n)), 1e-10);
            }
            EXPECT_NEAR(beta_value(cfg, js).beta, quantum_optimum(m), 1e-10);
        }
    }
}

TEST(BetaValue, InvariantUnderGlobalRotationAndEdgePermutation) {
    const std::size_t m = 4;
    std::vector<double> a = alice_family(m).angles();
    std::vector<double> b = bob_family(alice_family(m)).angles();
    for (auto* v : {&a, &b})
        for (double& t : *v) t += 1.234;
    const ChainFamily alice(a);
    const BobFamily bob = BobFamily::from_angles(b);
    const ScenarioConfig cfg{3, m};
    std::vector<double> js(m);
    for (std::size_t i = 0; i < m; ++i) js[i] = correlation_J(cfg, phi_edges(3), alice, bob, i);
    EXPECT_NEAR(beta_value(cfg, js).beta, quantum_optimum(m), 1e-10);

    // Edge relabelling with a non-trivial edge mix.
    const ChainFamily a2 = alice_family(m);
    const BobFamily b2 = bob_family(a2);
    const ComplexMatrix noisy = 0.7 * phi_plus_state().rho().matrix() + 0.3 * pauli::identity(4) / 4.0;
    const std::vector<EdgeState> e1{phi_plus_state(), EdgeState(DensityOperator(noisy)), maximally_mixed_edge()};
    const std::vector<EdgeState> e2{EdgeState(DensityOperator(noisy)), maximally_mixed_edge(), phi_plus_state()};
    for (std::size_t i = 0; i < m; ++i) {
        EXPECT_NEAR(correlation_J(cfg, e1, a2, b2, i), correlation_J(cfg, e2, a2, b2, i), 1e-14);
    }
}

TEST(ClassicalBound, EnumerationExamples) {
    EXPECT_DOUBLE_EQ(classical_bound_enumerate(2, 3).value, 4.0);
    EXPECT_DOUBLE_EQ(classical_bound_enumerate(2, 4).value, 6.0);
    EXPECT_DOUBLE_EQ(classical_bound_enumerate(3, 3).value, 4.0);
}

TEST(ClassicalBound, MatchesIndependentOracleAndTwoMMinusTwo) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = 2; m <= 5; ++m) {
            if (n * m > 15) continue;
            const ClassicalOptimum got = classical_bound_enumerate(n, m);
            EXPECT_NEAR(got.value, classical_oracle(n, m), 1e-12) << "n=" << n << " m=" << m;
            EXPECT_NEAR(got.value, classical_bound(m), 1e-12);
        }
    }
}

TEST(ClassicalBound, ReportsAttainingAssignment) {
    const std::size_t n = 2;
    const std::size_t m = 4;
    const ClassicalOptimum got = classical_bound_enumerate(n, m);
    ASSERT_EQ(got.signs.size(), n);
    double value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double prod = 1.0;
        for (const auto& s : got.signs) prod *= std::abs(s[i] + (i + 1 < m ? s[i + 1] : -s[0]));
        value += std::sqrt(prod);
    }
    EXPECT_DOUBLE_EQ(value, got.value);
}

TEST(ClassicalBound, GuardAndSpeed) {
    EXPECT_THROW(classical_bound_enumerate(5, 5), std::invalid_argument);
    const auto t0 = std::chrono::steady_clock::now();
    classical_bound_enumerate(3, 4);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
}

TEST(QuantumOptimum, Values) {
    EXPECT_NEAR(quantum_optimum(2), 2.0 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(quantum_optimum(3), 3.0 * std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(quantum_optimum(4), 7.39103626009, 1e-10);
    EXPECT_THROW(quantum_optimum(1), std::invalid_argument);
}

TEST(QuantumOptimum, ExceedsClassicalWithShrinkingGap) {
    double prev_ratio = 0.0;
    for (std::size_t m = 2; m <= 40; ++m) {
        EXPECT_GT(quantum_optimum(m), classical_bound(m));
        const double ratio = classical_bound(m) / quantum_optimum(m);
        EXPECT_GT(ratio, prev_ratio);
        prev_ratio = ratio;
    }
}

TEST(SharingMode, Parse) {
    EXPECT_EQ(parse_mode("sym"), SharingMode::Symmetric);
    EXPECT_EQ(parse_mode("asymmetric"), SharingMode::Asymmetric);
    EXPECT_THROW(parse_mode("both"), std::invalid_argument);
}

}  // namespace
}  // namespace starnet
