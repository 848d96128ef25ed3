/*
   Copyright 2026 The d2dsel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "d2dsel/analytic.hpp"
#include "oracles.hpp"

namespace d2dsel {
namespace {

SystemConfig reference(std::uint32_t n = 2, double alpha = 0.3) {
    SystemConfig cfg = SystemConfig::reference();
    cfg.n_pairs = n;
    cfg.alpha = alpha;
    return cfg;
}

TEST(AlphaBounds, Examples) {
    SystemConfig cfg = reference();
    cfg.rho = 0.75;
    cfg.r_ct = 1.0;
    EXPECT_EQ(alpha_bounds(cfg).cellular, 0.5);
    EXPECT_EQ(cellular_outage_terms(cfg).delta, 0.5);

    cfg.rho = 0.5;
    EXPECT_EQ(alpha_bounds(cfg).cellular, 0.0);

    cfg.rho = 0.75;
    cfg.r_ct = 1e-12;
    EXPECT_NEAR(alpha_bounds(cfg).cellular, 1.0, 1e-11);
}

TEST(AlphaBounds, DegenerateRho) {
    SystemConfig cfg = reference();
    cfg.rho = 0.0;
    EXPECT_EQ(alpha_bounds(cfg).cellular, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(alpha_bounds(cfg).d2d, 1.0);
    cfg.rho = 1.0;
    EXPECT_EQ(alpha_bounds(cfg).cellular, 1.0);
    EXPECT_EQ(alpha_bounds(cfg).d2d, -std::numeric_limits<double>::infinity());
}

TEST(CellularOutageTerms, VanishingTarget) {
    SystemConfig cfg = reference();
    cfg.r_ct = 1e-9;
    const auto t = cellular_outage_terms(cfg);
    EXPECT_LT(t.t, 1e-8);
    EXPECT_LT(t.p, 1e-12);
    EXPECT_LT(t.p1, 1e-24);
}

TEST(CellularOutageTerms, HandEvaluation) {
    const SystemConfig cfg = reference(2, 0.3);
    const auto t = cellular_outage_terms(cfg);
    const double thr = std::pow(2.0, 1.0 / 0.3) - 1.0;
    EXPECT_NEAR(t.t / thr, 1.0, 1e-14);
    EXPECT_NEAR(t.m, 1e10, 1e-2);
    EXPECT_NEAR(t.p, 1.0 - std::exp(-27000.0 * thr / (1e10 * 0.25)), 1e-15);
    const double s = std::pow(2.0, 1.0 / 0.7) - 1.0;
    EXPECT_NEAR(t.a_coef, 1e-12 * 0.7 * s / (0.8 * 0.75 * 0.01 * 0.3), 1e-22);
    EXPECT_NEAR(t.b_coef, 0.75 - s * 0.25, 1e-15);
    EXPECT_TRUE(t.feasible);
    EXPECT_GT(t.b_coef, 0.0);
}

TEST(CellularOutageTerms, RelayLinkProbabilityMatchesQuadrature) {
    // w is P[beta1 beta2 < a/b]; check it against direct integration.
    for (double alpha : {0.1, 0.2, 0.3, 0.45}) {
        const SystemConfig cfg = reference(1, alpha);
        const auto t = cellular_outage_terms(cfg);
        const double ref = testing::product_cdf_quadrature(t.a_coef / t.b_coef,
                                                           cfg.mean_gain(1), cfg.mean_gain(2));
        EXPECT_NEAR(t.w, ref, 1e-9) << "alpha=" << alpha;
    }
}

TEST(CellularOutage, SaturatesBeyondBound) {
    for (double alpha : {0.5, 0.6, 0.8, 0.95}) {
        for (std::uint32_t n : {1u, 2u, 4u}) {
            const SystemConfig cfg = reference(n, alpha);
            EXPECT_EQ(cellular_outage(cfg, CellularVariant::Literal), 1.0);
            EXPECT_EQ(cellular_outage(cfg, CellularVariant::Corrected), 1.0);
        }
    }
    EXPECT_LT(cellular_outage(reference(2, 0.49), CellularVariant::Corrected), 1.0);
}

TEST(CellularOutage, SinglePairReducesToTwoHopOutage) {
    const SystemConfig cfg = reference(1, 0.3);
    const auto t = cellular_outage_terms(cfg);
    EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Corrected), t.p + (1.0 - t.p) * t.w,
                1e-15);

    // Independent route: p by hand, w by quadrature.
    const double p = -std::expm1(-std::pow(cfg.d1, cfg.v) * t.t / (t.m * (1.0 - cfg.gamma)));
    const double w = testing::product_cdf_quadrature(t.a_coef / t.b_coef, cfg.mean_gain(1),
                                                     cfg.mean_gain(2));
    EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Corrected), p + (1.0 - p) * w, 1e-9);
}

TEST(CellularOutage, CorrectedEqualsBinomialClosedForm) {
    // sum_{k=0}^{N} C(N,k) p^{N-k} ((1-p) w)^k = (p + (1-p) w)^N
    for (double alpha : {0.05, 0.2, 0.3, 0.45}) {
        for (std::uint32_t n = 1; n <= 12; ++n) {
            const SystemConfig cfg = reference(n, alpha);
            const auto t = cellular_outage_terms(cfg);
            const double expected = std::pow(t.p + (1.0 - t.p) * t.w, n);
            EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Corrected), expected, 1e-13);
        }
    }
}

TEST(CellularOutage, LiteralCarriesExtraFactor) {
    const SystemConfig cfg = reference(3, 0.3);
    const auto t = cellular_outage_terms(cfg);
    EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Literal),
                t.p1 + (1.0 - t.p1) * t.t_term, 1e-15);
    EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Corrected), t.p1 + t.t_term, 1e-15);
}

TEST(CellularOutage, NonIncreasingInPairs) {
    for (auto variant : {CellularVariant::Literal, CellularVariant::Corrected}) {
        for (double alpha : {0.1, 0.3, 0.45}) {
            double prev = 1.0;
            for (std::uint32_t n = 1; n <= 30; ++n) {
                const double v = cellular_outage(reference(n, alpha), variant);
                EXPECT_LE(v, prev + 1e-15) << "n=" << n << " alpha=" << alpha;
                prev = v;
            }
        }
    }
}

TEST(CellularOutage, CorrectedNonIncreasingInPower) {
    for (double alpha : {0.1, 0.3, 0.45}) {
        double prev = 1.0;
        for (double dbm = -10.0; dbm <= 40.0; dbm += 2.5) {
            SystemConfig cfg = reference(3, alpha);
            cfg.p_c = dbm_to_watts(dbm);
            const double v = cellular_outage(cfg, CellularVariant::Corrected);
            EXPECT_LE(v, prev + 1e-15) << "dbm=" << dbm << " alpha=" << alpha;
            prev = v;
        }
    }
}

// P1 + (1 - P1) T drops the P1 share twice, so at low power, where P1 is
// large, it undershoots and is not monotone.
TEST(CellularOutage, LiteralUndershootsAtLowPower) {
    SystemConfig cfg = reference(3, 0.1);
    cfg.p_c = dbm_to_watts(-10.0);
    const double literal = cellular_outage(cfg, CellularVariant::Literal);
    const double corrected = cellular_outage(cfg, CellularVariant::Corrected);
    EXPECT_LT(literal, 0.8);
    EXPECT_GT(corrected, 0.9999);
    cfg.p_c = dbm_to_watts(-7.5);
    EXPECT_GT(cellular_outage(cfg, CellularVariant::Literal), literal);
}

TEST(CellularOutage, FullPowerSplitNeverDecodes) {
    SystemConfig cfg = reference(3, 0.3);
    cfg.gamma = 1.0;
    const auto t = cellular_outage_terms(cfg);
    EXPECT_EQ(t.p, 1.0);
    EXPECT_EQ(t.p1, 1.0);
    EXPECT_EQ(cellular_outage(cfg, CellularVariant::Corrected), 1.0);
    EXPECT_EQ(cellular_outage(cfg, CellularVariant::Literal), 1.0);
}

TEST(AnalyticTerms, NoHarvestingMeansCertainPhaseTwoFailure) {
    SystemConfig cfg = reference(3, 0.3);
    cfg.gamma = 0.0;
    const auto c = cellular_outage_terms(cfg);
    EXPECT_EQ(c.w, 1.0);
    const auto d = d2d_outage_terms(cfg);
    EXPECT_EQ(d.q_term, 1.0);
    EXPECT_EQ(d.r_term, 1.0);
    EXPECT_EQ(d.z_term, 1.0);
    EXPECT_NEAR(cellular_outage(cfg, CellularVariant::Corrected), 1.0, 1e-15);
}

TEST(D2dOutageTerms, VanishingTarget) {
    SystemConfig cfg = reference(2, 0.3);
    cfg.r_dt = 1e-9;
    const auto t = d2d_outage_terms(cfg);
    EXPECT_LT(t.c_coef, 1e-15);
    EXPECT_LT(t.d_coef, 1e-15);
    EXPECT_LT(t.q_term, 1e-6);
    EXPECT_LT(t.r_term, 1e-6);
}

TEST(D2dOutageTerms, MuBound) {
    SystemConfig cfg = reference(2, 0.3);
    cfg.rho = 0.75;
    cfg.r_dt = 1.0;
    const auto t = d2d_outage_terms(cfg);
    EXPECT_NEAR(t.mu, 1.0 / std::log2(1.0 / 0.75), 1e-14);
    EXPECT_NEAR(t.mu, 2.409, 1e-3);
    EXPECT_FALSE(t.feasible);
    EXPECT_EQ(t.z_term, 1.0);
    EXPECT_NEAR(alpha_bounds(cfg).d2d, 1.0 - t.mu, 1e-14);
}

TEST(D2dOutageTerms, HandEvaluation) {
    SystemConfig cfg = reference(2, 0.3);
    cfg.rho = 0.5;
    cfg.r_dt = 0.5;
    const auto t = d2d_outage_terms(cfg);
    const double s = std::pow(2.0, 0.5 / 0.7) - 1.0;
    const double d = 1e-12 * 0.7 * s / (0.8 * 0.75 * 0.01 * 0.3);
    const double m13 = cfg.mean_gain(1) * cfg.mean_gain(3);
    EXPECT_NEAR(t.d_coef / d, 1.0, 1e-12);
    EXPECT_NEAR(t.c_coef / (d / 0.5), 1.0, 1e-12);
    EXPECT_NEAR(t.e_coef, 0.5 - 0.5 * s, 1e-15);
    EXPECT_NEAR(t.y_arg, std::sqrt(4.0 * d / m13), 1e-12);
    EXPECT_NEAR(t.v_arg, std::sqrt(4.0 * d / 0.5 / m13), 1e-12);
    EXPECT_NEAR(t.z_arg, std::sqrt(4.0 * d / ((0.5 - 0.5 * s) * m13)), 1e-12);
    EXPECT_TRUE(t.feasible);
    const double thr = std::pow(2.0, 1.0 / 0.3) - 1.0;
    EXPECT_NEAR(t.phi, std::exp(-1000.0 * thr / 1e10), 1e-15);
    // Q, R and Z are product-of-exponential CDFs.
    EXPECT_NEAR(t.q_term, testing::product_cdf_quadrature(d, cfg.mean_gain(1), cfg.mean_gain(3)),
                1e-9);
    EXPECT_NEAR(t.r_term,
                testing::product_cdf_quadrature(d / 0.5, cfg.mean_gain(1), cfg.mean_gain(3)), 1e-9);
}

// Restatement of the four published branches for a single pair.
double single_pair_branch(const SystemConfig& cfg) {
    const auto c = cellular_outage_terms(cfg);
    const auto o = d2d_outage_terms(cfg);
    const double p = c.p;
    const double p_rf = c.feasible ? o.p21 : o.p22;
    const double interfered = o.feasible ? (1.0 - p) * c.w : 1.0;
    return p * o.q_term + (1 - p) * (1 - p_rf) * o.r_term * o.phi +
           (1 - p) * (1 - p_rf) * interfered * (1 - o.phi) + (1 - p) * p_rf * (1 - p) * o.q_term;
}

TEST(D2dOutage, SinglePairBranches) {
    struct Case {
        double rho, r_ct, r_dt;
        bool cell_feasible, d2d_feasible;
    };
    for (const Case& k : {Case{0.5, 0.5, 0.5, true, true}, Case{0.75, 1.0, 1.0, true, false},
                          Case{0.25, 1.0, 1.0, false, true}, Case{0.5, 1.0, 1.0, false, false}}) {
        SystemConfig cfg = reference(1, 0.3);
        cfg.rho = k.rho;
        cfg.r_ct = k.r_ct;
        cfg.r_dt = k.r_dt;
        ASSERT_EQ(cellular_outage_terms(cfg).feasible, k.cell_feasible);
        ASSERT_EQ(d2d_outage_terms(cfg).feasible, k.d2d_feasible);
        const double v = d2d_outage(cfg);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        EXPECT_NEAR(v, std::clamp(single_pair_branch(cfg), 0.0, 1.0), 1e-14);
    }
}

TEST(D2dOutage, VanishingTargetLeavesOnlyInterferedTerm) {
    SystemConfig cfg = reference(2, 0.3);
    cfg.r_dt = 1e-9;
    const auto c = cellular_outage_terms(cfg);
    const auto o = d2d_outage_terms(cfg);
    const double interfered = (1 - c.p1) * (1 - o.p21) * (o.feasible ? c.t_term : 1.0) * (1 - o.phi);
    EXPECT_NEAR(d2d_outage(cfg), interfered, 1e-6);
}

TEST(BinomialSum, MatchesClosedFormAcrossExactAndLogPaths) {
    for (std::uint32_t n : {1u, 5u, 60u, 61u, 200u}) {
        for (double p : {0.0, 1e-4, 0.3, 0.9}) {
            for (double x : {0.0, 0.25, 0.7, 1.0}) {
                const double expected = std::pow(p + (1 - p) * x, n) - std::pow(p, n);
                EXPECT_NEAR(binomial_sum(n, p, x), expected, 1e-12)
                    << "n=" << n << " p=" << p << " x=" << x;
            }
        }
    }
}

TEST(AnalyticProperty, RandomConfigsStayInUnitInterval) {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        SystemConfig cfg;
        cfg.p_c = dbm_to_watts(-10.0 + 50.0 * unit(gen));
        cfg.sigma2 = dbm_to_watts(-120.0 + 50.0 * unit(gen));
        cfg.eta = 0.05 + 0.95 * unit(gen);
        cfg.gamma = unit(gen);
        cfg.alpha = 0.01 + 0.98 * unit(gen);
        cfg.rho = unit(gen);
        cfg.n_pairs = 1 + static_cast<std::uint32_t>(unit(gen) * 80);
        cfg.d1 = 1.0 + 99.0 * unit(gen);
        cfg.d2 = 1.0 + 99.0 * unit(gen);
        cfg.d3 = 1.0 + 99.0 * unit(gen);
        cfg.d4 = 1.0 + 99.0 * unit(gen);
        cfg.v = 2.0 + 2.0 * unit(gen);
        cfg.r_ct = 0.05 + 4.0 * unit(gen);
        cfg.r_dt = 0.05 + 4.0 * unit(gen);
        ASSERT_NO_THROW(validate(cfg));

        for (double v : {cellular_outage(cfg, CellularVariant::Literal),
                         cellular_outage(cfg, CellularVariant::Corrected), d2d_outage(cfg)}) {
            ASSERT_TRUE(std::isfinite(v));
            ASSERT_GE(v, 0.0);
            ASSERT_LE(v, 1.0);
        }
        const auto c = cellular_outage_terms(cfg);
        ASSERT_GE(c.p, 0.0);
        ASSERT_LE(c.p, 1.0);
        ASSERT_GE(c.w, 0.0);
        ASSERT_LE(c.w, 1.0);
        ASSERT_EQ(c.b_coef > 0.0, c.feasible) << "alpha=" << cfg.alpha << " rho=" << cfg.rho;
        const auto o = d2d_outage_terms(cfg);
        ASSERT_EQ(o.e_coef > 0.0, o.feasible);
        for (double x : {o.phi, o.q_term, o.r_term, o.z_term, o.p21, o.p22}) {
            ASSERT_GE(x, 0.0);
            ASSERT_LE(x, 1.0);
        }
    }
}

}  // namespace
}  // namespace d2dsel
