// Copyright 2026 The cvgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvgkp/ftcalc.hpp"

#include <gtest/gtest.h>

using namespace cvgkp;
using namespace cvgkp::ft;

namespace {

// Oracle: Gaussian tail by direct quadrature of exp(-x^2) (literal convention).
double tail_quadrature(double a) {
    const int n = 200000;
    const double hi = a + 12.0;
    const double h = (hi - a) / n;
    double s = 0.5 * (std::exp(-a * a) + std::exp(-hi * hi));
    for (int i = 1; i < n; ++i) {
        const double x = a + i * h;
        s += std::exp(-x * x);
    }
    return 2.0 / kSqrtPi * s * h;
}

}  // namespace

TEST(Zeta, Values) {
    EXPECT_NEAR(zeta(1), 0.069, 0.005);
    EXPECT_NEAR(zeta(6), 3e-3, 1.5e-3);
    for (int m = 1; m < 10; ++m) EXPECT_GT(zeta(m), zeta(m + 1)) << m;
}

TEST(PSucc, PointOne) {
    EXPECT_NEAR(p_succ(1, 0.1), 0.97, 0.01);
    const double direct = std::erf((kSqrtPi / 2 - zeta(1) - 0.2) / comb::sigma_of_m(1).sigma);
    EXPECT_DOUBLE_EQ(p_succ(1, 0.1), direct);
}

TEST(PSucc, NoiselessLimitAndFormula) {
    const double s4 = comb::sigma_of_m(4).sigma;
    EXPECT_NEAR(s4, 0.1410, 1e-4);
    EXPECT_DOUBLE_EQ(p_succ(4, 0.0), std::erf((0.5 * kSqrtPi - zeta(4)) / s4));
    // With zeta -> 0 the noiseless value erf(sqrt(pi)/(2 sigma)) is approached from below.
    for (int m = 1; m <= 8; ++m) {
        const double s = comb::sigma_of_m(m).sigma;
        EXPECT_LE(p_succ(m, 0.0), std::erf(kSqrtPi / (2 * s)));
        EXPECT_NEAR(p_succ(m, 0.0), std::erf(kSqrtPi / (2 * s)), 2 * zeta(m) / s);
    }
}

TEST(PSucc, BudgetExhausted) {
    try {
        p_succ(1, 0.5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
    }
}

TEST(PSucc, MonotoneInY) {
    for (auto conv : {ErfConvention::Literal, ErfConvention::Strict}) {
        double prev = 2.0;
        for (double y = 0; y < 0.4; y += 0.005) {
            const double p = p_succ(1, y, conv);
            EXPECT_LT(p, prev) << y;
            prev = p;
        }
    }
}

TEST(Chi, MatchesQuadrature) {
    for (double sigma : {0.1, 0.3, 0.7}) {
        for (double delta : {0.0, 0.2, 0.5}) {
            const double a = (kSqrtPi / 2 - delta) / sigma;
            EXPECT_NEAR(chi(sigma, delta), tail_quadrature(a), 1e-9) << sigma << " " << delta;
            EXPECT_NEAR(chi(sigma, delta, ErfConvention::Strict), tail_quadrature(a / kSqrt2), 1e-9);
        }
    }
}

TEST(Chi, LimitsAndMonotonicity) {
    EXPECT_DOUBLE_EQ(chi(0.4, kSqrtPi / 2), 1.0);
    EXPECT_LT(chi(1e-3, 0.5), 1e-300);
    EXPECT_EQ(chi(0.4, 5.0), 1.0);  // clamped
    EXPECT_THROW(chi(0.0, 0.1), Error);
    for (double s = 0.05; s < 1.0; s += 0.05) {
        for (double d = 0.0; d < 0.8; d += 0.05) {
            EXPECT_LE(chi(s, d), chi(s, d + 0.05));
            EXPECT_LE(chi(s, d), chi(s + 0.05, d));
        }
    }
}

TEST(Threshold, Inequality) {
    auto b = FTBudget::make(1, 0.1, 0.0, 0.0, 1.0);
    EXPECT_TRUE(threshold_ok(b));
    EXPECT_NEAR(b.epsilon_m, zeta(1) + 0.2, 1e-15);
    b.epsilon_th = 0.05;
    const double c = chi(b.sigma_m, 2 * b.epsilon_m);
    EXPECT_DOUBLE_EQ(failure_probability(b), 1 - (1 - c) * (1 - c));
    EXPECT_EQ(threshold_ok(b), 1 - (1 - c) * (1 - c) < 0.05);
    // Sharp states pass.
    auto sharp = FTBudget::make(12, 0.0, 0.0, 0.0, 1e-6);
    EXPECT_TRUE(threshold_ok(sharp));
    // Budgets enter only through eps + 2 eps_m: trading eps_q for eps_m leaves the result unchanged.
    auto x = FTBudget::make(2, 0.01, 0.1, 0.1);
    auto z = x;
    z.epsilon_q = 0.0;
    z.epsilon_p = 0.0;
    z.epsilon_m += 0.05;
    EXPECT_NEAR(failure_probability(x), failure_probability(z), 1e-15);
}

TEST(Cviqp, MinimalM) {
    const auto lit = cviqp_minimal_m(1e-6, 1e-3);
    const auto strict = cviqp_minimal_m(1e-6, 1e-3, ErfConvention::Strict);
    EXPECT_NEAR(lit.m_min, 6, 1);
    EXPECT_NEAR(strict.m_min, 6, 1);
    EXPECT_EQ(lit.m_min, 5);
    EXPECT_EQ(strict.m_min, 7);
    EXPECT_EQ(cviqp_minimal_m(0.5, 0.0).m_min, 1);
    EXPECT_THROW(cviqp_minimal_m(1e-6, 0.05), Error);
    EXPECT_THROW(cviqp_minimal_m(1.5, 0.0), Error);
}

TEST(Cviqp, MaxYAtSix) {
    for (auto conv : {ErfConvention::Literal, ErfConvention::Strict}) {
        const double y = cviqp_max_y(6, 1e-6, conv);
        EXPECT_GT(y, 1e-3 / 3) << convention_name(conv);
        EXPECT_LT(y, 1e-3 * 3) << convention_name(conv);
        EXPECT_LT(cviqp_failure(6, y * 0.999, conv), 1e-6);
        EXPECT_GT(cviqp_failure(6, y * 1.001, conv), 1e-6);
    }
    // The strict convention lands near eps_6 = 0.05.
    EXPECT_NEAR(epsilon_m(6, cviqp_max_y(6, 1e-6, ErfConvention::Strict)), 0.05, 0.01);
}

TEST(Tables, Cviqp) {
    const auto t = gate_parameter_table(Model::CVIQP, 6, 1e-3);
    EXPECT_NEAR(t.find("d")->computed, 142, 1);
    EXPECT_TRUE(t.find("d")->match);
    EXPECT_TRUE(t.find("b1")->match);
    EXPECT_TRUE(t.find("b2")->match);
    EXPECT_TRUE(t.find("c1")->match);
    EXPECT_TRUE(t.find("c2")->match);
    EXPECT_FALSE(t.find("s1")->match);
    EXPECT_FALSE(t.find("s2")->match);
}

TEST(Tables, Universal) {
    const auto t = gate_parameter_table(Model::Universal, 1, 0.1);
    EXPECT_NEAR(t.find("d")->computed, 4.443, 1e-3);
    EXPECT_FALSE(t.find("d")->match);
    EXPECT_DOUBLE_EQ(*t.find("d")->printed, 5.6);
    EXPECT_TRUE(t.find("b2")->match);
    EXPECT_TRUE(t.find("c1")->match);
    EXPECT_TRUE(t.find("c2")->match);
    EXPECT_TRUE(t.find("b1")->match);
    EXPECT_NEAR(t.find("s1")->computed, 0.1995, 1e-4);
    EXPECT_NEAR(t.find("s2")->computed, 1.2533, 1e-4);
    EXPECT_EQ(t.mismatches(), 3);
    // Off-table inputs carry no printed reference.
    const auto u = gate_parameter_table(Model::Universal, 2, 0.05);
    EXPECT_FALSE(u.find("d")->printed.has_value());
    EXPECT_EQ(u.mismatches(), 0);
}

TEST(Curve, PsuccVsY) {
    const auto c = psucc_curve();
    ASSERT_EQ(c.size(), 91u);
    bool found = false;
    for (const auto &pt : c) {
        if (std::abs(pt.y - 0.1) < 1e-12) {
            EXPECT_NEAR(pt.p_literal, 0.97, 0.01);
            found = true;
        }
        EXPECT_LE(pt.p_strict, pt.p_literal);
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(c.back().p_literal, 0.0);
}
