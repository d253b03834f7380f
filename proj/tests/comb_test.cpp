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

#include "cvgkp/comb.hpp"

#include <gtest/gtest.h>

using namespace cvgkp;
using namespace cvgkp::comb;

namespace {

// Oracle: trapezoid quadrature of |psi|^2.
template <class F>
double integrate(F f, double lo, double hi, int n = 200000) {
    const double h = (hi - lo) / n;
    double s = 0.5 * (f(lo) + f(hi));
    for (int i = 1; i < n; ++i) s += f(lo + i * h);
    return s * h;
}

}  // namespace

TEST(Comb, CatGeometry) {
    const double c = kSqrt2 * kSqrtPi;
    const auto k = cat(c, 0.3989);
    ASSERT_EQ(k.terms.size(), 2u);
    EXPECT_NEAR(k.terms[0].center, -2.5066, 1e-4);
    EXPECT_NEAR(k.terms[1].center, 2.5066, 1e-4);
    EXPECT_NEAR(k.terms[0].amp.real(), 1 / kSqrt2, 1e-15);
    EXPECT_NEAR(k.norm2(), 1.0, 1e-15);
    EXPECT_TRUE(k.orthogonal_valid());
    const auto degenerate = cat(0.0, 0.5);
    ASSERT_EQ(degenerate.terms.size(), 1u);
    EXPECT_NEAR(degenerate.norm2(), 1.0, 1e-15);
}

TEST(Comb, BeamsplitterOnCatsGivesThreePeaks) {
    const double s = 0.3989;
    const auto k = cat(cat_center(1), s);
    const auto two = bs_step(k, k);
    ASSERT_EQ(two.terms.size(), 4u);
    std::map<long, int> mode2;
    for (const auto &t : two.terms) mode2[std::lround(t.c2 / kSqrtPi)]++;
    EXPECT_EQ(mode2[-2], 1);
    EXPECT_EQ(mode2[0], 2);
    EXPECT_EQ(mode2[2], 1);
    EXPECT_THROW(bs_step(k, cat(cat_center(1), 0.3)), Error);
    const auto vac = bs_step(vacuum(s), vacuum(s));
    ASSERT_EQ(vac.terms.size(), 1u);
    EXPECT_EQ(vac.terms[0].c1, 0.0);
    EXPECT_EQ(vac.terms[0].c2, 0.0);
}

TEST(Comb, FirstRoundProjection) {
    const double s = sigma_of_m(1).sigma;
    const double eta = 1e-3;
    const auto k = cat(cat_center(1), s);
    const auto p = project_p0(bs_step(k, k), 0, eta);
    EXPECT_NEAR(p.probability, 3 * eta * s / kSqrtPi, 1e-15);
    ASSERT_EQ(p.state.terms.size(), 3u);
    EXPECT_NEAR(p.state.terms[0].amp.real(), 1 / std::sqrt(6.0), 1e-14);
    EXPECT_NEAR(p.state.terms[1].amp.real(), 2 / std::sqrt(6.0), 1e-14);
    EXPECT_NEAR(p.state.terms[2].amp.real(), 1 / std::sqrt(6.0), 1e-14);
}

TEST(Comb, SinglePeakProjection) {
    // Direct integral of sigma/sqrt(pi) exp(-s^2 sigma^2) over [-eta, eta] equals 2 eta sigma / sqrt(pi) to O(eta^3).
    const double s = 0.4;
    const double eta = 1e-3;
    TwoModeComb t;
    t.sigma = s;
    t.terms = {{1.0, 0.0, 0.0}};
    const auto p = project_p0(t, 0, eta);
    const double direct = integrate([&](double x) { return s / kSqrtPi * std::exp(-x * x * s * s); }, -eta, eta, 1000);
    // They differ at relative order (eta sigma)^2 / 3.
    EXPECT_NEAR(p.probability / direct - 1.0, std::pow(eta * s, 2) / 3, 1e-12);
    EXPECT_NEAR(p.probability, 2 * eta * s / kSqrtPi, 1e-12);
    try {
        project_p0(t, 0, 0.5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ApproximationInvalid);
    }
}

TEST(Comb, SecondRoundBinomialMultiplicities) {
    const auto syn = synthesize_gkp(2, sigma_of_m(2).sigma, 1e-4);
    ASSERT_EQ(syn.comb.terms.size(), 5u);
    const double unit = syn.comb.terms[0].amp.real();
    const double want[] = {1, 4, 6, 4, 1};
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(syn.comb.terms[i].amp.real() / unit, want[i], 1e-12);
        EXPECT_NEAR(syn.comb.terms[i].center, 2 * kSqrtPi * (i - 2), 1e-12);
    }
}

TEST(Comb, SuccessCoefficients) {
    EXPECT_NEAR(success_coefficient(1), 1.6926, 1e-4);
    EXPECT_NEAR(success_coefficient(2), 6.286, 1e-3);
    EXPECT_NEAR(success_coefficient(3), 117.10, 0.01);
    EXPECT_NEAR(success_coefficient(4) / 5.6e4, 1.0, 0.01);
}

TEST(Comb, ExactAmplitudes) {
    for (int m = 1; m <= 6; ++m) {
        const auto ex = exact_synthesis(m);
        const unsigned n = 1u << m;
        ASSERT_EQ(ex.weights.size(), n + 1);
        BigInt sum2 = 0;
        unsigned i = 0;
        for (const auto &[idx, w] : ex.weights) {
            EXPECT_EQ(w, binom(n, i)) << m << " " << i;
            EXPECT_EQ(idx, 2 * static_cast<long>(i) - static_cast<long>(n));
            sum2 += w * w;
            ++i;
        }
        EXPECT_EQ(sum2, binom(2 * n, n));
    }
}

TEST(Comb, RoundProductMatchesClosedForm) {
    for (int m = 1; m <= 3; ++m) {
        const double s = sigma_of_m(m).sigma;
        const double eta = 1e-4;
        const auto syn = synthesize_gkp(m, s, eta);
        EXPECT_NEAR(syn.success_prob / success_probability(m, eta, s), 1.0, 1e-12) << m;
    }
}

TEST(Comb, OverlapTable) {
    const double want[] = {0.9976, 0.9986, 0.9997, 0.9999};
    for (int m = 1; m <= 4; ++m) EXPECT_NEAR(overlap_gaussian(m), want[m - 1], 2e-3) << m;
    double prev = 0;
    for (int m = 1; m <= 6; ++m) {
        EXPECT_GT(overlap_gaussian(m), prev);
        prev = overlap_gaussian(m);
    }
}

TEST(Comb, SqueezingTable) {
    EXPECT_NEAR(sigma_of_m(1).sigma, 0.39894, 1e-5);
    EXPECT_NEAR(sigma_of_m(1).squeezing_db, 4.97, 5e-3);
    EXPECT_NEAR(sigma_of_m(4).sigma, 0.14105, 1e-5);
    EXPECT_NEAR(sigma_of_m(4).squeezing_db, 14.0, 5e-3);
    EXPECT_NEAR(sigma_of_m(6).squeezing_db, 20.0, 0.05);
    const long want[] = {5, 8, 11, 14};
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(std::lround(sigma_of_m(m).squeezing_db), want[m - 1]);
}

TEST(Comb, CentralLimitImproves) {
    double prev = 1e9;
    for (int m = 2; m <= 8; ++m) {
        const double d = central_limit_deviation(m);
        EXPECT_LT(d, prev) << m;
        prev = d;
    }
}

TEST(Comb, BinomialWavefunction) {
    const double s = sigma_of_m(1).sigma;
    // q = 0 sits on the middle peak; neighbors at +-2 sqrt(pi) contribute exp(-2 pi / s^2) ~ 1e-17.
    const double pref = std::pow(kPi, -0.25) / std::sqrt(6.0 * s);
    EXPECT_NEAR(binomial_wavefunction(1, s, 0.0), pref * 2, 1e-15);
    for (int m = 1; m <= 3; ++m) {
        const double sm = sigma_of_m(m).sigma;
        const double lim = 2 * kSqrtPi * (1 << (m - 1)) + 10 * sm;
        const double n = integrate([&](double q) { return std::pow(binomial_wavefunction(m, sm, q), 2); }, -lim, lim);
        EXPECT_NEAR(n, 1.0, 1e-6) << m;
        EXPECT_NEAR(binomial_wavefunction(m, sm, 1.3), binomial_wavefunction(m, sm, -1.3), 1e-15);
    }
    // The comb form evaluates to the same function.
    const auto c = binomial_comb(2, sigma_of_m(2).sigma);
    for (double q = -5; q <= 5; q += 0.37) EXPECT_NEAR(c(q).real(), binomial_wavefunction(2, sigma_of_m(2).sigma, q), 1e-12);
}

TEST(Comb, GaussianGkp) {
    const GKPSpec spec{0, 0.25, 0.25};
    const auto c0 = gaussian_gkp_comb(spec, 0);
    EXPECT_NEAR(c0.exact_norm2(), 1.0, 1e-12);
    double best = -1, best_q = 99;
    for (double q = -6; q <= 6; q += 0.001) {
        const double v = gaussian_gkp_wavefunction(spec, 0, q);
        if (v > best) {
            best = v;
            best_q = q;
        }
    }
    EXPECT_NEAR(best_q, 0.0, 1e-3);
    EXPECT_NEAR(gaussian_gkp_wavefunction(spec, 0, 0.7), gaussian_gkp_wavefunction(spec, 0, -0.7), 1e-14);
    const double peak1 = gaussian_gkp_wavefunction(spec, 1, kSqrtPi);
    EXPECT_LT(std::abs(gaussian_gkp_wavefunction(spec, 1, 0.0)), 1e-6 * peak1);
    const double n = integrate([&](double q) { return std::pow(gaussian_gkp_wavefunction(spec, 1, q), 2); }, -45, 45, 60000);
    EXPECT_NEAR(n, 1.0, 1e-8);
}

TEST(Comb, AlphaValues) {
    EXPECT_NEAR(alpha_of_m(6, sigma_of_m(6).sigma), 142.18, 0.01);
    EXPECT_NEAR(alpha_of_m(1, sigma_of_m(1).sigma), 4.443, 1e-3);
}
