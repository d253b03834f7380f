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

#include "cvgkp/sampler.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace cvgkp;
using namespace cvgkp::sampler;

namespace {

CircuitSpec empty_spec(const CircuitModel &model, int n, int K = 8) {
    return CircuitSpec{model, n, GateSequence(n), grid::HomodyneSpec{K}, 0};
}

// Oracle: vacuum p ~ N(0, 1/2), bin masses from the normal CDF.
double vacuum_cdf(double x) { return 0.5 * std::erfc(-x); }

int count_kind(const CircuitSpec &c, GateKind k) {
    return static_cast<int>(std::count_if(c.gates.gates.begin(), c.gates.gates.end(),
                                          [&](const Gate &g) { return g.kind == k; }));
}

}  // namespace

TEST(Pool, Membership) {
    const auto rcv = gate_pool(CircuitModel::random_cv());
    const auto iqp = gate_pool(CircuitModel::cviqp());
    EXPECT_EQ(rcv.size(), 11u);
    EXPECT_EQ(iqp.size(), 10u);
    for (const auto &e : iqp) {
        EXPECT_NE(e.gate.kind, GateKind::Fourier);
        EXPECT_TRUE(e.gate.is_q_diagonal()) << e.label;
    }
    EXPECT_TRUE(in_pool(CircuitModel::random_cv(), Gate::fourier(0)));
    EXPECT_FALSE(in_pool(CircuitModel::cviqp(), Gate::fourier(0)));
    EXPECT_FALSE(in_pool(CircuitModel::random_cv(), Gate::shear(0.123, 0)));
    // CVIQP displacement comes from the m = 6 table.
    EXPECT_NEAR(iqp[0].gate.param, 142, 1);
}

TEST(Draw, CviqpNeverContainsFourier) {
    const auto model = CircuitModel::cviqp();
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto c = draw_circuit(model, 2, 10, seed);
        ASSERT_EQ(count_kind(c, GateKind::Fourier), 0) << seed;
        for (const auto &g : c.gates.gates) ASSERT_TRUE(in_pool(model, g));
    }
}

TEST(Draw, RandomCvUsesWholePool) {
    std::map<GateKind, int> seen;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (const auto &g : draw_circuit(CircuitModel::random_cv(), 2, 20, seed).gates.gates) ++seen[g.kind];
    for (auto k : {GateKind::Displacement, GateKind::Shear, GateKind::Cubic, GateKind::CZ, GateKind::Fourier,
                   GateKind::LogicalZ, GateKind::LogicalT})
        EXPECT_GT(seen[k], 0) << gate_name(k);
}

TEST(Draw, DeterministicAndTrivialCases) {
    const auto a = draw_circuit(CircuitModel::random_cv(), 2, 12, 99);
    const auto b = draw_circuit(CircuitModel::random_cv(), 2, 12, 99);
    EXPECT_EQ(a.gates, b.gates);
    EXPECT_NE(a.gates, draw_circuit(CircuitModel::random_cv(), 2, 12, 100).gates);
    EXPECT_TRUE(draw_circuit(CircuitModel::random_cv(), 3, 0, 1).gates.empty());
    for (const auto &g : draw_circuit(CircuitModel::cviqp(), 1, 50, 3).gates.gates) EXPECT_FALSE(g.two_mode());
    EXPECT_THROW(draw_circuit(CircuitModel::cviqp(), 0, 1, 1), Error);
    EXPECT_THROW(draw_circuit(CircuitModel::cviqp(), 1, -1, 1), Error);
    EXPECT_THROW(CircuitModel::cviqp(6, 1e-3, 1.0), Error);
}

TEST(Simulate, EmptyCircuitGivesVacuumMasses) {
    const auto d = simulate_distribution(empty_spec(CircuitModel::random_cv(), 2, 4));
    EXPECT_EQ(d.path, SimPath::Covariance);
    ASSERT_EQ(d.modes.size(), 2u);
    const grid::HomodyneSpec h{4};
    for (const auto &md : d.modes) {
        EXPECT_NEAR(md.total(), 1.0, 1e-12);
        EXPECT_EQ(md.k_min, -16);
        for (long k = md.k_min; k <= md.k_max(); ++k) {
            const double want = vacuum_cdf(h.center(k) + h.eta()) - vacuum_cdf(h.center(k) - h.eta());
            EXPECT_NEAR(md.masses[k - md.k_min], want, 1e-14);
        }
    }
    // The outermost bin edge is the first one at or beyond sqrt(pi) * window.
    const double edge = h.center(d.modes[0].k_max()) + h.eta();
    EXPECT_GE(edge, kSqrtPi * 8 - 1e-12);
    EXPECT_LT(edge - 2 * h.eta(), kSqrtPi * 8);
}

TEST(Simulate, GridMatchesCovarianceOnGaussianCircuits) {
    const auto model = CircuitModel::random_cv();
    const auto pool = gate_pool(model);
    auto by_label = [&](const std::string &l) {
        for (const auto &e : pool)
            if (e.label == l) return e.gate;
        throw std::logic_error(l);
    };
    CircuitSpec c = empty_spec(model, 2, 8);
    auto add = [&](const std::string &l, int m0, int m1 = 1) {
        Gate g = by_label(l);
        g.mode = m0;
        if (g.two_mode()) g.mode2 = m1;
        c.gates.push(g);
    };
    add("s1", 0);
    add("b1", 0, 1);
    add("F", 0);
    add("d", 1);
    add("CZ", 1, 0);
    add("F", 1);
    add("Z", 0);
    add("s2", 1);
    add("F", 0);
    const auto cov = simulate_distribution(c);
    SimOptions opt;
    opt.force_grid = true;
    const auto grd = simulate_distribution(c, opt);
    EXPECT_EQ(grd.path, SimPath::Grid);
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(grd.modes[j].total(), 1.0, 1e-8);
        EXPECT_LE(total_variation(cov.modes[j], grd.modes[j]), 1e-2) << j;
    }

    // Seeded Gaussian draws: every one the grid resolves must agree.
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 6 && seed < 200; ++seed) {
        auto r = draw_circuit(model, 2, 5, seed);
        if (!detail::gaussian_only(r.gates)) continue;
        Distribution g;
        try {
            g = simulate_distribution(r, opt);
        } catch (const Error &e) {
            ASSERT_TRUE(e.code() == ErrorCode::GridTooSmall || e.code() == ErrorCode::TooLarge) << e.what();
            continue;
        }
        const auto v = simulate_distribution(r);
        for (int j = 0; j < 2; ++j) EXPECT_LE(total_variation(v.modes[j], g.modes[j]), 1e-2) << seed;
        ++checked;
    }
    EXPECT_GE(checked, 3);
}

TEST(Simulate, OffsetThroughFourierMatchesDirectPhase) {
    // Small displacement: imprinting the phase directly is exact, so both routes must agree.
    auto c = empty_spec(CircuitModel::random_cv(), 1);
    c.gates.push(Gate::displacement(0.7, 0));
    c.gates.push(Gate::fourier_inverse(0));
    c.gates.push(Gate::cubic(0.05, 0));
    c.gates.push(Gate::fourier(0));
    const auto lazy = simulate_distribution(c);

    auto st = grid::from_comb(comb::vacuum(1.0), grid::GridSpec::self_dual(4096));
    grid::apply_q_diagonal(st, 0, Gate::displacement(0.7, 0).q_polynomial());
    grid::apply_fourier(st, 0, -1);
    grid::apply_q_diagonal(st, 0, Gate::cubic(0.05, 0).q_polynomial());
    grid::apply_fourier(st, 0, +1);
    const grid::HomodyneSpec h{8};
    const auto &md = lazy.modes[0];
    for (long k = md.k_min; k <= md.k_max(); ++k)
        EXPECT_NEAR(md.masses[k - md.k_min], grid::bin_mass(st, 0, h.center(k) - h.eta(), h.center(k) + h.eta()), 1e-10);
}

TEST(Simulate, CubicCircuitConvergesUnderRefinement) {
    auto c = empty_spec(CircuitModel::cviqp(), 1);
    const auto pool = gate_pool(c.model);
    c.gates.push(Gate::shear(pool[1].gate.param, 0));
    c.gates.push(Gate::cubic(pool[4].gate.param, 0));
    c.gates.push(Gate::logical_t(0));
    c.gates.push(Gate::displacement(pool[0].gate.param, 0));
    const auto coarse = simulate_distribution(c);
    SimOptions fine;
    fine.refine = 2;
    const auto refined = simulate_distribution(c, fine);
    EXPECT_EQ(coarse.path, SimPath::Grid);
    EXPECT_EQ(refined.grid_points, 2 * coarse.grid_points);
    EXPECT_NEAR(coarse.modes[0].total(), 1.0, 1e-8);
    EXPECT_NEAR(refined.modes[0].total(), 1.0, 1e-8);
    EXPECT_LE(total_variation(coarse.modes[0], refined.modes[0]), 1e-3);
    // The displacement of 142 lands almost all mass in the overflow bin.
    EXPECT_GT(coarse.modes[0].overflow, 0.99);
}

TEST(Simulate, DrawnCircuitsNormalized) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto c = draw_circuit(CircuitModel::cviqp(), 1, 8, seed);
        const auto d = simulate_distribution(c);
        EXPECT_NEAR(d.modes[0].total(), 1.0, 1e-8) << seed;
    }
}

TEST(Simulate, TooManyModes) {
    auto c = empty_spec(CircuitModel::random_cv(), 3);
    c.gates.push(Gate::shear(0.2, 2));
    c.gates.push(Gate::cz(0.5, 0, 2));
    EXPECT_EQ(simulate_distribution(c).modes.size(), 3u);  // Gaussian: covariance path
    c.gates.push(Gate::cubic(0.01, 1));
    try {
        simulate_distribution(c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::TooManyModes);
    }
}

TEST(Sample, VacuumWithinMultinomialBands) {
    const auto spec = empty_spec(CircuitModel::random_cv(), 1, 4);
    const long shots = 10000;
    const auto rec = sample(spec, shots, 2026);
    ASSERT_EQ(rec.size(), static_cast<std::size_t>(shots));
    const auto d = simulate_distribution(spec);
    const auto &md = d.modes[0];
    std::map<long, long> counts;
    for (const auto &r : rec) ++counts[r.bin];
    const auto p = md.flat();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const long k = md.k_min - 1 + static_cast<long>(i);
        const double mean = shots * p[i];
        const double sd = std::sqrt(shots * p[i] * (1 - p[i]));
        EXPECT_LE(std::abs(counts[k] - mean), 3 * sd + 1e-12) << k;
    }
}

TEST(Sample, DeterministicAndEmpty) {
    const auto spec = draw_circuit(CircuitModel::cviqp(), 1, 6, 5);
    const auto d = simulate_distribution(spec);
    const auto a = sample_from(d, 500, 7);
    EXPECT_EQ(a, sample_from(d, 500, 7));
    const auto vac = simulate_distribution(empty_spec(CircuitModel::random_cv(), 1));
    EXPECT_NE(sample_from(vac, 500, 7), sample_from(vac, 500, 8));
    EXPECT_TRUE(sample(spec, 0, 7).empty());
    EXPECT_THROW(sample(spec, -1, 7), Error);
    for (const auto &r : a) EXPECT_DOUBLE_EQ(r.center, spec.homodyne.center(r.bin));
    // Records are shot-major.
    const auto two = sample(empty_spec(CircuitModel::random_cv(), 2), 3, 1);
    ASSERT_EQ(two.size(), 6u);
    EXPECT_EQ(two[1].shot, 0);
    EXPECT_EQ(two[1].mode, 1);
}
