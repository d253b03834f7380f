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

// Random CV circuits and CVIQP circuits: seeded drawing, binned homodyne
// distributions and shot sampling.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "cvgkp/core.hpp"
#include "cvgkp/ftcalc.hpp"
#include "cvgkp/gridsim.hpp"
#include "cvgkp/symplectic.hpp"

namespace cvgkp::sampler {

enum class ModelKind { RandomCV, CVIQP };

inline const char *model_kind_name(ModelKind k) { return k == ModelKind::RandomCV ? "random-cv" : "cviqp"; }

struct CircuitModel {
    ModelKind kind = ModelKind::RandomCV;
    int m = 1;       // gate parameters come from the (m, y) table
    double y = 0.1;
    /// Momentum width of the CVIQP input: psi(q) ~ exp(-sigma^2 q^2 / 2). Vacuum inputs use 1.
    double input_sigma = 1.0;

    static CircuitModel random_cv(int m = 1, double y = 0.1) { return {ModelKind::RandomCV, m, y, 1.0}; }
    /// The input squeezing is a constant, independent of the mode count.
    static CircuitModel cviqp(int m = 6, double y = 1e-3, double sigma = 0.5) {
        if (!(sigma > 0 && sigma < 1)) throw Error(ErrorCode::OutOfRange, "CVIQP input sigma must lie in (0, 1)");
        return {ModelKind::CVIQP, m, y, sigma};
    }

    ft::Model table_model() const { return kind == ModelKind::RandomCV ? ft::Model::Universal : ft::Model::CVIQP; }
    /// Position-space width of the input comb peak.
    double input_q_width() const { return 1.0 / input_sigma; }
};

struct PoolEntry {
    std::string label;
    Gate gate;  // modes 0 (and 1) as placeholders
};

/// Elementary set plus the logical set; CVIQP drops the Fourier transform.
inline std::vector<PoolEntry> gate_pool(const CircuitModel &model) {
    const auto t = ft::gate_parameter_table(model.table_model(), model.m, model.y);
    auto val = [&](const char *sym) { return t.find(sym)->computed; };
    std::vector<PoolEntry> pool = {
        {"d", Gate::displacement(val("d"), 0)},  {"s1", Gate::shear(val("s1"), 0)},
        {"s2", Gate::shear(val("s2"), 0)},       {"c1", Gate::cubic(val("c1"), 0)},
        {"c2", Gate::cubic(val("c2"), 0)},       {"b1", Gate::cz(val("b1"), 0, 1)},
        {"b2", Gate::cz(val("b2"), 0, 1)},       {"Z", Gate::logical_z(0)},
        {"CZ", Gate::cz(1.0, 0, 1)},             {"T", Gate::logical_t(0)},
    };
    if (model.kind == ModelKind::RandomCV) pool.push_back({"F", Gate::fourier(0)});
    return pool;
}

inline bool in_pool(const CircuitModel &model, const Gate &g) {
    for (const auto &e : gate_pool(model))
        if (e.gate.kind == g.kind && e.gate.param == g.param) return true;
    return false;
}

struct CircuitSpec {
    CircuitModel model;
    int modes = 1;
    GateSequence gates{1};
    grid::HomodyneSpec homodyne{8};
    std::uint64_t seed = 0;
};

/// Uniform draws from the model's pool; two-mode entries are skipped when n = 1.
inline CircuitSpec draw_circuit(const CircuitModel &model, int n, int depth, std::uint64_t seed, int K = 8) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "mode count must be >= 1");
    if (depth < 0) throw Error(ErrorCode::OutOfRange, "depth must be >= 0");
    if (K < 1) throw Error(ErrorCode::OutOfRange, "K must be >= 1");
    std::vector<PoolEntry> pool;
    for (auto &e : gate_pool(model))
        if (n > 1 || !e.gate.two_mode()) pool.push_back(e);
    CircuitSpec spec{model, n, GateSequence(n), grid::HomodyneSpec{K}, seed};
    Rng rng(seed);
    for (int i = 0; i < depth; ++i) {
        Gate g = pool[rng.below(pool.size())].gate;
        g.mode = static_cast<int>(rng.below(n));
        if (g.two_mode()) {
            g.mode2 = static_cast<int>(rng.below(n - 1));
            if (g.mode2 >= g.mode) ++g.mode2;
        }
        if (!in_pool(model, g)) throw Error(ErrorCode::OutOfRange, "drawn gate outside the model pool");
        spec.gates.push(g);
    }
    return spec;
}

/// Bins k_min..k_max plus one tail bin on each side.
struct ModeDistribution {
    int mode = 0;
    long k_min = 0;
    std::vector<double> masses;
    double underflow = 0.0;
    double overflow = 0.0;

    long k_max() const { return k_min + static_cast<long>(masses.size()) - 1; }
    double total() const {
        double t = underflow + overflow;
        for (double m : masses) t += m;
        return t;
    }
    /// Probabilities in sampling order: underflow, bins, overflow.
    std::vector<double> flat() const {
        std::vector<double> v;
        v.reserve(masses.size() + 2);
        v.push_back(underflow);
        v.insert(v.end(), masses.begin(), masses.end());
        v.push_back(overflow);
        return v;
    }
};

enum class SimPath { Covariance, Grid };

inline const char *path_name(SimPath p) { return p == SimPath::Covariance ? "covariance" : "grid"; }

struct Distribution {
    SimPath path = SimPath::Covariance;
    grid::HomodyneSpec homodyne{8};
    int window = 8;
    int grid_points = 0;  // per axis, grid path only
    std::vector<ModeDistribution> modes;
};

struct SimOptions {
    int window = 8;  // bins cover |p| <= sqrt(pi) * window
    bool force_grid = false;
    int fourier_grid_1 = 4096;  // self-dual grid sizes for circuits containing F
    int fourier_grid_2 = 1024;
    int refine = 1;  // multiplies the point count at fixed extent
    long one_mode_cap = 1L << 22;
    long two_mode_cap = grid::kDefaultTwoModeCap;
    double boundary_tol = 1e-6;
};

inline double total_variation(const ModeDistribution &a, const ModeDistribution &b) {
    if (a.k_min != b.k_min || a.masses.size() != b.masses.size())
        throw Error(ErrorCode::WrongArity, "distributions use different bins");
    const auto fa = a.flat(), fb = b.flat();
    double s = 0;
    for (std::size_t i = 0; i < fa.size(); ++i) s += std::abs(fa[i] - fb[i]);
    return 0.5 * s;
}

namespace detail {

inline bool gaussian_only(const GateSequence &seq) {
    return std::all_of(seq.gates.begin(), seq.gates.end(), [](const Gate &g) { return g.is_gaussian(); });
}

/// Fill bins from an interval-mass function; lo/hi may be infinite.
template <class Mass>
ModeDistribution bin_with(int mode, const grid::HomodyneSpec &h, int window, Mass mass) {
    const long k_max = static_cast<long>(h.K) * window / 2;
    const double eta = h.eta();
    ModeDistribution d;
    d.mode = mode;
    d.k_min = -k_max;
    const double inf = std::numeric_limits<double>::infinity();
    d.underflow = mass(-inf, h.center(-k_max) - eta);
    for (long k = -k_max; k <= k_max; ++k) d.masses.push_back(mass(h.center(k) - eta, h.center(k) + eta));
    d.overflow = mass(h.center(k_max) + eta, inf);
    return d;
}

/// Normal mass on [lo, hi]; erfc on the far side keeps the tails accurate.
inline double normal_mass(double mu, double var, double lo, double hi) {
    const double s = std::sqrt(2.0 * var);
    const double a = (lo - mu) / s, b = (hi - mu) / s;
    if (a >= 0) return 0.5 * (std::erfc(a) - std::erfc(b));
    if (b <= 0) return 0.5 * (std::erfc(-b) - std::erfc(-a));
    return 1.0 - 0.5 * (std::erfc(-a) + std::erfc(b));
}

/// Composite Gaussian gates rewritten over shears, CZ and Fourier.
inline std::vector<Gate> elementary(const GateSequence &seq) {
    std::vector<Gate> out;
    for (const auto &g : seq.gates) {
        GateSequence sub;
        switch (g.kind) {
            case GateKind::Squeeze: sub = decompose_squeeze(g.param); break;
            case GateKind::Rotation: sub = decompose_rotation(g.param); break;
            case GateKind::BeamSplitter: sub = decompose_beamsplitter(g.param); break;
            case GateKind::CrossKerr:
                throw Error(ErrorCode::NonGaussian, "cross-Kerr must be materialized before simulation");
            default: out.push_back(g); continue;
        }
        for (auto h : sub.gates) {
            const int a = h.mode, b = h.mode2;
            h.mode = a == 0 ? g.mode : g.mode2;
            if (b >= 0) h.mode2 = b == 0 ? g.mode : g.mode2;
            out.push_back(h);
        }
    }
    return out;
}

inline std::size_t next_pow2(double x) { return std::bit_ceil(static_cast<std::size_t>(std::ceil(std::max(x, 2.0)))); }

}  // namespace detail

/// Exact Gaussian evolution of means and covariance; p marginals binned with erf.
inline Distribution simulate_covariance(const CircuitSpec &spec, const SimOptions &opt = {}) {
    const int n = spec.modes;
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(2 * n);
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    const double s = spec.model.input_sigma;
    for (int j = 0; j < n; ++j) {
        v(j, j) = 0.5 / (s * s);
        v(j + n, j + n) = 0.5 * s * s;
    }
    for (const auto &g : spec.gates.gates) {
        const auto S = symplectic_of(g, n);
        mu = S * mu;
        v = S * v * S.transpose();
        if (g.kind == GateKind::Displacement || g.kind == GateKind::LogicalZ) mu(g.mode + n) += g.param;
    }
    Distribution d{SimPath::Covariance, spec.homodyne, opt.window, 0, {}};
    for (int j = 0; j < n; ++j) {
        const double m = mu(j + n), var = v(j + n, j + n);
        d.modes.push_back(detail::bin_with(j, spec.homodyne, opt.window,
                                           [&](double lo, double hi) { return detail::normal_mass(m, var, lo, hi); }));
    }
    return d;
}

/// Wavefunction evolution on a grid (n <= 2).
///
/// Linear phases exp(i a q) are kept as momentum offsets instead of being
/// imprinted: they commute with every position-diagonal gate and become a
/// position shift at a Fourier transform. Without this the large displacement
/// entries would push the momentum support off any affordable grid.
/// Circuits without F use a grid sized from a bound on the phase gradient;
/// circuits with F use a self-dual grid and are checked for leakage.
inline Distribution simulate_grid(const CircuitSpec &spec, const SimOptions &opt = {}) {
    const int n = spec.modes;
    if (n > 2) throw Error(ErrorCode::TooManyModes, "grid simulation supports at most two modes");
    const auto gates = detail::elementary(spec.gates);
    const double sc = spec.model.input_q_width();
    const bool has_f = std::any_of(gates.begin(), gates.end(), [](const Gate &g) {
        return g.kind == GateKind::Fourier || g.kind == GateKind::FourierInverse;
    });

    grid::GridSpec gs;
    if (has_f) {
        gs = grid::GridSpec::self_dual((n == 1 ? opt.fourier_grid_1 : opt.fourier_grid_2) * opt.refine);
    } else {
        const double qmax = 9.0 * sc;
        std::array<double, 2> grad{0.0, 0.0};
        for (const auto &g : gates) {
            if (g.kind == GateKind::CZ) {
                grad[g.mode] += std::abs(g.param) * qmax;
                grad[g.mode2] += std::abs(g.param) * qmax;
                continue;
            }
            const auto p = g.q_polynomial();
            grad[g.mode] += 2 * std::abs(p.c[2]) * qmax + 3 * std::abs(p.c[3]) * qmax * qmax;
        }
        const double pmax = std::max(grad[0], grad[1]) + 9.0 / sc;
        const double dq = kPi / pmax;
        gs = grid::GridSpec::symmetric(static_cast<int>(detail::next_pow2(2 * qmax / dq) * opt.refine), qmax);
    }
    const long pts = n == 1 ? gs.n : static_cast<long>(gs.n) * gs.n;
    if (pts > (n == 1 ? opt.one_mode_cap : opt.two_mode_cap))
        throw Error(ErrorCode::TooLarge, "grid for this circuit needs " + std::to_string(pts) + " points");

    const auto one = grid::from_comb(comb::vacuum(sc), gs);
    grid::GridState st = n == 1 ? one : grid::product(one, one, opt.two_mode_cap);
    std::array<double, 2> offset{0.0, 0.0};
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::Fourier:
            case GateKind::FourierInverse: {
                const int sign = g.kind == GateKind::Fourier ? +1 : -1;
                grid::apply_fourier(st, g.mode, sign);
                // Momentum a maps to position -a under F and +a under F^dagger.
                if (offset[g.mode] != 0.0) grid::apply_q_shift(st, g.mode, -sign * offset[g.mode]);
                offset[g.mode] = 0.0;
                break;
            }
            case GateKind::CZ: grid::apply_cz(st, g.param); break;
            default: {
                auto p = g.q_polynomial();
                offset[g.mode] += p.c[1];
                p.c[1] = 0.0;
                grid::apply_q_diagonal(st, g.mode, p);
            }
        }
    }
    if (!(st.boundary_ratio() < opt.boundary_tol))
        throw Error(ErrorCode::GridTooSmall, "position support reaches the grid edge");
    {
        auto pst = st;
        for (int j = 0; j < n; ++j) grid::apply_fourier(pst, j);
        if (!(pst.boundary_ratio() < opt.boundary_tol))
            throw Error(ErrorCode::GridTooSmall, "momentum support reaches the grid edge");
    }

    Distribution d{SimPath::Grid, spec.homodyne, opt.window, gs.n, {}};
    for (int j = 0; j < n; ++j) {
        const auto a = grid::momentum_autocorrelation(st, j);
        const double dq = st.axis[j].dq;
        const double band = kPi / dq;  // the grid resolves momenta in [-band, band]
        const double off = offset[j];
        d.modes.push_back(detail::bin_with(j, spec.homodyne, opt.window, [&](double lo, double hi) {
            lo = std::max(lo - off, -band);
            hi = std::min(hi - off, band);
            return hi > lo ? std::max(0.0, grid::detail::band_mass(a, dq, lo, hi)) : 0.0;
        }));
    }
    return d;
}

inline Distribution simulate_distribution(const CircuitSpec &spec, const SimOptions &opt = {}) {
    if (!opt.force_grid && detail::gaussian_only(spec.gates)) return simulate_covariance(spec, opt);
    if (spec.modes > 2) throw Error(ErrorCode::TooManyModes, "non-Gaussian circuits are simulated for at most two modes");
    return simulate_grid(spec, opt);
}

struct OutcomeRecord {
    long shot = 0;
    int mode = 0;
    long bin = 0;  // k_min - 1 and k_max + 1 collect the tails
    double center = 0.0;

    friend bool operator==(const OutcomeRecord &, const OutcomeRecord &) = default;
};

/// Independent draws from each mode's marginal. Mode j uses Rng::stream(seed, j),
/// so the output does not depend on how modes are scheduled across threads.
inline std::vector<OutcomeRecord> sample_from(const Distribution &d, long shots, std::uint64_t seed) {
    if (shots < 0) throw Error(ErrorCode::OutOfRange, "shots must be >= 0");
    const int n = static_cast<int>(d.modes.size());
    std::vector<std::vector<long>> bins(n);
    auto worker = [&](int j) {
        const auto &md = d.modes[j];
        auto p = md.flat();
        std::vector<double> cdf(p.size());
        double acc = 0;
        for (std::size_t i = 0; i < p.size(); ++i) cdf[i] = (acc += p[i]);
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(j));
        bins[j].resize(shots);
        for (long s = 0; s < shots; ++s) {
            const double u = rng.uniform() * acc;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const long idx = std::min<long>(it - cdf.begin(), static_cast<long>(cdf.size()) - 1);
            bins[j][s] = md.k_min - 1 + idx;
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < n; ++j) pool.emplace_back(worker, j);
    if (n > 0) worker(0);
    for (auto &t : pool) t.join();

    std::vector<OutcomeRecord> out;
    out.reserve(static_cast<std::size_t>(shots) * n);
    for (long s = 0; s < shots; ++s)
        for (int j = 0; j < n; ++j) out.push_back({s, j, bins[j][s], d.homodyne.center(bins[j][s])});
    return out;
}

inline std::vector<OutcomeRecord> sample(const CircuitSpec &spec, long shots, std::uint64_t seed,
                                         const SimOptions &opt = {}) {
    if (shots < 0) throw Error(ErrorCode::OutOfRange, "shots must be >= 0");
    if (shots == 0) return {};
    return sample_from(simulate_distribution(spec, opt), shots, seed);
}

}  // namespace cvgkp::sampler
