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

// Compiler for the cross-Kerr gate exp(i pi n1 n2).
//
// Three nested stages lower the strong interaction to elementary gates:
// concatenation into p steps of strength tau = pi/p, a symmetric nine-factor
// second-order splitting over the quartic pieces O1..O4, and a nested group
// commutator that realizes each exp(i theta O4) from CZ and cubic gates:
//
//   p1^2 p2^2 = -(1/9) [B, [C, A]],  A = q1 q2, B = p2^3, C = p1^3.
//
// O1..O3 are Fourier conjugates of O4. The quadratic remainder of n1 n2
// integrates to F1^dag F2^dag over the full strength pi and commutes with the
// quartic part, so it is emitted once after the last step.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cvgkp/core.hpp"
#include "cvgkp/symplectic.hpp"

namespace cvgkp::kerr {

enum class Quartic { O1, O2, O3, O4 };

inline std::string quartic_name(Quartic t) {
    switch (t) {
        case Quartic::O1: return "O1";
        case Quartic::O2: return "O2";
        case Quartic::O3: return "O3";
        case Quartic::O4: return "O4";
    }
    return "?";
}

struct SplitFactor {
    Quartic tag = Quartic::O1;
    double strength = 0.0;
};

struct KerrAngles {
    double cz_small = 0.0;
    double cubic_small = 0.0;
    double cubic_big = 0.0;
};

/// Angles of the full-strength O4 block: (tau/36)^(1/3) / (k l) and / k.
inline KerrAngles angles_for(double tau, double k, double l) {
    const double t = std::cbrt(tau / 36.0);
    return {t / (k * l), t / (k * l), t / k};
}

struct KerrPlan {
    double y = 0.0;
    int p = 0;
    double tau = 0.0;
    int k = 0;
    int l = 0;
    double p_raw = 0.0;  // before ceiling
    double k_raw = 0.0;
    double l_raw = 0.0;
    double per_block_count = 0.0;  // 2(4l^2+1)k^3, exact integer below 2^53
    double total_count = 0.0;      // 9 * per_block_count * p
    KerrAngles derived_angles;     // with the executed tau = pi/p
    KerrAngles table_angles;       // with the unrounded tau = sqrt(y/pi)
};

inline double block_count(double k, double l) { return 2.0 * (4.0 * l * l + 1.0) * k * k * k; }

/// Precision-budgeted plan for exp(i pi n1 n2) with total error y.
inline KerrPlan plan(double y) {
    if (!(y > 0.0 && y < kPi)) throw Error(ErrorCode::OutOfRange, "y must lie in (0, pi)");
    KerrPlan r;
    r.y = y;
    const double ratio = y / kPi;
    r.p_raw = kPi / std::sqrt(ratio);
    r.k_raw = std::pow(9.0, -1.0 / 3.0) * std::pow(4.0, -4.0 / 3.0) * std::pow(ratio, -5.0 / 6.0);
    r.l_raw = 1.0 / (4.0 * ratio);
    r.p = static_cast<int>(std::ceil(r.p_raw));
    r.k = std::max(1, static_cast<int>(std::ceil(r.k_raw)));
    r.l = std::max(1, static_cast<int>(std::ceil(r.l_raw)));
    r.tau = kPi / r.p;
    r.per_block_count = block_count(r.k, r.l);
    r.total_count = 9.0 * r.per_block_count * r.p;
    r.derived_angles = angles_for(r.tau, r.k, r.l);
    r.table_angles = angles_for(std::sqrt(ratio), r.k, r.l);
    return r;
}

/// Nine-factor symmetric splitting of exp(i tau (O1+O2+O3+O4)).
inline std::vector<SplitFactor> splitting_sequence(double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::OutOfRange, "tau must lie in (0, 1)");
    using enum Quartic;
    return {{O1, tau / 4}, {O2, tau / 2}, {O1, tau / 4}, {O3, tau / 2}, {O4, tau},
            {O3, tau / 2}, {O1, tau / 4}, {O2, tau / 2}, {O1, tau / 4}};
}

enum class Generator { A, B, C };

/// exp(i angle G), one factor of the nested product.
struct NestedFactor {
    Generator gen = Generator::A;
    double angle = 0.0;
};

enum class NestedForm {
    Corrected,  // second inner group is the inverse of the first
    Printed,    // second inner group as typeset; not an inverse (see tests)
};

/// One of the k^3 identical outer units, in operator-product order (leftmost acts last):
///   exp(iBs) G^(l^2) exp(-iBs) H^(l^2),  s = t/k, u = t/(kl).
struct NestedPattern {
    int k = 1;
    int l = 1;
    double s = 0.0;
    double u = 0.0;
    std::vector<NestedFactor> group;    // G
    std::vector<NestedFactor> inverse;  // H
};

inline NestedPattern nested_pattern(double tau_prime, int k, int l, NestedForm form = NestedForm::Corrected) {
    if (k < 1 || l < 1) throw Error(ErrorCode::OutOfRange, "k and l must be >= 1");
    NestedPattern n;
    n.k = k;
    n.l = l;
    const double t = std::cbrt(tau_prime);
    n.s = t / k;
    n.u = t / (static_cast<double>(k) * l);
    using enum Generator;
    n.group = {{A, n.u}, {C, n.u}, {A, -n.u}, {C, -n.u}};
    if (form == NestedForm::Corrected) {
        n.inverse = {{A, -n.u}, {C, n.u}, {A, n.u}, {C, -n.u}};
    } else {
        n.inverse = {{A, -n.u}, {C, -n.u}, {A, n.u}, {C, n.u}};
    }
    return n;
}

/// The full nested product, operator-product order, (2 + 8 l^2) k^3 factors.
inline std::vector<NestedFactor> expand(const NestedPattern &n) {
    std::vector<NestedFactor> unit;
    unit.push_back({Generator::B, n.s});
    for (int r = 0; r < n.l * n.l; ++r) unit.insert(unit.end(), n.group.begin(), n.group.end());
    unit.push_back({Generator::B, -n.s});
    for (int r = 0; r < n.l * n.l; ++r) unit.insert(unit.end(), n.inverse.begin(), n.inverse.end());
    std::vector<NestedFactor> out;
    const long reps = static_cast<long>(n.k) * n.k * n.k;
    out.reserve(unit.size() * static_cast<std::size_t>(reps));
    for (long r = 0; r < reps; ++r) out.insert(out.end(), unit.begin(), unit.end());
    return out;
}

/// Elementary gates of one nested block, application order (first acts first).
/// A -> CZ, C -> F1^dag Cubic F1 on mode 0, B -> the same on mode 1.
inline void emit_nested(const NestedPattern &n, GateSequence &out) {
    const auto factors = expand(n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        switch (it->gen) {
            case Generator::A: out.push(Gate::cz(it->angle, 0, 1)); break;
            case Generator::B:
            case Generator::C: {
                const int mode = it->gen == Generator::C ? 0 : 1;
                out.push(Gate::fourier_inverse(mode));
                out.push(Gate::cubic(it->angle, mode));
                out.push(Gate::fourier(mode));
                break;
            }
        }
    }
}

/// Elementary gate count of materialize(): p (9 (16 l^2 + 6) k^3 + 24) + 2.
inline double materialized_count(int p, int k, int l) {
    const double kk = k;
    const double ll = l;
    return p * (9.0 * (16.0 * ll * ll + 6.0) * kk * kk * kk + 24.0) + 2.0;
}

struct CountReport {
    double exact_total_real = 0.0;    // unrounded p, k, l
    double exact_total_ceiled = 0.0;  // integer plan
    double asymptotic_printed = 0.0;  // y^-5 pi^(3/2) / 512
    double asymptotic_consistent = 0.0;  // y^-5 pi^6 / 512
    double materialized = 0.0;
    bool prefactor_discrepancy = true;
};

inline CountReport count_report(double y) {
    const KerrPlan pl = plan(y);
    CountReport c;
    c.exact_total_real = 9.0 * block_count(pl.k_raw, pl.l_raw) * pl.p_raw;
    c.exact_total_ceiled = pl.total_count;
    c.asymptotic_printed = std::pow(y, -5.0) * std::pow(kPi, 1.5) / 512.0;
    c.asymptotic_consistent = std::pow(y, -5.0) * std::pow(kPi, 6.0) / 512.0;
    c.materialized = materialized_count(pl.p, pl.k, pl.l);
    c.prefactor_discrepancy = std::abs(c.asymptotic_printed / c.asymptotic_consistent - 1.0) > 1e-9;
    return c;
}

/// Elementary-gate sequence for the plan on two modes (0 and 1).
inline GateSequence materialize(const KerrPlan &pl, double cap, NestedForm form = NestedForm::Corrected) {
    const double count = materialized_count(pl.p, pl.k, pl.l);
    if (count > cap) {
        throw Error(ErrorCode::TooLarge, "materialized count " + std::to_string(static_cast<long long>(count)) +
                                             " exceeds cap " + std::to_string(static_cast<long long>(cap)));
    }
    GateSequence seq(2);
    seq.gates.reserve(static_cast<std::size_t>(count));
    const auto split = splitting_sequence(pl.tau);
    for (int step = 0; step < pl.p; ++step) {
        for (const auto &f : split) {
            // exp(i theta p1^2 p2^2 / 4) = exp(i tau' [B,[C,A]]) with tau' = -theta/36.
            const auto pattern = nested_pattern(-f.strength / 36.0, pl.k, pl.l, form);
            // q = F^dag p F, so conjugating the O4 block by F^dag on a mode turns p^2 into q^2 there.
            const bool on0 = f.tag == Quartic::O1 || f.tag == Quartic::O2;
            const bool on1 = f.tag == Quartic::O1 || f.tag == Quartic::O3;
            if (on0) seq.push(Gate::fourier(0));
            if (on1) seq.push(Gate::fourier(1));
            emit_nested(pattern, seq);
            if (on0) seq.push(Gate::fourier_inverse(0));
            if (on1) seq.push(Gate::fourier_inverse(1));
        }
    }
    seq.push(Gate::fourier_inverse(0));
    seq.push(Gate::fourier_inverse(1));
    return seq;
}

// ---------------------------------------------------------------------------
// Finite-dimensional checks of the splitting and rescaling identities.

namespace linalg {

using CMat = Eigen::MatrixXcd;

/// Hermitian (G + G^dag)/2 with i.i.d. complex normal G, scaled to spectral norm 1.
inline CMat random_hermitian(int dim, Rng &rng) {
    CMat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    CMat h = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    return h / norm;
}

/// exp(i theta H) for Hermitian H via its eigendecomposition.
inline CMat expi(const CMat &h, double theta) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, theta * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline CMat power(CMat base, std::uint64_t e) {
    CMat result = CMat::Identity(base.rows(), base.cols());
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

inline double op_norm(const CMat &m) {
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

}  // namespace linalg

/// Operator-norm error of the nested product against exp(i tau' [B,[C,A]]).
/// A, B, C are drawn in that order from Rng(seed) by linalg::random_hermitian.
inline double verify_rescaling(double tau_prime, int k, int l, int dim, std::uint64_t seed,
                               NestedForm form = NestedForm::Corrected) {
    using linalg::CMat;
    if (dim < 1 || dim > 8) throw Error(ErrorCode::OutOfRange, "dim must lie in [1, 8]");
    Rng rng(seed);
    const CMat a = linalg::random_hermitian(dim, rng);
    const CMat b = linalg::random_hermitian(dim, rng);
    const CMat c = linalg::random_hermitian(dim, rng);
    const CMat ca = c * a - a * c;
    const CMat target_gen = b * ca - ca * b;  // Hermitian
    const CMat exact = linalg::expi(target_gen, tau_prime);

    const auto n = nested_pattern(tau_prime, k, l, form);
    auto mat = [&](const NestedFactor &f) { return linalg::expi(f.gen == Generator::A ? a : f.gen == Generator::B ? b : c, f.angle); };
    auto product = [&](const std::vector<NestedFactor> &fs) {
        CMat r = CMat::Identity(dim, dim);
        for (const auto &f : fs) r = r * mat(f);
        return r;
    };
    const std::uint64_t l2 = static_cast<std::uint64_t>(l) * l;
    const CMat unit = linalg::expi(b, n.s) * linalg::power(product(n.group), l2) * linalg::expi(b, -n.s) *
                      linalg::power(product(n.inverse), l2);
    const CMat approx = linalg::power(unit, static_cast<std::uint64_t>(k) * k * k);
    return linalg::op_norm(approx - exact);
}

/// Operator-norm error of the nine-factor splitting on four random Hermitian generators.
inline double verify_splitting(double tau, int dim, std::uint64_t seed) {
    using linalg::CMat;
    Rng rng(seed);
    std::vector<CMat> o;
    for (int i = 0; i < 4; ++i) o.push_back(linalg::random_hermitian(dim, rng));
    const CMat exact = linalg::expi(o[0] + o[1] + o[2] + o[3], tau);
    CMat approx = CMat::Identity(dim, dim);
    for (const auto &f : splitting_sequence(tau)) approx = approx * linalg::expi(o[static_cast<int>(f.tag)], f.strength);
    return linalg::op_norm(approx - exact);
}

/// Least-squares slope of log(err) against log(x).
inline double loglog_slope(const std::vector<double> &x, const std::vector<double> &err) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(err[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cvgkp::kerr
