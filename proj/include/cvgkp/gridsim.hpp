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

// Position-grid wavefunctions for one or two modes, binned homodyne
// detection, the q-correction gadget and a truncated Fock check of the
// pi-strength cross-Kerr identity.
//
// Fourier sign: (F psi)(x) = (2 pi)^(-1/2) int e^{+ixy} psi(y) dy. On Hermite
// functions this is multiplication by i^n, i.e. F = exp(i (pi/2) n), whose
// Heisenberg action is q -> -p, p -> q as in the symplectic table.

#pragma once

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "cvgkp/comb.hpp"
#include "cvgkp/core.hpp"
#include "cvgkp/symplectic.hpp"

namespace cvgkp::grid {

/// Points q_j = q_min + j dq, j = 0..n-1.
struct GridSpec {
    int n = 0;
    double q_min = 0.0;
    double dq = 0.0;

    static GridSpec symmetric(int n, double q_max) { return {n, -q_max, 2.0 * q_max / n}; }
    /// dq = sqrt(2 pi / n): the Fourier transform maps the grid onto itself.
    static GridSpec self_dual(int n) {
        const double dq = std::sqrt(2.0 * kPi / n);
        return {n, -0.5 * n * dq, dq};
    }
    double q(int j) const { return q_min + j * dq; }
    double q_max() const { return q_min + (n - 1) * dq; }
    bool centered() const { return std::abs(q_min + 0.5 * n * dq) <= 1e-12 * std::max(1.0, std::abs(q_min)); }
};

inline constexpr long kDefaultTwoModeCap = 1024L * 1024L;

/// Amplitudes on a product grid; two-mode index is i0 * n + i1.
struct GridState {
    int modes = 1;
    int n = 0;
    std::array<GridSpec, 2> axis{};
    std::vector<cplx> psi;

    std::size_t index(int i0, int i1) const { return static_cast<std::size_t>(i0) * n + i1; }
    double cell() const { return modes == 1 ? axis[0].dq : axis[0].dq * axis[1].dq; }

    double norm2() const {
        double s = 0;
        for (const auto &a : psi) s += std::norm(a);
        return s * cell();
    }
    void normalize() {
        const double s = std::sqrt(norm2());
        for (auto &a : psi) a /= s;
    }
    /// Largest edge amplitude relative to the maximum.
    double boundary_ratio() const {
        double mx = 0, edge = 0;
        for (const auto &a : psi) mx = std::max(mx, std::abs(a));
        auto upd = [&](std::size_t k) { edge = std::max(edge, std::abs(psi[k])); };
        if (modes == 1) {
            upd(0);
            upd(n - 1);
        } else {
            for (int i = 0; i < n; ++i) {
                upd(index(0, i));
                upd(index(n - 1, i));
                upd(index(i, 0));
                upd(index(i, n - 1));
            }
        }
        return mx > 0 ? edge / mx : 0.0;
    }
    bool boundary_ok(double tol = 1e-10) const { return boundary_ratio() < tol; }
};

namespace detail {

inline void check_mode(const GridState &s, int mode) {
    if (mode < 0 || mode >= s.modes) throw Error(ErrorCode::WrongArity, "mode index out of range for grid state");
}

inline void check_covers(const comb::GaussianComb &c, const GridSpec &g) {
    for (const auto &t : c.terms) {
        if (t.center - 8 * c.sigma < g.q_min || t.center + 8 * c.sigma > g.q_max())
            throw Error(ErrorCode::GridTooSmall, "grid does not cover comb centers +- 8 sigma");
    }
}

/// Calls f(line) for every 1D line of `mode`, writing results back.
template <class F>
void for_each_line(GridState &s, int mode, F f) {
    std::vector<cplx> line(s.n);
    if (s.modes == 1) {
        f(s.psi);
        return;
    }
    for (int o = 0; o < s.n; ++o) {
        for (int i = 0; i < s.n; ++i) line[i] = s.psi[mode == 0 ? s.index(i, o) : s.index(o, i)];
        f(line);
        for (int i = 0; i < s.n; ++i) s.psi[mode == 0 ? s.index(i, o) : s.index(o, i)] = line[i];
    }
}

/// sign = +1 applies F, -1 applies F^dagger, on a centered axis.
inline void fourier_line(Eigen::FFT<double> &fft, std::vector<cplx> &line, double dq, int sign) {
    const int n = static_cast<int>(line.size());
    std::vector<cplx> in(n), out(n);
    for (int j = 0; j < n; ++j) in[j] = (j % 2 ? -1.0 : 1.0) * line[j];
    if (sign > 0) {
        fft.inv(out, in);
        for (auto &v : out) v *= static_cast<double>(n);
    } else {
        fft.fwd(out, in);
    }
    // e^{+- i pi n / 2} from recentering both indices.
    const cplx phase = std::polar(dq / std::sqrt(2.0 * kPi), sign * kPi * 0.5 * n);
    for (int k = 0; k < n; ++k) line[k] = (k % 2 ? -1.0 : 1.0) * phase * out[k];
}

/// Autocorrelation A(d) = sum_j u_{j+d} conj(u_j), accumulated over lines, for d = 0..n-1.
class Autocorrelation {
public:
    explicit Autocorrelation(int n) : n_(n), len_(1) {
        while (len_ < 2 * n) len_ <<= 1;
        power_.assign(len_, 0.0);
    }
    void add(const std::vector<cplx> &u, double weight) {
        std::vector<cplx> in(len_, 0.0), out;
        std::copy(u.begin(), u.end(), in.begin());
        fft_.fwd(out, in);
        for (int k = 0; k < len_; ++k) power_[k] += weight * std::norm(out[k]);
    }
    const std::vector<double> &power() const { return power_; }
    std::vector<cplx> result() {
        std::vector<cplx> spec(power_.begin(), power_.end()), a;
        fft_.inv(a, spec);
        a.resize(n_);
        return a;
    }

private:
    int n_;
    int len_;
    std::vector<double> power_;
    Eigen::FFT<double> fft_;
};

/// int_a^b |u~(p)|^2 dp for the band-limited interpolant with spacing dq.
inline double band_mass(const std::vector<cplx> &a, double dq, double lo, double hi) {
    double s = a[0].real() * (hi - lo);
    for (std::size_t d = 1; d < a.size(); ++d) {
        const double x = static_cast<double>(d) * dq;
        const cplx w = (std::polar(1.0, -hi * x) - std::polar(1.0, -lo * x)) / cplx(0.0, -x);
        s += 2.0 * (a[d] * w).real();
    }
    return dq * dq / (2.0 * kPi) * s;
}

}  // namespace detail

inline GridState from_comb(const comb::GaussianComb &c, const GridSpec &g) {
    detail::check_covers(c, g);
    GridState s;
    s.modes = 1;
    s.n = g.n;
    s.axis = {g, g};
    s.psi.resize(g.n);
    for (int j = 0; j < g.n; ++j) s.psi[j] = c(g.q(j));
    s.normalize();
    return s;
}

/// Tensor product of two single-mode states on grids of equal size.
inline GridState product(const GridState &a, const GridState &b, long cap = kDefaultTwoModeCap) {
    if (a.modes != 1 || b.modes != 1 || a.n != b.n) throw Error(ErrorCode::WrongArity, "product needs two single-mode states of equal size");
    if (static_cast<long>(a.n) * a.n > cap) throw Error(ErrorCode::TooLarge, "two-mode grid exceeds point cap");
    GridState s;
    s.modes = 2;
    s.n = a.n;
    s.axis = {a.axis[0], b.axis[0]};
    s.psi.resize(static_cast<std::size_t>(a.n) * a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) s.psi[s.index(i, j)] = a.psi[i] * b.psi[j];
    return s;
}

inline void apply_q_diagonal(GridState &s, int mode, const QPolynomial &poly) {
    detail::check_mode(s, mode);
    if (poly.is_zero()) return;
    const auto &g = s.axis[mode];
    std::vector<cplx> ph(s.n);
    for (int j = 0; j < s.n; ++j) ph[j] = std::polar(1.0, poly(g.q(j)));
    if (s.modes == 1) {
        for (int j = 0; j < s.n; ++j) s.psi[j] *= ph[j];
        return;
    }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) s.psi[s.index(i, j)] *= ph[mode == 0 ? i : j];
}

/// F (sign = +1) or F^dagger (sign = -1); the axis spacing becomes 2 pi / (n dq).
inline void apply_fourier(GridState &s, int mode, int sign = +1) {
    detail::check_mode(s, mode);
    auto &g = s.axis[mode];
    if (!g.centered()) throw Error(ErrorCode::AsymmetricGrid, "Fourier transform needs q_min = -n dq / 2");
    Eigen::FFT<double> fft;
    const double dq = g.dq;
    detail::for_each_line(s, mode, [&](std::vector<cplx> &line) { detail::fourier_line(fft, line, dq, sign); });
    const double dp = 2.0 * kPi / (s.n * dq);
    g = {s.n, -0.5 * s.n * dp, dp};
}

inline void apply_cz(GridState &s, double b) {
    if (s.modes != 2) throw Error(ErrorCode::WrongArity, "CZ needs a two-mode state");
    if (b == 0.0) return;
    for (int i = 0; i < s.n; ++i) {
        const double q0 = s.axis[0].q(i);
        for (int j = 0; j < s.n; ++j) s.psi[s.index(i, j)] *= std::polar(1.0, b * q0 * s.axis[1].q(j));
    }
}

/// psi(q) -> psi(q - d) on one mode, exact for band-limited states.
inline void apply_q_shift(GridState &s, int mode, double d) {
    detail::check_mode(s, mode);
    const double dq = s.axis[mode].dq;
    const int n = s.n;
    Eigen::FFT<double> fft;
    std::vector<cplx> ph(n);
    for (int k = 0; k < n; ++k) {
        const int kk = k < n / 2 ? k : k - n;
        ph[k] = std::polar(1.0, -2.0 * kPi * kk / (n * dq) * d);
    }
    detail::for_each_line(s, mode, [&](std::vector<cplx> &line) {
        std::vector<cplx> f;
        fft.fwd(f, line);
        for (int k = 0; k < n; ++k) f[k] *= ph[k];
        fft.inv(line, f);
    });
}

inline void apply_gate(GridState &s, const Gate &g);

inline void apply_sequence(GridState &s, const GateSequence &seq) {
    for (const auto &g : seq.gates) apply_gate(s, g);
}

inline void apply_gate(GridState &s, const Gate &g) {
    switch (g.kind) {
        case GateKind::Fourier: apply_fourier(s, g.mode, +1); break;
        case GateKind::FourierInverse: apply_fourier(s, g.mode, -1); break;
        case GateKind::CZ:
            if (s.modes != 2) throw Error(ErrorCode::WrongArity, "CZ needs a two-mode state");
            apply_cz(s, g.param);
            break;
        case GateKind::Squeeze: {
            auto seq = decompose_squeeze(g.param);
            for (auto &h : seq.gates) h.mode = g.mode;
            for (const auto &h : seq.gates) apply_gate(s, h);
            break;
        }
        case GateKind::Rotation: {
            auto seq = decompose_rotation(g.param);
            for (const auto &h : seq.gates) apply_gate(s, Gate{h.kind, h.param, g.mode, -1});
            break;
        }
        case GateKind::BeamSplitter: {
            if (s.modes != 2) throw Error(ErrorCode::WrongArity, "beamsplitter needs a two-mode state");
            apply_sequence(s, decompose_beamsplitter(g.param));
            break;
        }
        case GateKind::CrossKerr:
            throw Error(ErrorCode::NonGaussian, "cross-Kerr has no direct grid action; materialize it first");
        default: apply_q_diagonal(s, g.mode, g.q_polynomial()); break;
    }
}

struct HomodyneSpec {
    int K = 4;
    double eta() const { return kSqrtPi / K; }
    /// Bin k covers [2 eta k - eta, 2 eta k + eta].
    double center(long k) const { return 2.0 * eta() * k; }
    long bin_of(double p) const { return std::lround(p / (2.0 * eta())); }
};

namespace detail {

inline Autocorrelation momentum_correlator(const GridState &s, int mode) {
    check_mode(s, mode);
    Autocorrelation ac(s.n);
    if (s.modes == 1) {
        ac.add(s.psi, 1.0);
    } else {
        const double w = s.axis[1 - mode].dq;
        std::vector<cplx> line(s.n);
        for (int o = 0; o < s.n; ++o) {
            for (int i = 0; i < s.n; ++i) line[i] = s.psi[mode == 0 ? s.index(i, o) : s.index(o, i)];
            ac.add(line, w);
        }
    }
    return ac;
}

}  // namespace detail

/// |psi~(p)|^2 autocorrelation of `mode`, traced over the other mode.
inline std::vector<cplx> momentum_autocorrelation(const GridState &s, int mode) {
    return detail::momentum_correlator(s, mode).result();
}

/// Probability of a p outcome in [lo, hi] on `mode`.
inline double bin_mass(const GridState &s, int mode, double lo, double hi) {
    return detail::band_mass(momentum_autocorrelation(s, mode), s.axis[mode].dq, lo, hi);
}

struct HomodyneBins {
    long k_min = 0;
    std::vector<double> masses;  // bins k_min, k_min + 1, ...
    double outside = 0.0;        // mass beyond the listed bins

    double total() const {
        double t = outside;
        for (double m : masses) t += m;
        return t;
    }
};

/// Bin masses over every bin overlapping the momentum support (density above 1e-16 of its peak).
inline HomodyneBins homodyne_bins(const GridState &s, int mode, const HomodyneSpec &spec) {
    detail::Autocorrelation ac = detail::momentum_correlator(s, mode);
    const double dq = s.axis[mode].dq;
    // The zero-padded power spectrum samples |psi~(p)|^2 and locates the support.
    const auto &pw = ac.power();
    const int len = static_cast<int>(pw.size());
    const double peak = *std::max_element(pw.begin(), pw.end());
    double p_lo = 0, p_hi = 0;
    for (int k = 0; k < len; ++k) {
        if (pw[k] < 1e-16 * peak) continue;
        const double p = 2.0 * kPi * (k < len / 2 ? k : k - len) / (len * dq);
        p_lo = std::min(p_lo, p);
        p_hi = std::max(p_hi, p);
    }
    const auto a = ac.result();
    HomodyneBins out;
    out.k_min = spec.bin_of(p_lo) - 1;
    const long k_max = spec.bin_of(p_hi) + 1;
    const double eta = spec.eta();
    double sum = 0;
    for (long k = out.k_min; k <= k_max; ++k) {
        const double c = spec.center(k);
        const double m = std::max(0.0, detail::band_mass(a, dq, c - eta, c + eta));
        out.masses.push_back(m);
        sum += m;
    }
    out.outside = std::max(0.0, s.norm2() - sum);
    return out;
}

/// <phi| rho |phi> / tr(rho) and tr(rho) for the state of the other mode after a p in [lo, hi] outcome.
struct BinProjection {
    double probability = 0.0;
    double fidelity = 0.0;
};

inline BinProjection project_bin(const GridState &s, int mode, double lo, double hi, const std::vector<cplx> &target) {
    if (s.modes != 2) throw Error(ErrorCode::WrongArity, "project_bin needs a two-mode state");
    detail::check_mode(s, mode);
    const int other = 1 - mode;
    const double dq_o = s.axis[other].dq;
    double tn = 0;
    for (const auto &t : target) tn += std::norm(t);
    tn = std::sqrt(tn * dq_o);
    std::vector<cplx> u(s.n, 0.0);
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            const cplx v = mode == 0 ? s.psi[s.index(i, j)] * std::conj(target[j]) : s.psi[s.index(j, i)] * std::conj(target[j]);
            u[i] += v;
        }
        u[i] *= dq_o / tn;
    }
    detail::Autocorrelation ac(s.n);
    ac.add(u, 1.0);
    const double overlap = detail::band_mass(ac.result(), s.axis[mode].dq, lo, hi);
    BinProjection r;
    r.probability = bin_mass(s, mode, lo, hi);
    r.fidelity = r.probability > 0 ? overlap / r.probability : 0.0;
    return r;
}

/// Momentum representation of a comb: sum_c a_c pi^(-1/4) sigma^(1/2) e^{-ipc} e^{-p^2 sigma^2 / 2}.
inline cplx comb_momentum(const comb::GaussianComb &c, double p) {
    const double env = std::pow(kPi, -0.25) * std::sqrt(c.sigma) * std::exp(-0.5 * p * p * c.sigma * c.sigma);
    cplx s = 0;
    for (const auto &t : c.terms) s += t.amp * std::polar(1.0, -p * t.center);
    return s * env;
}

/// Reduce x into (-sqrt(pi)/2, sqrt(pi)/2].
inline double reduce_half_spacing(double x) {
    double r = x - kSqrtPi * std::round(x / kSqrtPi);
    if (r <= -kSqrtPi / 2) r += kSqrtPi;
    if (r > kSqrtPi / 2) r -= kSqrtPi;
    return r;
}

/// Offset of the peak lattice from multiples of sqrt(pi), in (-sqrt(pi)/2, sqrt(pi)/2].
inline double lattice_offset(const GridState &s) {
    cplx m = 0;
    for (int j = 0; j < s.n; ++j) m += std::norm(s.psi[j]) * std::polar(1.0, 2.0 * kPi * s.axis[0].q(j) / kSqrtPi);
    return reduce_half_spacing(std::arg(m) * kSqrtPi / (2.0 * kPi));
}

/// Weight on peaks nearest even and odd multiples of sqrt(pi).
inline std::pair<double, double> sublattice_weights(const GridState &s) {
    double even = 0, odd = 0;
    for (int j = 0; j < s.n; ++j) {
        const long k = std::lround(s.axis[0].q(j) / kSqrtPi);
        (k % 2 == 0 ? even : odd) += std::norm(s.psi[j]) * s.axis[0].dq;
    }
    return {even, odd};
}

struct EcResult {
    GridState corrected;
    long bin = 0;                 // ancilla homodyne bin index
    double sampled_p = 0.0;       // continuous outcome drawn inside the bin
    double measured_shift = 0.0;  // inferred q shift, reduced to (-sqrt(pi)/2, sqrt(pi)/2]
    double residual_shift = 0.0;  // lattice offset of the corrected state
    bool flip_flag = false;       // corrected state sits on the other logical sublattice
};

/// q-error correction: CZ(1) from data onto a GKP ancilla, binned p readout of the
/// ancilla, then a q shift of the data by the reduced bin center.
/// With K = 2 (mod 4) every multiple of sqrt(pi) is a bin center and sqrt(pi)/2 a
/// bin edge, so the flip decision does not depend on which lattice period the
/// outcome lands in. Odd K moves the effective threshold by eta on odd periods.
///
/// After the CZ the joint amplitude in the ancilla momentum basis is
/// psi(q) phi~(p - q), so the outcome density is a convolution and the data
/// conditional state is pointwise; no two-mode grid is needed.
inline EcResult ec_gadget(const GridState &data, const comb::GaussianComb &ancilla, const HomodyneSpec &spec,
                          std::uint64_t seed, int logical_reference = 0) {
    if (data.modes != 1) throw Error(ErrorCode::WrongArity, "ec_gadget needs single-mode data");
    const auto &g = data.axis[0];
    const int n = data.n;
    // Outcome density P(M) = sum_j |psi_j|^2 |phi~(M - q_j)|^2 dq on M = q_j + p_i.
    const double p_reach = 9.0 / ancilla.sigma;  // peak envelope e^{-p^2 sigma^2 / 2} below 1e-17
    const int np = static_cast<int>(std::ceil(2 * p_reach / g.dq)) | 1;
    const double p0 = -0.5 * (np - 1) * g.dq;
    std::vector<double> anc(np);
    for (int i = 0; i < np; ++i) anc[i] = std::norm(comb_momentum(ancilla, p0 + i * g.dq));
    int len = 1;
    while (len < n + np) len <<= 1;
    Eigen::FFT<double> fft;
    std::vector<cplx> a(len, 0.0), b(len, 0.0), fa, fb, conv;
    for (int j = 0; j < n; ++j) a[j] = std::norm(data.psi[j]);
    for (int i = 0; i < np; ++i) b[i] = anc[i];
    fft.fwd(fa, a);
    fft.fwd(fb, b);
    for (int k = 0; k < len; ++k) fa[k] *= fb[k];
    fft.inv(conv, fa);
    // conv[t] sits at M = g.q_min + p0 + t dq.
    const int nm = n + np - 1;
    std::vector<double> cdf(nm + 1, 0.0);
    for (int t = 0; t < nm; ++t) cdf[t + 1] = cdf[t] + std::max(0.0, conv[t].real());
    Rng rng(seed);
    const double u = rng.uniform() * cdf[nm];
    const int t = static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) - 1;
    const double m_val = g.q_min + p0 + (std::clamp(t, 0, nm - 1) + rng.uniform() - 0.5) * g.dq;

    EcResult r;
    r.sampled_p = m_val;
    r.bin = spec.bin_of(m_val);
    r.measured_shift = reduce_half_spacing(spec.center(r.bin));
    r.corrected = data;
    for (int j = 0; j < n; ++j) r.corrected.psi[j] *= comb_momentum(ancilla, m_val - g.q(j));
    r.corrected.normalize();
    apply_q_shift(r.corrected, 0, -r.measured_shift);
    r.corrected.normalize();
    r.residual_shift = lattice_offset(r.corrected);
    const auto [even, odd] = sublattice_weights(r.corrected);
    r.flip_flag = (odd > even) != (logical_reference == 1);
    return r;
}

inline double fidelity(const GridState &a, const GridState &b) {
    if (a.psi.size() != b.psi.size()) throw Error(ErrorCode::WrongArity, "fidelity needs equal grids");
    cplx s = 0;
    for (std::size_t i = 0; i < a.psi.size(); ++i) s += std::conj(a.psi[i]) * b.psi[i];
    return std::norm(s * a.cell());
}

struct FockCheck {
    double fidelity_lhs_rhs = 0.0;
    double sign_error_prob = 0.0;
    double truncation_tail = 0.0;
};

namespace detail {

inline std::vector<double> coherent(double alpha, int d) {
    std::vector<double> c(d);
    c[0] = std::exp(-0.5 * alpha * alpha);
    for (int k = 1; k < d; ++k) c[k] = c[k - 1] * alpha / std::sqrt(static_cast<double>(k));
    return c;
}

/// Hermite functions h_0..h_{d-1}(q) for vacuum variance 1/2.
inline std::vector<double> hermite_functions(double q, int d) {
    std::vector<double> h(d);
    h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * q * q);
    if (d > 1) h[1] = kSqrt2 * q * h[0];
    for (int k = 1; k + 1 < d; ++k)
        h[k + 1] = std::sqrt(2.0 / (k + 1)) * q * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
    return h;
}

}  // namespace detail

/// e^{i pi n1 n2}|alpha>|beta> versus (|alpha>(|beta>+|-beta>) + |-alpha>(|beta>-|-beta>)) / 2.
inline FockCheck cross_kerr_fock(double alpha, double beta, int d) {
    const double need = 4.0 * std::max(alpha * alpha, beta * beta) + 20.0;
    if (d < need) throw Error(ErrorCode::TruncationTooSmall, "D must be >= 4 max(alpha^2, beta^2) + 20");
    const auto ca = detail::coherent(alpha, d), cb = detail::coherent(beta, d);
    const auto cma = detail::coherent(-alpha, d), cmb = detail::coherent(-beta, d);
    FockCheck r;
    double sa = 0, sb = 0;
    for (int k = 0; k < d; ++k) {
        sa += ca[k] * ca[k];
        sb += cb[k] * cb[k];
    }
    r.truncation_tail = std::max(1.0 - sa, 1.0 - sb);
    double dot = 0, nl = 0, nr = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double lhs = ((i * j) % 2 ? -1.0 : 1.0) * ca[i] * cb[j];
            const double rhs = 0.5 * (ca[i] * (cb[j] + cmb[j]) + cma[i] * (cb[j] - cmb[j]));
            dot += lhs * rhs;
            nl += lhs * lhs;
            nr += rhs * rhs;
        }
    }
    r.fidelity_lhs_rhs = dot * dot / (nl * nr);
    // P(q < 0) for |beta>, integrated from its Fock expansion (Simpson).
    const int steps = 20000;
    const double lo = -14.0, h = -lo / steps;
    double acc = 0;
    for (int s = 0; s <= steps; ++s) {
        const double q = lo + s * h;
        const auto hf = detail::hermite_functions(q, d);
        double psi = 0;
        for (int k = 0; k < d; ++k) psi += cb[k] * hf[k];
        const double w = (s == 0 || s == steps) ? 1.0 : (s % 2 ? 4.0 : 2.0);
        acc += w * psi * psi;
    }
    r.sign_error_prob = acc * h / 3.0 / sb;
    return r;
}

struct SynthesisOracle {
    double fidelity = 0.0;
    double grid_success = 0.0;
    double comb_success = 0.0;
    double eta = 0.0;
};

/// m = 1 synthesis on a two-mode grid: two cats, decomposed 50:50 beamsplitter,
/// p = 0 bin on mode 0, compared with the comb protocol.
inline SynthesisOracle grid_synthesis_m1(const GridSpec &g, int K, long cap = kDefaultTwoModeCap) {
    const double sigma = comb::sigma_of_m(1).sigma;
    const HomodyneSpec spec{K};
    const double eta = spec.eta();
    const auto c = comb::cat(comb::cat_center(1), sigma);
    const auto one = from_comb(c, g);
    auto s = product(one, one, cap);
    apply_sequence(s, decompose_beamsplitter(0.5));
    const auto syn = comb::synthesize_gkp(1, sigma, eta);
    std::vector<cplx> target(s.n);
    for (int j = 0; j < s.n; ++j) target[j] = syn.comb(s.axis[1].q(j));
    const auto pr = project_bin(s, 0, -eta, eta, target);
    return {pr.fidelity, pr.probability, syn.success_prob, eta};
}

}  // namespace cvgkp::grid
