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

// Gate vocabulary and the Gaussian (symplectic) part of the gate algebra.
//
// Conventions, fixed once for the whole library:
//  * quadrature vectors are ordered (q_1..q_n, p_1..p_n);
//  * a symplectic matrix S describes the Heisenberg action x -> S x;
//  * a GateSequence is applied to states first-element-first, so its
//    symplectic matrix is the product of member matrices right to left;
//  * Shear(s) is the gate exp(i s q^2) of the elementary set. Its matrix is
//    [[1, 0], [2s, 1]]; the exp(i s q^2 / 2) convention used for the
//    decomposition identities corresponds to Shear(s/2).

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "cvgkp/core.hpp"

namespace cvgkp {

enum class GateKind {
    Displacement,
    Shear,
    Cubic,
    CZ,
    Fourier,
    FourierInverse,
    Squeeze,
    Rotation,
    BeamSplitter,
    CrossKerr,
    LogicalZ,
    LogicalT,
};

inline std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::Displacement: return "Displacement";
        case GateKind::Shear: return "Shear";
        case GateKind::Cubic: return "Cubic";
        case GateKind::CZ: return "CZ";
        case GateKind::Fourier: return "Fourier";
        case GateKind::FourierInverse: return "FourierInverse";
        case GateKind::Squeeze: return "Squeeze";
        case GateKind::Rotation: return "Rotation";
        case GateKind::BeamSplitter: return "BeamSplitter";
        case GateKind::CrossKerr: return "CrossKerr";
        case GateKind::LogicalZ: return "LogicalZ";
        case GateKind::LogicalT: return "LogicalT";
    }
    return "?";
}

/// Cubic polynomial c0 + c1 q + c2 q^2 + c3 q^3 generating a q-diagonal gate exp(i P(q)).
struct QPolynomial {
    std::array<double, 4> c{0, 0, 0, 0};

    double operator()(double q) const { return c[0] + q * (c[1] + q * (c[2] + q * c[3])); }
    bool is_zero() const { return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; }); }
};

struct Gate {
    GateKind kind = GateKind::Displacement;
    double param = 0.0;
    int mode = 0;
    int mode2 = -1;  // second mode of CZ / BeamSplitter / CrossKerr

    static Gate displacement(double d, int mode) { return {GateKind::Displacement, d, mode}; }
    static Gate shear(double s, int mode) { return {GateKind::Shear, s, mode}; }
    static Gate cubic(double c, int mode) { return {GateKind::Cubic, c, mode}; }
    static Gate cz(double b, int m1, int m2) { return {GateKind::CZ, b, m1, m2}; }
    static Gate fourier(int mode) { return {GateKind::Fourier, 0.0, mode}; }
    static Gate fourier_inverse(int mode) { return {GateKind::FourierInverse, 0.0, mode}; }
    static Gate squeeze(double s, int mode) {
        if (!(s > 0)) throw Error(ErrorCode::NonPositive, "squeeze parameter must be > 0");
        return {GateKind::Squeeze, s, mode};
    }
    static Gate rotation(double theta, int mode) { return {GateKind::Rotation, theta, mode}; }
    static Gate beamsplitter(double r, int m1, int m2) {
        if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "beamsplitter reflectivity must lie in [0,1]");
        return {GateKind::BeamSplitter, r, m1, m2};
    }
    static Gate cross_kerr(double strength, int m1, int m2) { return {GateKind::CrossKerr, strength, m1, m2}; }
    static Gate logical_z(int mode) { return {GateKind::LogicalZ, kSqrtPi, mode}; }
    static Gate logical_t(int mode) { return {GateKind::LogicalT, 0.0, mode}; }

    bool two_mode() const {
        return kind == GateKind::CZ || kind == GateKind::BeamSplitter || kind == GateKind::CrossKerr;
    }

    bool is_gaussian() const {
        return kind != GateKind::Cubic && kind != GateKind::CrossKerr && kind != GateKind::LogicalT;
    }

    /// Diagonal in the position representation.
    bool is_q_diagonal() const {
        switch (kind) {
            case GateKind::Displacement:
            case GateKind::Shear:
            case GateKind::Cubic:
            case GateKind::CZ:
            case GateKind::LogicalZ:
            case GateKind::LogicalT: return true;
            default: return false;
        }
    }

    /// Member of the elementary set {exp(idq), exp(isq^2), exp(icq^3), exp(ibq1q2)}.
    bool is_elementary_a1() const {
        return kind == GateKind::Displacement || kind == GateKind::Shear || kind == GateKind::Cubic ||
               kind == GateKind::CZ;
    }

    /// Phase polynomial of a single-mode q-diagonal gate.
    QPolynomial q_polynomial() const {
        QPolynomial p;
        switch (kind) {
            case GateKind::Displacement: p.c[1] = param; break;
            case GateKind::Shear: p.c[2] = param; break;
            case GateKind::Cubic: p.c[3] = param; break;
            case GateKind::LogicalZ: p.c[1] = kSqrtPi; break;
            case GateKind::LogicalT:
                // (pi/4) [2 (q/sqrt(pi))^3 + (q/sqrt(pi))^2 - 2 q/sqrt(pi)]
                p.c[3] = 1.0 / (2.0 * kSqrtPi);
                p.c[2] = 0.25;
                p.c[1] = -kSqrtPi / 2.0;
                break;
            default: throw Error(ErrorCode::WrongArity, gate_name(kind) + " has no single-mode q polynomial");
        }
        return p;
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct GateSequence {
    int modes = 1;
    std::vector<Gate> gates;

    GateSequence() = default;
    explicit GateSequence(int n_modes) : modes(n_modes) {}

    void push(const Gate &g) {
        const int hi = std::max(g.mode, g.mode2);
        if (g.mode < 0 || hi >= modes || (g.two_mode() && (g.mode2 < 0 || g.mode2 == g.mode)))
            throw Error(ErrorCode::OutOfRange, "gate mode index outside the declared mode count");
        gates.push_back(g);
    }

    void append(const GateSequence &other) {
        for (const auto &g : other.gates) push(g);
    }

    std::size_t size() const { return gates.size(); }
    bool empty() const { return gates.empty(); }

    friend bool operator==(const GateSequence &, const GateSequence &) = default;
};

using SymplecticMatrix = Eigen::MatrixXd;

/// Standard symplectic form [[0, I], [-I, 0]] in (q.., p..) ordering.
inline Eigen::MatrixXd symplectic_form(int n) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    return omega;
}

inline bool is_symplectic(const SymplecticMatrix &s, double tol = 1e-12) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
    const int n = static_cast<int>(s.rows() / 2);
    const Eigen::MatrixXd omega = symplectic_form(n);
    return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

/// Heisenberg action of a Gaussian gate, embedded in `n_modes` modes.
inline SymplecticMatrix symplectic_of(const Gate &g, int n_modes) {
    if (!g.is_gaussian()) throw Error(ErrorCode::NonGaussian, gate_name(g.kind) + " has no symplectic matrix");
    const int n = n_modes;
    SymplecticMatrix s = SymplecticMatrix::Identity(2 * n, 2 * n);
    const int q = g.mode;
    const int p = g.mode + n;
    switch (g.kind) {
        case GateKind::Displacement:
        case GateKind::LogicalZ: break;  // affine only
        case GateKind::Shear: s(p, q) = 2.0 * g.param; break;
        case GateKind::CZ:
            s(p, g.mode2) = g.param;
            s(g.mode2 + n, q) = g.param;
            break;
        case GateKind::Fourier:
            s(q, q) = 0;
            s(q, p) = -1;
            s(p, q) = 1;
            s(p, p) = 0;
            break;
        case GateKind::FourierInverse:
            s(q, q) = 0;
            s(q, p) = 1;
            s(p, q) = -1;
            s(p, p) = 0;
            break;
        case GateKind::Squeeze:
            s(q, q) = g.param;
            s(p, p) = 1.0 / g.param;
            break;
        case GateKind::Rotation:
            s(q, q) = std::cos(g.param);
            s(q, p) = -std::sin(g.param);
            s(p, q) = std::sin(g.param);
            s(p, p) = std::cos(g.param);
            break;
        case GateKind::BeamSplitter: {
            const double r = std::sqrt(g.param);
            const double t = std::sqrt(1.0 - g.param);
            const int q2 = g.mode2;
            const int p2 = g.mode2 + n;
            for (int off : {0, n}) {
                s(q + off, q + off) = r;
                s(q + off, q2 + off) = t;
                s(q2 + off, q + off) = t;
                s(q2 + off, q2 + off) = -r;
            }
            (void)p2;
            break;
        }
        default: break;
    }
    return s;
}

inline SymplecticMatrix symplectic_of(const Gate &g) { return symplectic_of(g, std::max(g.mode, g.mode2) + 1); }

/// Matrix of the whole sequence; identity for an empty sequence.
inline SymplecticMatrix compose(const GateSequence &seq) {
    SymplecticMatrix s = SymplecticMatrix::Identity(2 * seq.modes, 2 * seq.modes);
    for (const auto &g : seq.gates) s = symplectic_of(g, seq.modes) * s;
    return s;
}

/// Beamsplitter target block M_R = [[sqrt R, sqrt(1-R)], [sqrt(1-R), -sqrt R]].
inline Eigen::Matrix2d beamsplitter_block(double r) {
    Eigen::Matrix2d m;
    m << std::sqrt(r), std::sqrt(1 - r), std::sqrt(1 - r), -std::sqrt(r);
    return m;
}

/// M_R acting identically on positions and momenta, (q1, q2, p1, p2) ordering.
inline SymplecticMatrix beamsplitter_target(double r) {
    SymplecticMatrix s = SymplecticMatrix::Zero(4, 4);
    s.topLeftCorner(2, 2) = beamsplitter_block(r);
    s.bottomRightCorner(2, 2) = beamsplitter_block(r);
    return s;
}

inline SymplecticMatrix rotation_target(double theta) {
    SymplecticMatrix s(2, 2);
    s << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return s;
}

inline SymplecticMatrix squeeze_target(double s) {
    SymplecticMatrix m = SymplecticMatrix::Zero(2, 2);
    m(0, 0) = s;
    m(1, 1) = 1.0 / s;
    return m;
}

/// Largest absolute entry of compose(seq) - target.
inline double residual(const GateSequence &seq, const SymplecticMatrix &target) {
    return (compose(seq) - target).cwiseAbs().maxCoeff();
}

/// Squeezer diag(s, 1/s) as Shear(s/2) F Shear(1/(2s)) F Shear(s/2) F.
inline GateSequence decompose_squeeze(double s) {
    if (!(s > 0)) throw Error(ErrorCode::NonPositive, "squeeze parameter must be > 0");
    GateSequence seq(1);
    seq.push(Gate::shear(s / 2.0, 0));
    seq.push(Gate::fourier(0));
    seq.push(Gate::shear(1.0 / (2.0 * s), 0));
    seq.push(Gate::fourier(0));
    seq.push(Gate::shear(s / 2.0, 0));
    seq.push(Gate::fourier(0));
    return seq;
}

/// Coefficients of the two-mode block exp(i (b1 q1^2 + b2 q2^2 + b3 q1 q2)).
struct BeamsplitterBlock {
    double b1 = 0;
    double b2 = 0;
    double b3 = 0;
};

enum class BeamsplitterForm {
    RDependent,        // b1 = sqrt(R)/2, b2 = -sqrt(R)/2, b3 = sqrt(1-R)
    FixedCoefficient,  // fixed 1/(2 sqrt 2) (q1^2 - q2^2 + q1 q2), balanced splitter only
};

inline BeamsplitterBlock beamsplitter_coefficients(double r, BeamsplitterForm form = BeamsplitterForm::RDependent) {
    if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "beamsplitter reflectivity must lie in [0,1]");
    if (form == BeamsplitterForm::FixedCoefficient) {
        const double c = 1.0 / (2.0 * kSqrt2);
        return {c, -c, c};
    }
    return {std::sqrt(r) / 2.0, -std::sqrt(r) / 2.0, std::sqrt(1.0 - r)};
}

/// Three rounds of [block O(q), F on both modes]; composes to M_R (+) M_R.
inline GateSequence decompose_beamsplitter(double r, BeamsplitterForm form = BeamsplitterForm::RDependent) {
    const auto b = beamsplitter_coefficients(r, form);
    GateSequence seq(2);
    for (int rep = 0; rep < 3; ++rep) {
        seq.push(Gate::shear(b.b1, 0));
        seq.push(Gate::shear(b.b2, 1));
        seq.push(Gate::cz(b.b3, 0, 1));
        seq.push(Gate::fourier(0));
        seq.push(Gate::fourier(1));
    }
    return seq;
}

struct RotationShears {
    double s1 = 0;
    double s2 = 0;
    double s3 = 0;
};

/// Shear strengths (exp(i s q^2 / 2) convention) of the rotation identity.
inline RotationShears rotation_shears(double theta) {
    const double c = std::cos(theta);
    if (std::abs(c) < 1e-12) throw Error(ErrorCode::Singular, "rotation angle is an odd multiple of pi/2");
    const double sn = std::sin(theta);
    const double t = sn / c;
    return {1.0 / c + t, c, c + (1.0 + sn) * t};
}

/// Rotation as Shear(s1/2) F Shear(s2/2) F Shear(s3/2) F.
inline GateSequence decompose_rotation(double theta) {
    const auto s = rotation_shears(theta);
    GateSequence seq(1);
    seq.push(Gate::shear(s.s1 / 2.0, 0));
    seq.push(Gate::fourier(0));
    seq.push(Gate::shear(s.s2 / 2.0, 0));
    seq.push(Gate::fourier(0));
    seq.push(Gate::shear(s.s3 / 2.0, 0));
    seq.push(Gate::fourier(0));
    return seq;
}

}  // namespace cvgkp
