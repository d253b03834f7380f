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

// Fault-tolerance accounting: error budgets, erf tails, threshold checks and
// the gate-parameter tables of the universal and CVIQP models.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cvgkp/comb.hpp"
#include "cvgkp/core.hpp"
#include "cvgkp/kerrplan.hpp"
#include "cvgkp/symplectic.hpp"

namespace cvgkp::ft {

/// Literal: erf(x / sigma). Strict: tail of N(0, sigma^2), i.e. erf(x / (sqrt(2) sigma)).
enum class ErfConvention { Literal, Strict };

inline const char *convention_name(ErfConvention c) {
    return c == ErfConvention::Literal ? "literal" : "strict";
}

inline double erf_scale(ErfConvention c) { return c == ErfConvention::Literal ? 1.0 : kSqrt2; }

inline constexpr double kHalfSpacing = kSqrtPi / 2;
inline constexpr int kMaxM = 20;

/// sqrt(1 - overlap^2), the trace distance between the binomial and Gaussian GKP states.
/// Values for m <= kMaxM are computed once and cached.
inline double zeta(int m) {
    auto compute = [](int mm) {
        const double o = comb::overlap_gaussian(mm);
        return std::sqrt(std::max(0.0, 1.0 - o * o));
    };
    static const auto cache = [&] {
        std::array<double, kMaxM + 1> c{};
        for (int i = 1; i <= kMaxM; ++i) c[i] = compute(i);
        return c;
    }();
    if (m >= 1 && m <= kMaxM) return cache[m];
    return compute(m);
}

inline double epsilon_m(int m, double y) { return zeta(m) + std::ldexp(y, m); }

struct FTBudget {
    int m = 1;
    double y = 0.0;
    double zeta_m = 0.0;
    double epsilon_m = 0.0;
    double sigma_m = 0.0;
    double epsilon_q = 0.0;
    double epsilon_p = 0.0;
    double epsilon_th = 0.0;

    static FTBudget make(int m, double y, double eps_q = 0.0, double eps_p = 0.0, double eps_th = 1e-6) {
        FTBudget b;
        b.m = m;
        b.y = y;
        b.zeta_m = zeta(m);
        b.epsilon_m = b.zeta_m + std::ldexp(y, m);
        b.sigma_m = comb::sigma_of_m(m).sigma;
        b.epsilon_q = eps_q;
        b.epsilon_p = eps_p;
        b.epsilon_th = eps_th;
        return b;
    }
};

/// Probability that the accumulated shift stays below sqrt(pi)/2.
inline double p_succ(int m, double y, ErfConvention conv = ErfConvention::Literal) {
    if (y < 0) throw Error(ErrorCode::OutOfRange, "y must be >= 0");
    const double e = epsilon_m(m, y);
    if (e >= kHalfSpacing) throw Error(ErrorCode::BudgetExhausted, "epsilon_m >= sqrt(pi)/2");
    return std::erf((kHalfSpacing - e) / (erf_scale(conv) * comb::sigma_of_m(m).sigma));
}

/// Tail probability that |p| exceeds sqrt(pi)/2 - delta.
inline double chi(double sigma, double delta, ErfConvention conv = ErfConvention::Literal) {
    if (!(sigma > 0)) throw Error(ErrorCode::NonPositive, "sigma must be > 0");
    const double arg = (kHalfSpacing - delta) / (erf_scale(conv) * sigma);
    return std::clamp(std::erfc(arg), 0.0, 1.0);
}

/// Two-round failure probability for the universal model.
inline double failure_probability(const FTBudget &b, ErfConvention conv = ErfConvention::Literal) {
    const double cq = chi(b.sigma_m, b.epsilon_q + 2 * b.epsilon_m, conv);
    const double cp = chi(b.sigma_m, b.epsilon_p + 2 * b.epsilon_m, conv);
    return 1.0 - (1.0 - cq) * (1.0 - cp);
}

inline bool threshold_ok(const FTBudget &b, ErfConvention conv = ErfConvention::Literal) {
    return failure_probability(b, conv) < b.epsilon_th;
}

/// CVIQP failure: teleported Fourier adds variance, giving widths sqrt(2) and sqrt(5) sigma.
inline double cviqp_failure(int m, double y, ErfConvention conv = ErfConvention::Literal) {
    const double s = comb::sigma_of_m(m).sigma;
    const double d = 2 * epsilon_m(m, y);
    return 1.0 - (1.0 - chi(kSqrt2 * s, d, conv)) * (1.0 - chi(std::sqrt(5.0) * s, d, conv));
}

/// Largest y with cviqp_failure(m, y) < eps_th, or 0 when even y = 0 fails.
inline double cviqp_max_y(int m, double eps_th, ErfConvention conv = ErfConvention::Literal) {
    if (!(cviqp_failure(m, 0.0, conv) < eps_th)) return 0.0;
    double lo = 0.0;
    double hi = (kHalfSpacing - zeta(m)) / std::ldexp(1.0, m);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cviqp_failure(m, mid, conv) < eps_th ? lo : hi) = mid;
    }
    return lo;
}

struct MinimalM {
    int m_min = 0;
    double epsilon_m = 0.0;
    double max_y_at_m = 0.0;
    ErfConvention convention = ErfConvention::Literal;
};

inline MinimalM cviqp_minimal_m(double eps_th, double y, ErfConvention conv = ErfConvention::Literal) {
    if (!(eps_th > 0 && eps_th < 1)) throw Error(ErrorCode::OutOfRange, "epsilon_th must lie in (0, 1)");
    if (y < 0) throw Error(ErrorCode::OutOfRange, "y must be >= 0");
    for (int m = 1; m <= kMaxM; ++m) {
        if (cviqp_failure(m, y, conv) < eps_th) return {m, epsilon_m(m, y), cviqp_max_y(m, eps_th, conv), conv};
    }
    throw Error(ErrorCode::Infeasible, "no m <= 20 satisfies the CVIQP threshold");
}

enum class Model { Universal, CVIQP };

inline const char *model_name(Model m) { return m == Model::Universal ? "universal" : "cviqp"; }

struct TableRow {
    std::string evolution;
    std::string symbol;
    double computed = 0.0;
    std::optional<double> printed;
    double printed_unit = 0.0;  // one unit in the last printed digit
    bool match = true;
};

struct ParameterTable {
    Model model = Model::Universal;
    int m = 1;
    double y = 0.0;
    std::vector<TableRow> rows;

    const TableRow *find(const std::string &symbol) const {
        for (const auto &r : rows)
            if (r.symbol == symbol) return &r;
        return nullptr;
    }
    int mismatches() const {
        int n = 0;
        for (const auto &r : rows) n += r.match ? 0 : 1;
        return n;
    }
};

namespace detail {

struct Printed {
    double value;
    double unit;
};

// Published rows, in table order: d, s1, s2, b1, b2, c1, c2.
inline std::optional<std::array<Printed, 7>> printed_table(Model model, int m, double y) {
    auto same = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
    if (model == Model::Universal && m == 1 && same(y, 0.1))
        return std::array<Printed, 7>{{{5.6, 0.1}, {0.73, 0.01}, {1.1, 0.1}, {0.35, 0.01}, {0.011, 0.001},
                                       {0.011, 0.001}, {0.086, 0.001}}};
    if (model == Model::CVIQP && m == 6 && same(y, 1e-3))
        return std::array<Printed, 7>{{{142, 1}, {0.28, 0.01}, {0.89, 0.01}, {0.35, 0.01}, {1.6e-6, 0.1e-6},
                                       {1.6e-6, 0.1e-6}, {1.3e-3, 0.1e-3}}};
    return std::nullopt;
}

}  // namespace detail

/// Shears come from the squeeze decomposition at s = sigma_m: Shear(s/2) and Shear(1/(2s)).
/// Cross-Kerr angles use tau = sqrt(y/pi), the unrounded step the tables were computed with.
inline ParameterTable gate_parameter_table(Model model, int m, double y) {
    const double sigma = comb::sigma_of_m(m).sigma;
    const auto pl = kerr::plan(y);
    const auto sq = decompose_squeeze(sigma);
    const auto bs = beamsplitter_coefficients(0.5);
    ParameterTable t{model, m, y, {}};
    t.rows = {
        {"displacement", "d", comb::alpha_of_m(m, sigma), std::nullopt},
        {"shear", "s1", sq.gates[0].param, std::nullopt},
        {"shear", "s2", sq.gates[2].param, std::nullopt},
        {"beamsplitter", "b1", bs.b1, std::nullopt},
        {"cross-kerr cz", "b2", pl.table_angles.cz_small, std::nullopt},
        {"cross-kerr cubic", "c1", pl.table_angles.cubic_small, std::nullopt},
        {"cross-kerr cubic", "c2", pl.table_angles.cubic_big, std::nullopt},
    };
    if (const auto printed = detail::printed_table(model, m, y)) {
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            auto &r = t.rows[i];
            r.printed = (*printed)[i].value;
            r.printed_unit = (*printed)[i].unit;
            r.match = std::abs(r.computed - (*printed)[i].value) <= (*printed)[i].unit;
        }
    }
    return t;
}

struct CurvePoint {
    double y;
    double p_literal;
    double p_strict;
};

/// P_succ(y) at fixed m on n+1 evenly spaced y in [0, y_max]; exhausted budgets read 0.
inline std::vector<CurvePoint> psucc_curve(int m = 1, double y_max = 0.45, int n = 90) {
    std::vector<CurvePoint> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double y = y_max * i / n;
        auto eval = [&](ErfConvention c) {
            try {
                return p_succ(m, y, c);
            } catch (const Error &) {
                return 0.0;
            }
        };
        out.push_back({y, eval(ErfConvention::Literal), eval(ErfConvention::Strict)});
    }
    return out;
}

}  // namespace cvgkp::ft
