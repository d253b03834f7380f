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

// Superpositions of equally squeezed displaced Gaussians ("combs") and the
// cat-breeding protocol that turns 2^m squeezed cats into a binomial GKP state.
//
// Peak convention: phi_c(q) = pi^(-1/4) sigma^(-1/2) exp(-(q-c)^2 / (2 sigma^2)),
// centers in position units. Its momentum wavefunction near p = 0 is flat at
// sqrt(sigma) pi^(-1/4), which is what the binned p = 0 projection uses.

#pragma once

#include <gmp.h>

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <map>
#include <vector>

#include "cvgkp/core.hpp"

namespace cvgkp::comb {

using BigInt = boost::multiprecision::mpz_int;

inline BigInt binom(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

/// Natural log of a positive big integer, accurate to double precision.
inline double log_big(const BigInt &x) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.backend().data());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

/// log C(n, k): exact big-integer route for small n, lgamma beyond.
inline double log_binom(unsigned n, unsigned k) {
    if (n <= 512) return log_big(binom(n, k));
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Normalized peak phi_c(q).
inline double peak(double q, double center, double sigma) {
    const double x = (q - center) / sigma;
    return std::exp(-0.5 * x * x) / (std::pow(kPi, 0.25) * std::sqrt(sigma));
}

/// <phi_a | phi_b> for equal widths.
inline double peak_overlap(double a, double b, double sigma) {
    const double d = (a - b) / sigma;
    return std::exp(-0.25 * d * d);
}

struct CombTerm {
    cplx amp;
    double center = 0.0;
};

struct GaussianComb {
    double sigma = 1.0;
    std::vector<CombTerm> terms;  // strictly increasing centers

    /// Orthogonal-peak norm sum |a|^2.
    double norm2() const {
        double s = 0;
        for (const auto &t : terms) s += std::norm(t.amp);
        return s;
    }

    /// Exact norm including peak overlaps.
    double exact_norm2() const {
        double s = 0;
        for (const auto &a : terms)
            for (const auto &b : terms) s += (std::conj(a.amp) * b.amp).real() * peak_overlap(a.center, b.center, sigma);
        return s;
    }

    double min_gap() const {
        double g = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < terms.size(); ++i) g = std::min(g, terms[i].center - terms[i - 1].center);
        return g;
    }

    /// The orthogonal-peak approximation is trusted when min gap >= 6 sigma.
    bool orthogonal_valid() const { return terms.size() < 2 || min_gap() >= 6.0 * sigma; }

    double max_abs_center() const {
        double m = 0;
        for (const auto &t : terms) m = std::max(m, std::abs(t.center));
        return m;
    }

    GaussianComb normalized() const {
        GaussianComb c = *this;
        const double n = std::sqrt(norm2());
        for (auto &t : c.terms) t.amp /= n;
        return c;
    }

    cplx operator()(double q) const {
        cplx s = 0;
        for (const auto &t : terms) s += t.amp * peak(q, t.center, sigma);
        return s;
    }
};

/// Builds a comb from (center, amp) pairs, merging equal centers.
inline GaussianComb make_comb(double sigma, const std::vector<CombTerm> &raw, double merge_tol = 1e-9) {
    if (!(sigma > 0)) throw Error(ErrorCode::NonPositive, "sigma must be > 0");
    std::vector<CombTerm> sorted = raw;
    std::sort(sorted.begin(), sorted.end(), [](const CombTerm &a, const CombTerm &b) { return a.center < b.center; });
    GaussianComb c;
    c.sigma = sigma;
    for (const auto &t : sorted) {
        if (!c.terms.empty() && std::abs(c.terms.back().center - t.center) <= merge_tol * std::max(1.0, std::abs(t.center))) {
            c.terms.back().amp += t.amp;
        } else {
            c.terms.push_back(t);
        }
    }
    std::erase_if(c.terms, [](const CombTerm &t) { return std::abs(t.amp) == 0.0; });
    return c;
}

inline GaussianComb vacuum(double sigma = 1.0) { return make_comb(sigma, {{1.0, 0.0}}); }

/// (|c> + |-c>) / sqrt 2 with squeezed peaks; c = 0 collapses to one peak.
inline GaussianComb cat(double center, double sigma) {
    return make_comb(sigma, {{1.0, -center}, {1.0, center}}).normalized();
}

struct TwoModeTerm {
    cplx amp;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct TwoModeComb {
    double sigma = 1.0;
    std::vector<TwoModeTerm> terms;

    double max_abs_center(int mode) const {
        double m = 0;
        for (const auto &t : terms) m = std::max(m, std::abs(mode == 0 ? t.c1 : t.c2));
        return m;
    }
};

/// Balanced beamsplitter at the level of peak labels:
/// |mu>|lambda> -> |(mu - lambda)/sqrt2>|(mu + lambda)/sqrt2>.
inline TwoModeComb bs_step(const GaussianComb &a, const GaussianComb &b) {
    if (std::abs(a.sigma - b.sigma) > 1e-12 * a.sigma) throw Error(ErrorCode::SigmaMismatch, "bs_step needs equal widths");
    TwoModeComb out;
    out.sigma = a.sigma;
    for (const auto &x : a.terms)
        for (const auto &y : b.terms) out.terms.push_back({x.amp * y.amp, (x.center - y.center) / kSqrt2, (x.center + y.center) / kSqrt2});
    return out;
}

struct Projection {
    GaussianComb state;
    double probability = 0.0;
};

/// Binned p = 0 outcome on `mode` (window [-eta, eta]) under the flat-projection approximation.
inline Projection project_p0(const TwoModeComb &s, int mode, double eta) {
    if (mode != 0 && mode != 1) throw Error(ErrorCode::OutOfRange, "mode must be 0 or 1");
    if (!(eta > 0)) throw Error(ErrorCode::NonPositive, "eta must be > 0");
    if (eta * s.max_abs_center(mode) > 0.1 || eta * s.sigma > 0.1)
        throw Error(ErrorCode::ApproximationInvalid, "flat projection needs eta*max|center| <= 0.1 and eta*sigma <= 0.1");
    double in_norm = 0;
    std::vector<CombTerm> kept;
    for (const auto &t : s.terms) {
        in_norm += std::norm(t.amp);
        kept.push_back({t.amp, mode == 0 ? t.c2 : t.c1});
    }
    const GaussianComb merged = make_comb(s.sigma, kept);
    Projection p;
    p.probability = 2.0 * eta * s.sigma / kSqrtPi * merged.norm2() / in_norm;
    p.state = merged.normalized();
    return p;
}

struct SqueezingInfo {
    double sigma = 0.0;
    double squeezing_db = 0.0;
};

/// sigma^2 = 1/(2^m pi); dB = 10 log10((1/2)/sigma^2).
inline SqueezingInfo sigma_of_m(int m) {
    if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be >= 1");
    const double v = 1.0 / (std::ldexp(1.0, m) * kPi);
    return {std::sqrt(v), 10.0 * std::log10(0.5 / v)};
}

/// Cat amplitude sqrt(2)^(m-1) sqrt(pi) / sigma used by the gate tables.
inline double alpha_of_m(int m, double sigma) { return std::pow(kSqrt2, m - 1) * kSqrtPi / sigma; }

/// Position center of each input cat peak so that m rounds end at spacing 2 sqrt(pi).
inline double cat_center(int m) { return std::pow(kSqrt2, m) * kSqrtPi; }

struct Synthesis {
    GaussianComb comb;
    double success_prob = 1.0;
    std::vector<double> round_probs;  // per measurement in round r (2^(m-r) of them)
};

/// m rounds of pairwise beamsplitting and p = 0 post-selection starting from 2^m cats.
inline Synthesis synthesize_gkp(int m, double sigma, double eta) {
    if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be >= 1");
    if (m > 8) throw Error(ErrorCode::TooLarge, "m > 8 not supported");
    Synthesis s;
    GaussianComb level = cat(cat_center(m), sigma);
    for (int r = 1; r <= m; ++r) {
        const auto proj = project_p0(bs_step(level, level), 0, eta);
        s.round_probs.push_back(proj.probability);
        s.success_prob *= std::pow(proj.probability, std::ldexp(1.0, m - r));
        level = proj.state;
    }
    s.comb = level;
    return s;
}

/// (1/2^(2^m)) C(2^(m+1), 2^m) (2 eta sigma / sqrt pi)^(2^m - 1).
inline double success_probability(int m, double eta, double sigma) {
    const unsigned n = 1u << m;
    const double log_p = -static_cast<double>(n) * std::log(2.0) + log_binom(2 * n, n) +
                         (n - 1.0) * std::log(2.0 * eta * sigma / kSqrtPi);
    return std::exp(log_p);
}

/// Coefficient of (eta sigma)^(2^m - 1) in the success probability.
inline double success_coefficient(int m) { return success_probability(m, 1.0, 1.0); }

/// Integer-weight replica of the protocol: peaks on an integer lattice, weights exact.
struct ExactComb {
    std::map<long, BigInt> weights;  // lattice index -> integer weight
};

inline ExactComb exact_synthesis(int m) {
    if (m < 1 || m > 8) throw Error(ErrorCode::OutOfRange, "m must lie in [1, 8]");
    ExactComb level;
    level.weights = {{-1, 1}, {1, 1}};
    for (int r = 1; r <= m; ++r) {
        ExactComb next;
        for (const auto &[a, wa] : level.weights)
            for (const auto &[b, wb] : level.weights) next.weights[a + b] += wa * wb;  // kept mode label a + b
        // Divide out the common factor so the weights stay primitive.
        BigInt g = 0;
        for (const auto &[_, w] : next.weights) g = gcd(g, w);
        for (auto &[_, w] : next.weights) w /= g;
        level = std::move(next);
    }
    return level;
}

/// |<0_m|0_G>| in the orthogonal-peak approximation (finite sum over the envelope).
inline double overlap_gaussian(int m) {
    if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be >= 1");
    const unsigned n = 1u << m;
    const double log_pref = -0.25 * std::log(kPi) - 0.25 * (m - 2) * std::log(2.0) - 0.5 * log_binom(2 * n, n);
    double s = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const double d = static_cast<double>(i) - n / 2.0;
        s += std::exp(log_binom(n, i) + log_pref - d * d / (n / 2.0));
    }
    return s;
}

/// Largest pointwise gap between C(2^m,i)^2 / C(2^(m+1),2^m) and its normal approximation.
inline double central_limit_deviation(int m) {
    const unsigned n = 1u << m;
    const double var = std::ldexp(1.0, m - 3);
    const double log_norm = log_binom(2 * n, n);
    double worst = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const double w = std::exp(2.0 * log_binom(n, i) - log_norm);
        const double d = n / 2.0 - i;
        const double g = std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
        worst = std::max(worst, std::abs(w - g));
    }
    return worst;
}

/// Binomial GKP wavefunction of order m.
inline double binomial_wavefunction(int m, double sigma, double q) {
    const unsigned n = 1u << m;
    const double log_pref = -0.25 * std::log(kPi) - 0.5 * (log_binom(2 * n, n) + std::log(sigma));
    double s = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const double c = 2.0 * kSqrtPi * (static_cast<double>(i) - n / 2.0);
        const double x = (q - c) / sigma;
        s += std::exp(log_binom(n, i) + log_pref - 0.5 * x * x);
    }
    return s;
}

/// Same state as a comb (amplitudes C(2^m,i) / sqrt C(2^(m+1),2^m)).
inline GaussianComb binomial_comb(int m, double sigma) {
    const unsigned n = 1u << m;
    const double log_norm = log_binom(2 * n, n);
    std::vector<CombTerm> t;
    for (unsigned i = 0; i <= n; ++i)
        t.push_back({std::exp(log_binom(n, i) - 0.5 * log_norm), 2.0 * kSqrtPi * (static_cast<double>(i) - n / 2.0)});
    return make_comb(sigma, t);
}

struct GKPSpec {
    int m = 0;  // 0 when sigma/delta were given directly
    double sigma = 0.0;
    double delta = 0.0;

    static GKPSpec from_m(int m) {
        const double s = sigma_of_m(m).sigma;
        return {m, s, s};
    }
};

/// Gaussian GKP state as a comb: envelope exp(-(2n+mu)^2 pi delta^2 / 2), terms below 1e-12 dropped,
/// normalized exactly including peak overlaps.
inline GaussianComb gaussian_gkp_comb(const GKPSpec &spec, int logical) {
    if (!(spec.sigma > 0 && spec.delta > 0)) throw Error(ErrorCode::NonPositive, "sigma and delta must be > 0");
    if (logical != 0 && logical != 1) throw Error(ErrorCode::OutOfRange, "logical must be 0 or 1");
    std::vector<CombTerm> t;
    for (int n = 0;; ++n) {
        bool any = false;
        for (int sgn : {1, -1}) {
            if (n == 0 && sgn == -1 && logical == 0) continue;
            const double j = logical == 0 ? 2.0 * n * sgn : (sgn > 0 ? 2.0 * n + 1 : -2.0 * n - 1);
            const double w = std::exp(-j * j * kPi * spec.delta * spec.delta / 2.0);
            if (w < 1e-12) continue;
            any = true;
            t.push_back({w, j * kSqrtPi});
        }
        if (!any) break;
    }
    GaussianComb c = make_comb(spec.sigma, t);
    const double n2 = c.exact_norm2();
    for (auto &x : c.terms) x.amp /= std::sqrt(n2);
    return c;
}

inline double gaussian_gkp_wavefunction(const GKPSpec &spec, int logical, double q) {
    return gaussian_gkp_comb(spec, logical)(q).real();
}

}  // namespace cvgkp::comb
