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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvgkp {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

enum class ErrorCode {
    NonGaussian,
    NonPositive,
    OutOfRange,
    Singular,
    TooLarge,
    SigmaMismatch,
    ApproximationInvalid,
    GridTooSmall,
    AsymmetricGrid,
    WrongArity,
    TruncationTooSmall,
    BudgetExhausted,
    Infeasible,
    TooManyModes,
    UnknownTable,
};

inline std::string_view error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonGaussian: return "NonGaussian";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SigmaMismatch: return "SigmaMismatch";
        case ErrorCode::ApproximationInvalid: return "ApproximationInvalid";
        case ErrorCode::GridTooSmall: return "GridTooSmall";
        case ErrorCode::AsymmetricGrid: return "AsymmetricGrid";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::TooManyModes: return "TooManyModes";
        case ErrorCode::UnknownTable: return "UnknownTable";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Deterministic RNG used everywhere a seed is accepted.
///
/// splitmix64 expands the seed into xoshiro256** state; uniform doubles take the
/// top 53 bits. Both algorithms are fixed so outcomes are identical across
/// standard libraries (std:: distributions are implementation-defined).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto &s : s_) s = splitmix(x);
    }

    /// Independent stream for sub-task `task` of master seed `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t task) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ull * (task + 1));
        return Rng(splitmix(x));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Standard normal by Box-Muller.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static std::uint64_t splitmix(std::uint64_t &x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

}  // namespace cvgkp
