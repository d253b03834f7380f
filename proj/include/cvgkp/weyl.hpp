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

// Exact polynomial algebra in the canonical operators q, p of several modes.
//
// Polynomials are kept in the normal form where, inside each mode, every q
// stands left of every p. Products are reduced with [q, p] = i and carry exact
// rational complex coefficients, so identities verified here are exact.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace cvgkp::weyl {

// GMP backend; products of degree-6 polynomials stay fast.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Gaussian rational a + i b.
struct QComplex {
    Rational re{0};
    Rational im{0};

    QComplex() = default;
    QComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    QComplex(int r) : re(r) {}

    static QComplex i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend QComplex operator+(const QComplex &a, const QComplex &b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex &a, const QComplex &b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex &a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex &a, const QComplex &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const QComplex &a, const QComplex &b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream &operator<<(std::ostream &os, const QComplex &z) {
        if (z.im == 0) return os << z.re;
        if (z.re == 0) return os << z.im << "i";
        return os << "(" << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
    }
};

/// q^a p^b on each listed mode; modes with (0, 0) are never stored.
class WeylMonomial {
   public:
    struct Powers {
        unsigned q = 0;
        unsigned p = 0;
        auto operator<=>(const Powers &) const = default;
    };

    WeylMonomial() = default;

    static WeylMonomial of(int mode, unsigned q_pow, unsigned p_pow) {
        WeylMonomial m;
        m.set(mode, {q_pow, p_pow});
        return m;
    }

    void set(int mode, Powers pw) {
        if (pw.q == 0 && pw.p == 0) {
            powers_.erase(mode);
        } else {
            powers_[mode] = pw;
        }
    }

    Powers at(int mode) const {
        auto it = powers_.find(mode);
        return it == powers_.end() ? Powers{} : it->second;
    }

    const std::map<int, Powers> &powers() const { return powers_; }
    bool is_identity() const { return powers_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto &[_, pw] : powers_) d += pw.q + pw.p;
        return d;
    }

    auto operator<=>(const WeylMonomial &) const = default;

    std::string str() const {
        if (powers_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto &[mode, pw] : powers_) {
            auto emit = [&](char sym, unsigned e) {
                if (e == 0) return;
                if (!first) os << "*";
                first = false;
                os << sym << mode;
                if (e > 1) os << "^" << e;
            };
            emit('q', pw.q);
            emit('p', pw.p);
        }
        return os.str();
    }

   private:
    std::map<int, Powers> powers_;
};

class WeylPoly {
   public:
    using Terms = std::map<WeylMonomial, QComplex>;

    WeylPoly() = default;
    WeylPoly(QComplex c) { add_term(WeylMonomial{}, std::move(c)); }
    WeylPoly(int c) : WeylPoly(QComplex(c)) {}

    static WeylPoly monomial(WeylMonomial m, QComplex c = 1) {
        WeylPoly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }
    static WeylPoly q(int mode, unsigned pow = 1) { return monomial(WeylMonomial::of(mode, pow, 0)); }
    static WeylPoly p(int mode, unsigned pow = 1) { return monomial(WeylMonomial::of(mode, 0, pow)); }

    void add_term(const WeylMonomial &m, const QComplex &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    QComplex coeff(const WeylMonomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? QComplex{} : it->second;
    }

    WeylPoly &operator+=(const WeylPoly &o) {
        for (const auto &[m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    WeylPoly &operator-=(const WeylPoly &o) {
        for (const auto &[m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend WeylPoly operator+(WeylPoly a, const WeylPoly &b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly &b) { return a -= b; }
    friend WeylPoly operator-(const WeylPoly &a) { return WeylPoly{} - a; }

    friend WeylPoly operator*(const QComplex &s, const WeylPoly &a) {
        WeylPoly r;
        for (const auto &[m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }

    friend bool operator==(const WeylPoly &a, const WeylPoly &b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            if (!m.is_identity()) os << "*" << m.str();
        }
        return os.str();
    }

   private:
    Terms terms_;
};

namespace detail {

inline BigInt binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

/// p^b q^c = sum_k k! C(b,k) C(c,k) (-i)^k q^(c-k) p^(b-k), one mode.
inline std::map<WeylMonomial::Powers, QComplex> reorder_pq(unsigned b, unsigned c) {
    std::map<WeylMonomial::Powers, QComplex> out;
    BigInt fact = 1;
    QComplex phase = 1;
    const QComplex minus_i{0, -1};
    for (unsigned k = 0; k <= std::min(b, c); ++k) {
        if (k > 0) {
            fact *= k;
            phase = phase * minus_i;
        }
        const BigInt mult = fact * binom(b, k) * binom(c, k);
        out[{c - k, b - k}] = QComplex(Rational(mult)) * phase;
    }
    return out;
}

inline WeylPoly monomial_product(const WeylMonomial &x, const WeylMonomial &y) {
    WeylPoly acc = WeylPoly::monomial(WeylMonomial{});
    std::map<int, bool> modes;
    for (const auto &[m, _] : x.powers()) modes[m] = true;
    for (const auto &[m, _] : y.powers()) modes[m] = true;
    for (const auto &[mode, _] : modes) {
        const auto a = x.at(mode);
        const auto b = y.at(mode);
        // (q^a.q p^a.p)(q^b.q p^b.p) = q^a.q (p^a.p q^b.q) p^b.p
        WeylPoly next;
        for (const auto &[pw, c] : reorder_pq(a.p, b.q)) {
            const WeylMonomial::Powers merged{a.q + pw.q, pw.p + b.p};
            for (const auto &[m, cm] : acc.terms()) {
                WeylMonomial mm = m;
                mm.set(mode, merged);
                next.add_term(mm, cm * c);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

/// Operator product reduced to normal form.
inline WeylPoly normal_product(const WeylPoly &a, const WeylPoly &b) {
    WeylPoly out;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            const QComplex c = ca * cb;
            const WeylPoly prod = detail::monomial_product(ma, mb);
            for (const auto &[m, cm] : prod.terms()) out.add_term(m, c * cm);
        }
    }
    return out;
}

inline WeylPoly operator*(const WeylPoly &a, const WeylPoly &b) { return normal_product(a, b); }

inline WeylPoly commutator(const WeylPoly &a, const WeylPoly &b) { return normal_product(a, b) - normal_product(b, a); }

/// Number operator (q^2 + p^2 - 1) / 2 of one mode.
inline WeylPoly number_op(int mode) {
    return QComplex(Rational(1, 2)) * (WeylPoly::q(mode, 2) + WeylPoly::p(mode, 2) - WeylPoly(1));
}

/// The four quartic pieces of n1 n2: q1^2 q2^2/4, q1^2 p2^2/4, p1^2 q2^2/4, p1^2 p2^2/4.
inline WeylPoly quartic_piece(int index) {
    const QComplex quarter{Rational(1, 4)};
    switch (index) {
        case 1: return quarter * (WeylPoly::q(1, 2) * WeylPoly::q(2, 2));
        case 2: return quarter * (WeylPoly::q(1, 2) * WeylPoly::p(2, 2));
        case 3: return quarter * (WeylPoly::p(1, 2) * WeylPoly::q(2, 2));
        default: return quarter * (WeylPoly::p(1, 2) * WeylPoly::p(2, 2));
    }
}

struct NumberProductExpansion {
    WeylPoly product;          // n1 n2 in normal form
    WeylPoly printed_rhs;      // O1+O2+O3+O4 - (q1^2+p1^2)/4 - (q2^2+p2^2)/4
    WeylPoly difference;       // product - printed_rhs
};

/// Expands n1 n2 and compares it with the published four-term expansion,
/// which drops the constant 1/4.
inline NumberProductExpansion expand_number_product() {
    NumberProductExpansion e;
    e.product = number_op(1) * number_op(2);
    const QComplex quarter{Rational(1, 4)};
    e.printed_rhs = quartic_piece(1) + quartic_piece(2) + quartic_piece(3) + quartic_piece(4) -
                    quarter * (WeylPoly::q(1, 2) + WeylPoly::p(1, 2)) -
                    quarter * (WeylPoly::q(2, 2) + WeylPoly::p(2, 2));
    e.difference = e.product - e.printed_rhs;
    return e;
}

}  // namespace cvgkp::weyl
