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

#include "cvgkp/weyl.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "cvgkp/core.hpp"

using namespace cvgkp::weyl;

namespace {

// Independent oracle: operator words rewritten letter by letter.
// A letter is (mode, 'q' | 'p'). Letters of different modes commute; within
// a mode "p q" becomes "q p - i". Repeat until nothing moves.
using Letter = std::pair<int, char>;
using Word = std::vector<Letter>;

std::map<Word, QComplex> rewrite(std::map<Word, QComplex> in) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Word, QComplex> out;
        for (const auto &[w, c] : in) {
            std::size_t j = 0;
            for (; j + 1 < w.size(); ++j) {
                const auto &a = w[j];
                const auto &b = w[j + 1];
                if (a.first > b.first) break;
                if (a.first == b.first && a.second == 'p' && b.second == 'q') break;
            }
            if (j + 1 >= w.size()) {
                out[w] = out[w] + c;
                continue;
            }
            changed = true;
            Word swapped = w;
            std::swap(swapped[j], swapped[j + 1]);
            out[swapped] = out[swapped] + c;
            if (w[j].first == w[j + 1].first) {
                Word shorter = w;
                shorter.erase(shorter.begin() + static_cast<long>(j), shorter.begin() + static_cast<long>(j) + 2);
                out[shorter] = out[shorter] + c * QComplex(0, -1);
            }
        }
        in.clear();
        for (auto &[w, c] : out)
            if (!c.is_zero()) in[w] = c;
    }
    return in;
}

std::map<Word, QComplex> to_words(const WeylPoly &a) {
    std::map<Word, QComplex> out;
    for (const auto &[m, c] : a.terms()) {
        Word w;
        for (const auto &[mode, pw] : m.powers()) {
            for (unsigned i = 0; i < pw.q; ++i) w.push_back({mode, 'q'});
            for (unsigned i = 0; i < pw.p; ++i) w.push_back({mode, 'p'});
        }
        out[w] = c;
    }
    return out;
}

WeylPoly from_words(const std::map<Word, QComplex> &words) {
    WeylPoly out;
    for (const auto &[w, c] : words) {
        WeylMonomial m;
        for (const auto &[mode, ch] : w) {
            auto pw = m.at(mode);
            (ch == 'q' ? pw.q : pw.p) += 1;
            m.set(mode, pw);
        }
        out.add_term(m, c);
    }
    return out;
}

WeylPoly oracle_product(const WeylPoly &a, const WeylPoly &b) {
    std::map<Word, QComplex> prod;
    for (const auto &[wa, ca] : to_words(a)) {
        for (const auto &[wb, cb] : to_words(b)) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            prod[w] = prod[w] + ca * cb;
        }
    }
    return from_words(rewrite(prod));
}

WeylPoly random_poly(cvgkp::Rng &rng, unsigned max_degree) {
    WeylPoly out;
    const int terms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        WeylMonomial m;
        unsigned budget = static_cast<unsigned>(rng.below(max_degree + 1));
        for (int mode = 1; mode <= 2 && budget > 0; ++mode) {
            const unsigned q = static_cast<unsigned>(rng.below(budget + 1));
            const unsigned p = static_cast<unsigned>(rng.below(budget - q + 1));
            budget -= q + p;
            m.set(mode, {q, p});
        }
        const int re = static_cast<int>(rng.below(7)) - 3;
        const int im = static_cast<int>(rng.below(5)) - 2;
        out.add_term(m, QComplex(Rational(re, 1 + static_cast<int>(rng.below(3))), Rational(im)));
    }
    return out;
}

const QComplex kI = QComplex::i();

}  // namespace

TEST(Weyl, QTimesPIsAlreadyNormal) {
    const auto r = WeylPoly::q(1) * WeylPoly::p(1);
    EXPECT_EQ(r, WeylPoly::monomial(WeylMonomial::of(1, 1, 1)));
}

TEST(Weyl, PTimesQPicksUpMinusI) {
    const auto r = WeylPoly::p(1) * WeylPoly::q(1);
    EXPECT_EQ(r, WeylPoly::monomial(WeylMonomial::of(1, 1, 1)) - kI * WeylPoly(1));
}

TEST(Weyl, PSquaredTimesQ) {
    const auto r = WeylPoly::p(1, 2) * WeylPoly::q(1);
    const auto expected = WeylPoly::monomial(WeylMonomial::of(1, 1, 2)) - QComplex(0, 2) * WeylPoly::p(1);
    EXPECT_EQ(r, expected);
    EXPECT_EQ(r, oracle_product(WeylPoly::p(1, 2), WeylPoly::q(1)));
}

TEST(Weyl, CanonicalCommutator) { EXPECT_EQ(commutator(WeylPoly::q(1), WeylPoly::p(1)), kI * WeylPoly(1)); }

TEST(Weyl, CommutatorPCubedQ) {
    EXPECT_EQ(commutator(WeylPoly::p(1, 3), WeylPoly::q(1)), QComplex(0, -3) * WeylPoly::p(1, 2));
}

TEST(Weyl, NestedCommutatorGivesQuarticMomentum) {
    const auto inner = commutator(WeylPoly::p(1, 3), WeylPoly::q(1) * WeylPoly::q(2));
    const auto outer = commutator(WeylPoly::p(2, 3), inner);
    EXPECT_EQ(outer, QComplex(-9) * (WeylPoly::p(1, 2) * WeylPoly::p(2, 2)));
}

TEST(Weyl, NumberOperatorDefinition) {
    const auto n = number_op(1);
    EXPECT_EQ(n.coeff(WeylMonomial::of(1, 2, 0)), QComplex(Rational(1, 2)));
    EXPECT_EQ(n.coeff(WeylMonomial::of(1, 0, 2)), QComplex(Rational(1, 2)));
    EXPECT_EQ(n.coeff(WeylMonomial{}), QComplex(Rational(-1, 2)));
    EXPECT_EQ(n.size(), 3u);
}

TEST(Weyl, NumberProductDiffersByQuarter) {
    const auto e = expand_number_product();
    EXPECT_EQ(e.difference, QComplex(Rational(1, 4)) * WeylPoly(1));
}

TEST(Weyl, QuarticPiecesCommuteWithFourierGenerator) {
    const auto sum = quartic_piece(1) + quartic_piece(2) + quartic_piece(3) + quartic_piece(4);
    const auto gen = WeylPoly::q(1, 2) + WeylPoly::p(1, 2) + WeylPoly::q(2, 2) + WeylPoly::p(2, 2);
    EXPECT_TRUE(commutator(sum, gen).is_zero());
    // Individual pieces do not commute with it.
    EXPECT_FALSE(commutator(quartic_piece(1), gen).is_zero());
}

TEST(Weyl, DistinctModesCommute) {
    const auto a = WeylPoly::p(1, 3) + WeylPoly::q(1, 2);
    const auto b = WeylPoly::q(2, 2) * WeylPoly::p(2, 1);
    EXPECT_TRUE(commutator(a, b).is_zero());
}

TEST(Weyl, MatchesWordRewritingOracle) {
    cvgkp::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 3);
        const auto b = random_poly(rng, 3);
        EXPECT_EQ(a * b, oracle_product(a, b)) << a.str() << " | " << b.str();
    }
}

TEST(WeylProperty, AssociativeAndDistributive) {
    cvgkp::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, 2);
        const auto b = random_poly(rng, 2);
        const auto c = random_poly(rng, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(WeylProperty, CommutatorAntisymmetricAndJacobi) {
    cvgkp::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, 2);
        const auto b = random_poly(rng, 2);
        const auto c = random_poly(rng, 2);
        EXPECT_EQ(commutator(a, b), -commutator(b, a));
        const auto jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                            commutator(c, commutator(a, b));
        EXPECT_TRUE(jacobi.is_zero()) << jacobi.str();
    }
}

TEST(Weyl, NoZeroCoefficientsStored) {
    auto a = WeylPoly::q(1) + WeylPoly::p(1);
    a -= WeylPoly::q(1);
    EXPECT_EQ(a.size(), 1u);
    EXPECT_TRUE((a - a).is_zero());
}
