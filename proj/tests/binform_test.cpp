/*
   Copyright 2026 The hyperaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "hyperaut/binform.hpp"
#include "hyperaut/polyalg.hpp"
#include "test_util.hpp"

using namespace hyperaut;
using F = BinaryForm<Rational>;
using M = MoebiusMap<Rational>;

namespace {

F form(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return F(std::move(v));
}

// Independent transvectant: expand both forms into monomials and apply the
// differential operator sum_k (-1)^k C(r,k) d^r/dX^(r-k)dZ^k (x) d^r/dX^k dZ^(r-k)
// one monomial pair at a time.
F oracle_transvect(const F& f, const F& g, long r) {
    long n = f.degree(), m = g.degree();
    std::vector<Rational> out(static_cast<std::size_t>(n + m - 2 * r + 1), Rational(0));
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= m; ++j) {
            if (sgn(f[i]) == 0 || sgn(g[j]) == 0) continue;
            for (long k = 0; k <= r; ++k) {
                // f-monomial X^i Z^(n-i): d/dX^(r-k) d/dZ^k
                long fx = r - k, fz = k, gx = k, gz = r - k;
                if (fx > i || fz > n - i || gx > j || gz > m - j) continue;
                Rational c = f[i] * g[j];
                for (long t = 0; t < fx; ++t) c *= (i - t);
                for (long t = 0; t < fz; ++t) c *= (n - i - t);
                for (long t = 0; t < gx; ++t) c *= (j - t);
                for (long t = 0; t < gz; ++t) c *= (m - j - t);
                Rational b(binomial(r, k));
                if (k % 2) b = -b;
                out[(i - fx) + (j - gx)] += c * b;
            }
        }
    }
    Rational pre(factorial(m - r) * factorial(n - r), factorial(n) * factorial(m));
    pre.canonicalize();
    for (auto& c : out) c *= pre;
    return F(out);
}

}  // namespace

TEST(BinaryForm, ActExamples) {
    test::Gen gen(21);
    F f = gen.form(7);
    EXPECT_EQ(act(M::identity(), f), f);
    F swapped = act(M(0, 1, 1, 0), f);
    for (long i = 0; i <= 7; ++i) EXPECT_EQ(swapped[i], f[7 - i]);
    EXPECT_EQ(act(M(2, 0, 0, 1), form({1, 0, 0, 0, 0, 0, 1})), form({1, 0, 0, 0, 0, 0, 64}));
    EXPECT_THROW(act(M(1, 2, 2, 4), f), SingularMatrix);
}

TEST(BinaryForm, DiffExamples) {
    EXPECT_EQ(diff(form({0, 0, 1}), 1, 0), form({0, 2}));
    EXPECT_EQ(diff(form({0, 1, 0}), 1, 1), form({1}));
    test::Gen gen(22);
    EXPECT_TRUE(diff(gen.form(2), 2, 1).is_zero());
    EXPECT_TRUE(diff(gen.form(2), 0, 3).is_zero());
}

TEST(BinaryForm, Homogenize) {
    std::vector<Rational> p{0, -1, 0, 0, 0, 1};
    F h = homogenize(p, 6);
    EXPECT_EQ(h, form({0, -1, 0, 0, 0, 1, 0}));
    EXPECT_EQ(homogenize(std::vector<Rational>{1}, 2), form({1, 0, 0}));
    std::vector<Rational> q{1, 0, -5, 0, -5, 0, 1};
    EXPECT_EQ(homogenize(q, 6), form({1, 0, -5, 0, -5, 0, 1}));
    EXPECT_THROW(homogenize(q, 5), std::invalid_argument);
}

TEST(Transvectant, Examples) {
    EXPECT_EQ(transvect(form({1, 0, 1}), form({1, 0, 1}), 2), form({2}));
    F x6 = form({1, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(transvect(x6, x6, 6), form({2}));
    EXPECT_THROW(transvect(x6, form({1, 1}), 2), TransvectantIndexError);
    EXPECT_TRUE(transvect(x6, form({1, 1}), 2, TransvectMode::Derivative).is_zero());
    EXPECT_EQ(transvect(x6, form({1, 1}), 2, TransvectMode::Derivative).degree(), 3);
}

TEST(Transvectant, MatchesMonomialOracle) {
    test::Gen gen(23);
    for (int k = 0; k < 300; ++k) {
        long n = gen.integer(0, 9), m = gen.integer(0, 9);
        long r = gen.integer(0, std::min(n, m));
        F f = gen.form(n), g = gen.form(m);
        EXPECT_EQ(transvect(f, g, r), oracle_transvect(f, g, r));
    }
}

TEST(Transvectant, Properties) {
    test::Gen gen(24);
    for (int k = 0; k < 400; ++k) {
        long n = gen.integer(1, 8), m = gen.integer(1, 8);
        long r = gen.integer(0, std::min(n, m));
        F f1 = gen.form(n), f2 = gen.form(n), g = gen.form(m);
        F t = transvect(f1, g, r);
        EXPECT_EQ(t.degree(), n + m - 2 * r);
        Rational a = gen.rational(), b = gen.rational();
        EXPECT_EQ(transvect(f1 * a + f2 * b, g, r), transvect(f1, g, r) * a + transvect(f2, g, r) * b);
        EXPECT_EQ(transvect(f1, g, 0), f1 * g);
        long odd = 2 * gen.integer(0, (n - 1) / 2) + 1;
        if (odd <= n) {
            EXPECT_TRUE(transvect(f1, f1, odd).is_zero());
        }
        M u = gen.unimodular();
        EXPECT_EQ(transvect(act(u, f1), act(u, g), r), act(u, t));
    }
}

TEST(BinaryForm, ActionComposition) {
    test::Gen gen(25);
    for (int k = 0; k < 200; ++k) {
        F f = gen.form(gen.integer(0, 8));
        M a = gen.matrix(), b = gen.matrix();
        EXPECT_EQ(act(a * b, f), act(b, act(a, f)));
    }
}

TEST(BinaryForm, GeneralCovarianceWeight) {
    test::Gen gen(26);
    for (int k = 0; k < 100; ++k) {
        long n = gen.integer(1, 6), m = gen.integer(1, 6);
        long r = gen.integer(0, std::min(n, m));
        F f = gen.form(n), g = gen.form(m);
        M a = gen.matrix(3);
        Rational det = a.det();
        EXPECT_EQ(transvect(act(a, f), act(a, g), r), act(a, transvect(f, g, r)) * power(det, r));
    }
}

TEST(Polynomials, GcdAndInterpolation) {
    Poly<Rational> p{-1, 0, 1}, q{1, 2, 1};
    EXPECT_EQ(poly_gcd(p, q), (Poly<Rational>{1, 1}));
    EXPECT_FALSE(poly_is_squarefree(q));
    EXPECT_TRUE(poly_is_squarefree(p));
    std::vector<Rational> xs{0, 1, 2, 3}, ys;
    for (auto& x : xs) ys.push_back(x * x * x - 2 * x + 5);
    EXPECT_EQ(interpolate(xs, ys), (Poly<Rational>{5, -2, 0, 1}));
    EXPECT_TRUE(is_squarefree_form(form({0, -1, 0, 0, 0, 1, 0})));
    EXPECT_FALSE(is_squarefree_form(form({0, -1, 0, 0, 1, 0, 0})));
    EXPECT_FALSE(is_squarefree_form(form({1, 2, 1})));
}
