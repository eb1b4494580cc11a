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

#include "hyperaut/dihedral.hpp"
#include "test_util.hpp"

using namespace hyperaut;
using Q = QuadExt;

namespace {

HyperellipticCurve<Rational> curve(std::vector<Rational> c) {
    return HyperellipticCurve<Rational>::from_affine(Poly<Rational>(c.begin(), c.end()));
}

/// Decomposition with h_0 = h_t = 1 and the given middle coefficients (a_1, ..., a_(t-1)).
NormalDecomposition monic(long n, const std::vector<Q>& a) {
    NormalDecomposition D;
    D.n = D.degree_s = n;
    D.t = static_cast<long>(a.size()) + 1;
    D.h.assign(D.t + 1, Q(1));
    for (long i = 1; i < D.t; ++i) D.h[D.t - i] = a[i - 1];
    return D;
}

std::vector<Q> values(const NormalDecomposition& D) { return dihedral_invariants(D).values; }

}  // namespace

TEST(Dihedral, ExampleTuples) {
    EXPECT_EQ(values(monic(2, {Q(-5), Q(-5)})), (std::vector<Q>{Q(-250), Q(50)}));
    EXPECT_EQ(values(monic(2, {Q(15), Q(15)})), (std::vector<Q>{Q(6750), Q(450)}));
    // a_1 = a_3 = 0 falls through to level 2
    auto u = dihedral_invariants(monic(2, {Q(0), Q(3), Q(0)}));
    EXPECT_EQ(u.level, 2);
    EXPECT_FALSE(u.is_zero_tuple());
}

TEST(Dihedral, NormalDecompositionExamples) {
    auto C = curve({1, 0, -5, 0, -5, 0, 1});
    auto D = normal_decomposition(C, symmetry_oracle(C).group);
    ASSERT_TRUE(D);
    EXPECT_EQ(D->kind, DecompositionKind::EvenPart);
    EXPECT_EQ(D->n, 2);
    EXPECT_EQ(D->t, 3);
    ASSERT_TRUE(D->coeffs());
    EXPECT_EQ(*D->coeffs(), (std::vector<Q>{Q(-5), Q(-5)}));

    auto Z = curve({0, -1, 0, 0, 0, 0, 1});
    auto E = normal_decomposition(Z, symmetry_oracle(Z).group);
    ASSERT_TRUE(E);
    EXPECT_EQ(E->kind, DecompositionKind::OddPart);
    EXPECT_EQ(E->n, 5);
    EXPECT_EQ(E->t, 1);
    EXPECT_EQ(E->h, (std::vector<Q>{Q(-1), Q(1)}));

    auto R = curve({2, 1, 0, 1, 0, 1, 1});
    EXPECT_FALSE(normal_decomposition(R, symmetry_oracle(R).group));
}

TEST(Dihedral, ConjugatedInvolution) {
    // X^6 - 5X^4 - 5X^2 + 1 moved by X -> (X + 1)/(X - 1): the involution is no longer X -> -X
    auto C = curve({1, 0, -5, 0, -5, 0, 1});
    HyperellipticCurve<Rational> D(2, act(MoebiusMap<Rational>(1, 1, 1, -1), C.F()));
    auto R = symmetry_oracle(D);
    auto N = normal_decomposition(D, R.group);
    ASSERT_TRUE(N);
    auto u = dihedral_invariants(*N);
    auto v = genus2_classify(u);
    EXPECT_EQ(v.name, "GL2(3)");
    EXPECT_EQ(v.name, R.verdict.full_name);
}

TEST(Dihedral, ExtraInvolutionRelation) {
    DihedralTuple u;
    u.values = {Q(6750), Q(450)};
    EXPECT_TRUE(extra_involution_relation(u, 2));
    u.values = {Q(-250), Q(50)};
    EXPECT_TRUE(extra_involution_relation(u, 2));
    u.values = {Q(1), Q(1)};
    EXPECT_FALSE(extra_involution_relation(u, 2));
    EXPECT_THROW(extra_involution_relation(u, 3), DihedralError);
}

TEST(Dihedral, Genus2Classification) {
    EXPECT_EQ(genus2_classify(Q(6750), Q(450)).name, "V6");
    EXPECT_EQ(genus2_classify(Q(0), Q(0)).name, "V6");
    EXPECT_EQ(genus2_classify(Q(-250), Q(50)).name, "GL2(3)");
    EXPECT_EQ(genus2_classify(Q(16), Q(8)).name, "D4");
    EXPECT_EQ(genus2_classify(Q(1), Q(1)).name, "Z2xZ2");
    // D6 locus: u1 = (u2^2 - 220 u2 + 4500) / 16
    EXPECT_EQ(genus2_classify(Q(Rational(100 - 2200 + 4500, 16)), Q(10)).name, "D6");
    // excluded D6 boundary points
    EXPECT_NE(genus2_classify(Q(Rational(324 - 3960 + 4500, 16)), Q(18)).name, "D6");
    Q w(Rational(140), Rational(60), 5);
    Q w1 = (w * w - Q(220) * w + Q(4500)) / Q(16);
    EXPECT_NE(genus2_classify(w1, w).name, "D6");
}

TEST(Dihedral, D4Witness) {
    // a1 a2 = 4, a1^3 + a2^3 = 16 gives a1 = a2 = 2 and u = (16, 8)
    EXPECT_EQ(values(monic(2, {Q(2), Q(2)})), (std::vector<Q>{Q(16), Q(8)}));
    auto C = curve({1, 0, 2, 0, 2, 0, 1});
    auto R = symmetry_oracle(C);
    EXPECT_EQ(R.verdict.full_name, "D4");
    EXPECT_EQ(R.verdict.order, 8);
}

TEST(Dihedral, ResidualScalingInvariance) {
    test::Gen gen(81);
    for (int k = 0; k < 300; ++k) {
        long n = 2 * gen.integer(1, 3);
        long t = gen.integer(2, 6);
        std::vector<Q> a;
        for (long i = 1; i < t; ++i) a.emplace_back(gen.rational());
        auto D = monic(n, a);
        auto base = values(D);
        long nt = n * t;
        std::vector<Q> lambdas{Q(-1)};
        if (nt % 4 == 0) lambdas.push_back(Q::root(-1));
        if (nt % 3 == 0) lambdas.push_back((Q(-1) + Q::root(-3)) / Q(2));
        for (const auto& l : lambdas) {
            ASSERT_EQ(power(l, nt), Q(1));
            std::vector<Q> b;
            for (long i = 1; i < t; ++i) b.push_back(power(l, n * (t - i)) * a[i - 1]);
            EXPECT_EQ(values(monic(n, b)), base);
        }
    }
}

TEST(Dihedral, EveryLevelIsInvariant) {
    test::Gen gen(86);
    for (int k = 0; k < 300; ++k) {
        long n = 2 * gen.integer(1, 3);
        long t = gen.integer(3, 8);
        std::vector<Q> a;
        for (long i = 1; i < t; ++i) a.emplace_back(gen.rational());
        if (k % 2) a.front() = a.back() = Q(0);
        long nt = n * t;
        std::vector<Q> lambdas{Q(-1)};
        if (nt % 4 == 0) lambdas.push_back(Q::root(-1));
        if (nt % 3 == 0) lambdas.push_back((Q(-1) + Q::root(-3)) / Q(2));
        std::vector<Q> r(a.rbegin(), a.rend());
        for (long j = 1; j <= (t) / 2; ++j) {
            auto base = dihedral_level(monic(n, a), j).values;
            EXPECT_EQ(dihedral_level(monic(n, r), j).values, base) << "t=" << t << " j=" << j;
            for (const auto& l : lambdas) {
                std::vector<Q> b;
                for (long i = 1; i < t; ++i) b.push_back(power(l, n * (t - i)) * a[i - 1]);
                EXPECT_EQ(dihedral_level(monic(n, b), j).values, base) << "n=" << n << " t=" << t << " j=" << j;
            }
        }
    }
    EXPECT_EQ(level_exponents(6, 1, 2), (std::pair<long, long>{4, 1}));
    EXPECT_EQ(level_exponents(4, 2, 1), (std::pair<long, long>{1, 2}));
}

TEST(Dihedral, ReversalInvariance) {
    test::Gen gen(82);
    for (int k = 0; k < 300; ++k) {
        long t = gen.integer(2, 7);
        std::vector<Q> a;
        for (long i = 1; i < t; ++i) a.emplace_back(gen.rational());
        std::vector<Q> r(a.rbegin(), a.rend());
        EXPECT_EQ(values(monic(2, a)), values(monic(2, r)));
    }
}

TEST(Dihedral, ZeroCharacterization) {
    test::Gen gen(83);
    for (int k = 0; k < 300; ++k) {
        long t = gen.integer(3, 7);
        std::vector<Q> a;
        for (long i = 1; i < t; ++i) a.emplace_back(gen.rational());
        int mode = k % 4;
        if (mode != 3) a.front() = Q(0);
        if (mode != 2) a.back() = Q(0);
        if (mode == 0) a.back() = a.front() = Q(0);
        bool zero = is_zero(a.front()) && is_zero(a.back());
        EXPECT_EQ(dihedral_level(monic(2, a), 1).is_zero_tuple(), zero);
    }
    // boundary: a_1 = -a_delta, t odd, so a_1^t + a_delta^t = 0 but 2 a_1 a_delta != 0
    EXPECT_FALSE(dihedral_level(monic(2, {Q(1), Q(0), Q(-1)}), 1).is_zero_tuple());
    EXPECT_TRUE(dihedral_level(monic(2, {Q(0), Q(5), Q(0)}), 1).is_zero_tuple());
}

TEST(Dihedral, FamilyConsistency) {
    test::Gen gen(84);
    for (long g : {3L, 5L, 7L}) {
        for (int k = 0; k < 5; ++k) {
            // n = 2: Y^2 = prod (X^4 + l X^2 + 1) has an extra involution
            Poly<Rational> G{1};
            for (long i = 0; i < (g + 1) / 2; ++i) G = poly_mul(G, dihedral_factor<Rational>(2, gen.rational()));
            auto D = read_decomposition(homogenize(G, 2 * g + 2), 2);
            ASSERT_TRUE(D);
            auto u = dihedral_level(*D, 1);
            EXPECT_TRUE(extra_involution_relation(u, g)) << "g=" << g;
        }
        for (long n = 4; n <= g + 1; n += 2) {
            if ((2 * g + 2) % (2 * n)) continue;
            Poly<Rational> G{1};
            for (long i = 0; i < (2 * g + 2) / (2 * n); ++i) G = poly_mul(G, dihedral_factor<Rational>(n, gen.rational()));
            auto D = read_decomposition(homogenize(G, 2 * g + 2), 2);
            ASSERT_TRUE(D);
            EXPECT_TRUE(dihedral_level(*D, 1).is_zero_tuple()) << "g=" << g << " n=" << n;
        }
    }
}

TEST(Dihedral, OracleAgreementGenus2) {
    test::Gen gen(85);
    int done = 0, special = 0, boundary = 0;
    while (done < 100) {
        Rational a1 = gen.rational(12, 3), a2 = (done % 5 == 0) ? a1 : gen.rational(12, 3);
        Poly<Rational> p{1, 0, a2, 0, a1, 0, 1};
        if (!poly_is_squarefree(p)) continue;
        auto C = curve({p.begin(), p.end()});
        auto u = values(monic(2, {Q(a1), Q(a2)}));
        auto cls = genus2_classify(u[0], u[1]);
        auto R = symmetry_oracle(C);
        if (cls.boundary) {
            // a1 = a2 with a1 in {1, -3, 5}: nonsingular, on the D4 locus at an excluded u2
            EXPECT_EQ(R.verdict.full_name, "D4") << "a1=" << a1;
            ++boundary;
        } else {
            EXPECT_EQ(cls.name, R.verdict.full_name) << "a1=" << a1 << " a2=" << a2;
        }
        special += R.verdict.full_name != "Z2xZ2";
        ++done;
    }
    EXPECT_GE(special, 20);
    EXPECT_GT(boundary, 0);
}

TEST(Dihedral, ExcludedD4ValuesAreBoundary) {
    for (long a : {1L, -3L, 5L}) {
        auto u = values(monic(2, {Q(a), Q(a)}));
        auto v = genus2_classify(u[0], u[1]);
        EXPECT_TRUE(v.boundary) << a;
        EXPECT_EQ(symmetry_oracle(curve({1, 0, a, 0, a, 0, 1})).verdict.full_name, "D4") << a;
    }
    EXPECT_FALSE(genus2_classify(Q(16), Q(8)).boundary);
}
