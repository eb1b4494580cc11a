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

#include "hyperaut/exactnum.hpp"
#include "hyperaut/numeric.hpp"
#include "test_util.hpp"

using namespace hyperaut;

TEST(Rational, ParseCanonical) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(parse_rational(" +3 "), Rational(3));
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(QuadExt, SpecExamples) {
    QuadExt x(1, 1, -3), y(1, -1, -3);
    EXPECT_EQ(x * y, QuadExt(4));
    QuadExt r = QuadExt::root(-3);
    EXPECT_EQ(r * r, QuadExt(-3));
    QuadExt z(1, 2, -3);
    EXPECT_EQ(z / z, QuadExt(1));
}

TEST(QuadExt, Errors) {
    EXPECT_THROW(QuadExt::root(-3) + QuadExt::root(2), RadicandMismatch);
    EXPECT_THROW(QuadExt::root(5) / QuadExt(0), DivisionByZero);
    EXPECT_THROW(QuadExt(1, 1, 4), std::invalid_argument);
    // rational values mix with any radicand
    EXPECT_EQ(QuadExt::root(2) + QuadExt(Rational(1, 2)), QuadExt(Rational(1, 2), 1, 2));
}

TEST(QuadExt, FieldAxiomsRandom) {
    test::Gen gen(11);
    for (long m : {-3L, -1L, 2L, 5L, -7L}) {
        for (int k = 0; k < 300; ++k) {
            QuadExt a = gen.quad(m), b = gen.quad(m), c = gen.quad(m);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * (QuadExt(1) / a), QuadExt(1));
                EXPECT_EQ((b / a) * a, b);
            }
            EXPECT_EQ(a - a, QuadExt(0));
            EXPECT_EQ(a.norm(), as_rational(a * a.conj()));
        }
    }
}

TEST(QuadExt, CanonicalIdempotent) {
    test::Gen gen(12);
    for (int k = 0; k < 500; ++k) {
        Rational q(gen.integer(-1000, 1000), gen.integer(1, 1000));
        Rational once = q;
        once.canonicalize();
        Rational twice = once;
        twice.canonicalize();
        EXPECT_EQ(once.get_str(), twice.get_str());
        EXPECT_EQ(parse_rational(to_string(once)), once);
        QuadExt x(once, gen.rational(), -3);
        QuadExt y(x.a(), x.b(), x.radicand());
        EXPECT_EQ(x, y);
        EXPECT_EQ(x.str(), y.str());
    }
}

TEST(Numeric, ToComplexExamples) {
    ComplexApprox third = to_complex(Rational(1, 3), 128);
    BigFloat bound = BigFloat::pow2(-124, 64);
    EXPECT_LE(third.err(), bound);
    EXPECT_NEAR(third.value().re.to_double(), 1.0 / 3.0, 1e-16);

    ComplexApprox s = to_complex(QuadExt::root(-3), 128);
    EXPECT_EQ(s.value().re.to_double(), 0.0);
    EXPECT_NEAR(s.value().im.to_double(), 1.7320508075688772, 1e-15);
}

TEST(Numeric, ToComplexErrorBoundsRandom) {
    test::Gen gen(13);
    for (int k = 0; k < 10000; ++k) {
        Rational q(gen.integer(-1000000, 1000000), gen.integer(1, 1000000));
        q.canonicalize();
        ComplexApprox z = to_complex(q, 64 + (k % 4) * 64);
        // exact check: |approx - q| <= err, computed in rationals
        Rational approx;
        mpfr_get_q(approx.get_mpq_t(), z.value().re.get());
        Rational err;
        mpfr_get_q(err.get_mpq_t(), z.err().get());
        EXPECT_LE(abs(approx - q), err);
        Rational rel = err;
        if (sgn(q) != 0) {
            Rational limit = abs(q) / Rational(Integer(1) << static_cast<unsigned>(z.prec() - 4));
            EXPECT_LE(rel, limit);
        }
    }
}

TEST(Numeric, ToComplexCancellation) {
    // 1 - sqrt(2) * 7071/10000 nearly cancels; the radius must still be relative to the value
    QuadExt x(Rational(1), Rational(-7071, 5000), 2);
    ComplexApprox z = to_complex(x, 128);
    double exact = 1.0 - 7071.0 / 5000.0 * std::sqrt(2.0);
    EXPECT_NEAR(z.value().re.to_double(), exact, 1e-12);
    BigFloat lim = abs(z.value().re) * BigFloat::pow2(-123, 64);
    EXPECT_LE(z.err(), lim);
}

TEST(Numeric, ErrorPropagation) {
    ComplexApprox a = to_complex(Rational(1, 3), 96), b = to_complex(Rational(2, 7), 96);
    ComplexApprox c = a * b + a / b - b;
    EXPECT_GE(c.err(), a.err());
    Rational exact = Rational(2, 21) + Rational(7, 6) - Rational(2, 7);
    Rational approx, err;
    mpfr_get_q(approx.get_mpq_t(), c.value().re.get());
    mpfr_get_q(err.get_mpq_t(), c.err().get());
    EXPECT_LE(abs(approx - exact), err);
    EXPECT_THROW(ComplexApprox(32), std::invalid_argument);
}
