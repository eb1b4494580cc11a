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

/*
   Multiple-precision floating point (MPFR) and complex values with explicit
   error radii.
*/

#ifndef HYPERAUT_NUMERIC_HPP
#define HYPERAUT_NUMERIC_HPP

#include <mpfr.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "exactnum.hpp"

namespace hyperaut {

class PrecisionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// RAII wrapper for mpfr_t. Binary operations produce a result at the larger operand precision.
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), rnd);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Copy rounded to a different precision.
    BigFloat with_prec(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, rnd);
        return r;
    }

    std::string str(int digits = 20) const {
        if (mpfr_zero_p(v_)) return "0";
        char* s = nullptr;
        std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&s, fmt.c_str(), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

#define HYPERAUT_BF_BINOP(OP, FN)                                                      \
    friend BigFloat operator OP(const BigFloat& x, const BigFloat& y) {                \
        BigFloat r(std::max(x.prec(), y.prec()));                                     \
        FN(r.v_, x.v_, y.v_, MPFR_RNDN);                                               \
        return r;                                                                      \
    }                                                                                  \
    BigFloat& operator OP##=(const BigFloat& y) {                                      \
        if (y.prec() > prec()) mpfr_prec_round(v_, y.prec(), MPFR_RNDN);               \
        FN(v_, v_, y.v_, MPFR_RNDN);                                                   \
        return *this;                                                                  \
    }
    HYPERAUT_BF_BINOP(+, mpfr_add)
    HYPERAUT_BF_BINOP(-, mpfr_sub)
    HYPERAUT_BF_BINOP(*, mpfr_mul)
    HYPERAUT_BF_BINOP(/, mpfr_div)
#undef HYPERAUT_BF_BINOP

    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
    friend bool operator>=(const BigFloat& x, const BigFloat& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }

    friend BigFloat sqrt(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    /// 2^e at the given precision.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

   private:
    mpfr_t v_;
};

/// Complex number with MPFR parts; no error tracking.
struct Complex {
    BigFloat re;
    BigFloat im;

    explicit Complex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Complex(std::complex<double> z, mpfr_prec_t prec) : re(z.real(), prec), im(z.imag(), prec) {}

    mpfr_prec_t prec() const { return re.prec(); }
    std::complex<double> to_cdouble() const { return {re.to_double(), im.to_double()}; }
    Complex with_prec(mpfr_prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
    friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
    friend Complex operator*(const Complex& x, const Complex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Complex operator/(const Complex& x, const Complex& y) {
        BigFloat n = y.re * y.re + y.im * y.im;
        if (n.is_zero()) throw DivisionByZero();
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    Complex& operator+=(const Complex& y) { return *this = *this + y; }
    Complex& operator-=(const Complex& y) { return *this = *this - y; }
    Complex& operator*=(const Complex& y) { return *this = *this * y; }
    Complex& operator/=(const Complex& y) { return *this = *this / y; }

    Complex conj() const { return {re, -im}; }
};

/// |z|, rounded toward +inf when `upper` is set.
inline BigFloat cabs(const Complex& z, bool upper = false) {
    BigFloat r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), upper ? MPFR_RNDU : MPFR_RNDN);
    return r;
}

inline Complex from_rational(const Rational& q, mpfr_prec_t prec) { return {BigFloat(q, prec), BigFloat(prec)}; }

/// Complex value with an error radius: the exact quantity lies within `err` of `value`.
/// Radii are kept at 64 bits and rounded upward; arithmetic never shrinks them.
class ComplexApprox {
   public:
    static constexpr mpfr_prec_t err_prec = 64;

    explicit ComplexApprox(mpfr_prec_t prec = 256) : value_(prec), err_(err_prec) { check_prec(prec); }
    ComplexApprox(Complex v, BigFloat err) : value_(std::move(v)), err_(err.with_prec(err_prec, MPFR_RNDU)) {
        check_prec(value_.prec());
        if (err_.sign() < 0) throw std::invalid_argument("negative error radius");
    }

    const Complex& value() const noexcept { return value_; }
    const BigFloat& err() const noexcept { return err_; }
    mpfr_prec_t prec() const { return value_.prec(); }
    std::complex<double> to_cdouble() const { return value_.to_cdouble(); }

    /// True when the disc certainly excludes zero.
    bool certainly_nonzero() const { return cabs(value_) > err_ + err_; }

    friend ComplexApprox operator+(const ComplexApprox& x, const ComplexApprox& y) {
        Complex v = x.value_ + y.value_;
        BigFloat e = add_up(add_up(x.err_, y.err_), rounding_err(v));
        return ComplexApprox(std::move(v), std::move(e));
    }
    friend ComplexApprox operator-(const ComplexApprox& x, const ComplexApprox& y) {
        Complex v = x.value_ - y.value_;
        BigFloat e = add_up(add_up(x.err_, y.err_), rounding_err(v));
        return ComplexApprox(std::move(v), std::move(e));
    }
    friend ComplexApprox operator*(const ComplexApprox& x, const ComplexApprox& y) {
        Complex v = x.value_ * y.value_;
        BigFloat ax = cabs(x.value_, true).with_prec(err_prec, MPFR_RNDU);
        BigFloat ay = cabs(y.value_, true).with_prec(err_prec, MPFR_RNDU);
        BigFloat e = add_up(add_up(mul_up(ax, y.err_), mul_up(ay, x.err_)), mul_up(x.err_, y.err_));
        e = add_up(e, rounding_err(v));
        return ComplexApprox(std::move(v), std::move(e));
    }
    /// Division; throws PrecisionError when the divisor disc may contain zero.
    friend ComplexApprox operator/(const ComplexApprox& x, const ComplexApprox& y) {
        BigFloat ay_low(err_prec);
        mpfr_hypot(ay_low.get(), y.value_.re.get(), y.value_.im.get(), MPFR_RNDD);
        BigFloat denom(err_prec);
        mpfr_sub(denom.get(), ay_low.get(), y.err_.get(), MPFR_RNDD);
        if (denom.sign() <= 0) throw PrecisionError("divisor interval contains zero");
        Complex v = x.value_ / y.value_;
        // |x/y - X/Y| <= (|x| ey + |y| ex) / (|y| (|y| - ey)) with |x| taken as an upper bound
        BigFloat ax = cabs(x.value_, true).with_prec(err_prec, MPFR_RNDU);
        BigFloat num = add_up(mul_up(ax, y.err_), mul_up(cabs(y.value_, true).with_prec(err_prec, MPFR_RNDU), x.err_));
        BigFloat den(err_prec);
        mpfr_mul(den.get(), ay_low.get(), denom.get(), MPFR_RNDD);
        BigFloat e(err_prec);
        mpfr_div(e.get(), num.get(), den.get(), MPFR_RNDU);
        e = add_up(e, rounding_err(v));
        return ComplexApprox(std::move(v), std::move(e));
    }

    std::string str(int digits = 20) const {
        return "(" + value_.re.str(digits) + ", " + value_.im.str(digits) + ") +/- " + err_.str(4);
    }

   private:
    static void check_prec(mpfr_prec_t p) {
        if (p < 64) throw std::invalid_argument("precision must be at least 64 bits");
    }
    static BigFloat add_up(const BigFloat& a, const BigFloat& b) {
        BigFloat r(err_prec);
        mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
        return r;
    }
    static BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
        BigFloat r(err_prec);
        mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
        return r;
    }
    // Rounding of the two parts: at most one ulp of |v| each at the working precision.
    static BigFloat rounding_err(const Complex& v) {
        BigFloat a = cabs(v, true).with_prec(err_prec, MPFR_RNDU);
        BigFloat r(err_prec);
        mpfr_mul_2si(r.get(), a.get(), 2 - static_cast<long>(v.prec()), MPFR_RNDU);
        return r;
    }

    Complex value_;
    BigFloat err_;
};

/// Exact value as a complex approximation with err <= 2^(-prec+4) |x|.
inline ComplexApprox to_complex(const Rational& x, mpfr_prec_t prec) {
    if (prec < 64) throw std::invalid_argument("precision must be at least 64 bits");
    BigFloat re(x, prec);
    BigFloat err(ComplexApprox::err_prec);
    if (!is_zero(x)) mpfr_mul_2si(err.get(), abs(re).with_prec(ComplexApprox::err_prec, MPFR_RNDU).get(), 1 - static_cast<long>(prec), MPFR_RNDU);
    return ComplexApprox(Complex(std::move(re), BigFloat(prec)), std::move(err));
}

inline ComplexApprox to_complex(const QuadExt& x, mpfr_prec_t prec) {
    if (prec < 64) throw std::invalid_argument("precision must be at least 64 bits");
    if (x.is_rational()) return to_complex(x.a(), prec);
    long m = x.radicand();
    if (m < 0) {
        // a + b i sqrt|m|: the two parts do not interact, so relative errors stay small.
        BigFloat r(x.a(), prec);
        BigFloat s(Rational(-m), prec);
        s = sqrt(s);
        BigFloat im = BigFloat(x.b(), prec) * s;
        Complex v(std::move(r), std::move(im));
        BigFloat err(ComplexApprox::err_prec);
        mpfr_mul_2si(err.get(), cabs(v, true).with_prec(ComplexApprox::err_prec, MPFR_RNDU).get(), 3 - static_cast<long>(prec), MPFR_RNDU);
        return ComplexApprox(std::move(v), std::move(err));
    }
    // a + b sqrt(m) with m > 1 may cancel; raise the working precision until the bound holds.
    // |a + b sqrt m| >= |norm| / |a - b sqrt m| gives a lower bound for the target radius.
    Rational nrm = abs(x.norm());
    for (mpfr_prec_t w = prec + 32;; w *= 2) {
        BigFloat s = sqrt(BigFloat(Rational(m), w));
        BigFloat bs = BigFloat(x.b(), w) * s;
        BigFloat val = BigFloat(x.a(), w) + bs;
        BigFloat conjv = BigFloat(x.a(), w) - bs;
        // each of the ~4 roundings contributes at most 2^-w times the magnitudes involved
        BigFloat mag = abs(BigFloat(x.a(), w)) + abs(bs);
        BigFloat err = mag * BigFloat::pow2(3 - static_cast<long>(w), 64);
        BigFloat lower = BigFloat(nrm, w) / (abs(conjv) + err);
        BigFloat target = lower * BigFloat::pow2(4 - static_cast<long>(prec), 64);
        BigFloat out = val.with_prec(prec);
        BigFloat total = err + abs(out - val) + abs(out) * BigFloat::pow2(1 - static_cast<long>(prec), 64);
        if (total <= target) {
            return ComplexApprox(Complex(std::move(out), BigFloat(prec)), total.with_prec(ComplexApprox::err_prec, MPFR_RNDU));
        }
        if (w > 64 * prec) throw PrecisionError("to_complex failed to reach the requested accuracy");
    }
}

}  // namespace hyperaut

#endif
