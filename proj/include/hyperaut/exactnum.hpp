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
   Exact scalars: arbitrary-precision rationals (GMP) and elements a + b*sqrt(m)
   of a single quadratic extension Q(sqrt(m)).
*/

#ifndef HYPERAUT_EXACTNUM_HPP
#define HYPERAUT_EXACTNUM_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperaut {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class RadicandMismatch : public std::invalid_argument {
   public:
    RadicandMismatch(long m1, long m2)
        : std::invalid_argument("radicand mismatch: sqrt(" + std::to_string(m1) + ") vs sqrt(" + std::to_string(m2) +
                                ")") {}
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p", "-p" or "p/q" into a canonical rational. No floating-point input.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
        if (!digits_ok(sv, true)) throw std::invalid_argument("not a rational literal: '" + s + "'");
    } else {
        if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false))
            throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational literal: '" + s + "'");
    if (sgn(r.get_den()) == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(10); }

/// |m| has no repeated prime factor; m = -1 counts as squarefree.
inline bool is_squarefree(long m) {
    if (m == 0) return false;
    unsigned long v = static_cast<unsigned long>(m < 0 ? -m : m);
    for (unsigned long p = 2; p * p <= v; ++p) {
        if (v % (p * p) == 0) return false;
        if (v % p == 0) v /= p;
    }
    return true;
}

/// Element a + b*sqrt(m) of Q(sqrt(m)). The radicand 1 denotes plain rationals (b is folded into a).
/// Values with b = 0 combine freely with any radicand; two values with b != 0 must share m.
class QuadExt {
   public:
    QuadExt() : a_(0), b_(0), m_(1) {}
    QuadExt(int v) : a_(v), b_(0), m_(1) {}
    QuadExt(long v) : a_(v), b_(0), m_(1) {}
    QuadExt(const Rational& a) : a_(a), b_(0), m_(1) {}
    QuadExt(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
        if (!is_squarefree(m)) throw std::invalid_argument("radicand must be a squarefree nonzero integer");
        if (m_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }

    /// sqrt(m) itself.
    static QuadExt root(long m) { return QuadExt(Rational(0), Rational(1), m); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    long radicand() const noexcept { return m_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    /// Galois conjugate a - b*sqrt(m).
    QuadExt conj() const { return QuadExt(a_, -b_, m_, raw_tag{}); }
    /// Field norm a^2 - m b^2 (rational).
    Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, m_, raw_tag{}); }

    QuadExt& operator+=(const QuadExt& y) {
        m_ = common_radicand(*this, y);
        a_ += y.a_;
        b_ += y.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& y) {
        m_ = common_radicand(*this, y);
        a_ -= y.a_;
        b_ -= y.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& y) {
        long m = common_radicand(*this, y);
        if (sgn(b_) == 0 && sgn(y.b_) == 0) {
            a_ *= y.a_;
        } else if (sgn(y.b_) == 0) {
            a_ *= y.a_;
            b_ *= y.a_;
        } else if (sgn(b_) == 0) {
            b_ = a_ * y.b_;
            a_ *= y.a_;
        } else {
            Rational na = a_ * y.a_ + Rational(m) * b_ * y.b_;
            b_ = a_ * y.b_ + b_ * y.a_;
            a_ = na;
        }
        m_ = m;
        return *this;
    }
    QuadExt& operator/=(const QuadExt& y) {
        if (y.is_zero()) throw DivisionByZero();
        long m = common_radicand(*this, y);
        if (sgn(y.b_) == 0) {
            a_ /= y.a_;
            b_ /= y.a_;
            m_ = m;
            return *this;
        }
        Rational n = y.norm();
        QuadExt num = *this;
        num *= y.conj();
        a_ = num.a_ / n;
        b_ = num.b_ / n;
        m_ = m;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.m_ == y.m_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// The radicand two operands agree on; throws when both carry distinct irrational parts.
    static long common_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.m_ == y.m_) return x.m_;
        if (sgn(x.b_) == 0 && (x.m_ == 1 || sgn(y.b_) != 0 || y.m_ != 1)) return y.m_;
        if (sgn(y.b_) == 0) return x.m_;
        throw RadicandMismatch(x.m_, y.m_);
    }

    std::string str() const {
        if (sgn(b_) == 0) return to_string(a_);
        std::ostringstream os;
        os << to_string(a_) << (sgn(b_) < 0 ? " - " : " + ") << to_string(abs(b_)) << "*sqrt(" << m_ << ")";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

   private:
    struct raw_tag {};
    QuadExt(const Rational& a, const Rational& b, long m, raw_tag) : a_(a), b_(b), m_(m) {}

    Rational a_;
    Rational b_;
    long m_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

/// Radicand of a scalar; 1 for rationals.
inline long radicand_of(const Rational&) { return 1; }
inline long radicand_of(const QuadExt& x) { return x.is_rational() ? 1 : x.radicand(); }

template <class S>
S scalar_from(const Rational& r) {
    return S(r);
}

/// Returns x as a rational; throws if x has an irrational part.
inline Rational as_rational(const QuadExt& x) {
    if (!x.is_rational()) throw std::invalid_argument("value " + x.str() + " is not rational");
    return x.a();
}
inline Rational as_rational(const Rational& x) { return x; }

/// Integer power with exponent >= 0 (x^0 = 1).
template <class S>
S power(const S& x, long e) {
    if (e < 0) return S(1) / power(x, -e);
    S result(1), base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// n (n-1) ... (n-k+1), zero when k > n.
inline Integer falling(long n, long k) {
    if (k > n) return Integer(0);
    Integer r(1);
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

/// Largest squarefree divisor-free form: x = s^2 * core. Returns core (sign kept) for |x| fitting in a long.
inline long squarefree_core(const Integer& x, Integer& square_root_part) {
    if (sgn(x) == 0) throw std::invalid_argument("squarefree_core of zero");
    Integer v = abs(x);
    Integer core(1);
    square_root_part = 1;
    for (unsigned long p = 2; p * p <= v && p < 1000000; ++p) {
        while (mpz_divisible_ui_p(v.get_mpz_t(), p * p)) {
            v /= p * p;
            square_root_part *= p;
        }
        if (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            v /= p;
            core *= p;
        }
    }
    Integer rest_root;
    if (mpz_perfect_square_p(v.get_mpz_t())) {
        mpz_sqrt(rest_root.get_mpz_t(), v.get_mpz_t());
        square_root_part *= rest_root;
    } else {
        core *= v;
    }
    if (!core.fits_slong_p()) throw std::overflow_error("squarefree core does not fit a machine integer");
    long c = core.get_si();
    return sgn(x) < 0 ? -c : c;
}

/// Exact rational k-th root if one exists.
inline bool rational_root(const Rational& x, unsigned long k, Rational& out) {
    if (k == 0) return false;
    if (sgn(x) < 0 && k % 2 == 0) return false;
    Integer n = abs(x.get_num()), d = x.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
    out = Rational(rn, rd);
    if (sgn(x) < 0) out = -out;
    out.canonicalize();
    return true;
}

}  // namespace hyperaut

#endif
