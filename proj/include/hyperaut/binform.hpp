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
   Binary forms F(X, Z) = sum_i a_i X^i Z^(d-i) over an exact scalar type,
   the GL2 substitution action, partial derivatives and transvectants.
*/

#ifndef HYPERAUT_BINFORM_HPP
#define HYPERAUT_BINFORM_HPP

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactnum.hpp"

namespace hyperaut {

template <class S>
S from_integer(const Integer& z) {
    return S(Rational(z));
}

class SingularMatrix : public std::domain_error {
   public:
    SingularMatrix() : std::domain_error("singular matrix") {}
};

class TransvectantIndexError : public std::invalid_argument {
   public:
    TransvectantIndexError(long r, long n, long m)
        : std::invalid_argument("transvectant index " + std::to_string(r) + " outside [0, min(" + std::to_string(n) +
                                ", " + std::to_string(m) + ")]") {}
};

/// 2x2 matrix (a b; c d), acting on forms by F(X, Z) -> F(aX + bZ, cX + dZ)
/// and on projective points (x : z) -> (ax + bz : cx + dz).
template <class S>
struct MoebiusMap {
    S a, b, c, d;

    MoebiusMap() : a(1), b(0), c(0), d(1) {}
    MoebiusMap(S a_, S b_, S c_, S d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static MoebiusMap identity() { return MoebiusMap(); }
    S det() const { return a * d - b * c; }

    friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
        return MoebiusMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                          m.c * n.b + m.d * n.d);
    }
    friend bool operator==(const MoebiusMap& m, const MoebiusMap& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    /// Adjugate; equals the inverse up to the scalar det.
    MoebiusMap adjugate() const { return MoebiusMap(d, -b, -c, a); }
    MoebiusMap inverse() const {
        S dt = det();
        if (is_zero(dt)) throw SingularMatrix();
        return MoebiusMap(d / dt, -b / dt, -c / dt, a / dt);
    }

    /// Scaled so that the first nonzero entry in row-major order is 1.
    MoebiusMap normalized() const {
        const S* lead = !is_zero(a) ? &a : &b;
        S s = *lead;
        if (is_zero(s)) throw SingularMatrix();
        return MoebiusMap(a / s, b / s, c / s, d / s);
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << a << " " << b << "; " << c << " " << d << ")";
        return os.str();
    }
};

/// Dense binary form. coeffs[i] is the coefficient of X^i Z^(d-i). The zero form keeps its formal degree.
template <class S>
class BinaryForm {
   public:
    BinaryForm() : coeffs_(1, S(0)) {}
    explicit BinaryForm(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
    }
    static BinaryForm zero(long degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
        return BinaryForm(std::vector<S>(static_cast<std::size_t>(degree) + 1, S(0)));
    }
    static BinaryForm constant(const S& c) { return BinaryForm(std::vector<S>{c}); }

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<S>& coeffs() const noexcept { return coeffs_; }
    const S& operator[](std::size_t i) const { return coeffs_[i]; }
    S& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& x) { return hyperaut::is_zero(x); });
    }

    /// Binomially scaled coefficients b_i = a_i / C(d, i).
    std::vector<S> binomial_coeffs() const {
        std::vector<S> out;
        out.reserve(coeffs_.size());
        for (long i = 0; i <= degree(); ++i) out.push_back(coeffs_[i] / from_integer<S>(binomial(degree(), i)));
        return out;
    }

    /// Highest X-power with a nonzero coefficient, -1 for the zero form.
    long x_degree() const {
        for (long i = degree(); i >= 0; --i)
            if (!hyperaut::is_zero(coeffs_[i])) return i;
        return -1;
    }

    S evaluate(const S& x, const S& z) const {
        S acc(0);
        std::vector<S> zpow(coeffs_.size(), S(1));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) zpow[k] = zpow[k - 1] * z;
        S xp(1);
        for (long i = 0; i <= degree(); ++i) {
            if (!hyperaut::is_zero(coeffs_[i])) acc += coeffs_[i] * xp * zpow[degree() - i];
            xp *= x;
        }
        return acc;
    }

    BinaryForm& operator+=(const BinaryForm& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    BinaryForm& operator*=(const S& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend BinaryForm operator+(BinaryForm f, const BinaryForm& g) { return f += g; }
    friend BinaryForm operator-(BinaryForm f, const BinaryForm& g) { return f -= g; }
    friend BinaryForm operator*(BinaryForm f, const S& s) { return f *= s; }
    friend BinaryForm operator*(const S& s, BinaryForm f) { return f *= s; }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        std::vector<S> out(f.coeffs_.size() + g.coeffs_.size() - 1, S(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (hyperaut::is_zero(f.coeffs_[i])) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                if (hyperaut::is_zero(g.coeffs_[j])) continue;
                out[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return BinaryForm(std::move(out));
    }

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            if (hyperaut::is_zero(coeffs_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs_[i] << ")";
            if (i > 0) os << "*X^" << i;
            if (degree() - i > 0) os << "*Z^" << (degree() - i);
        }
        if (first) os << "0";
        return os.str();
    }

   private:
    void require_same_degree(const BinaryForm& o) const {
        if (o.degree() != degree()) throw std::invalid_argument("binary forms of different degree");
    }

    std::vector<S> coeffs_;
};

/// d^(dx+dz) f / dX^dx dZ^dz. Returns the degree-0 zero form when dx + dz exceeds deg f.
template <class S>
BinaryForm<S> diff(const BinaryForm<S>& f, long dx, long dz) {
    if (dx < 0 || dz < 0) throw std::invalid_argument("negative derivative order");
    long d = f.degree();
    if (dx + dz > d) return BinaryForm<S>::zero(0);
    std::vector<S> out(static_cast<std::size_t>(d - dx - dz) + 1, S(0));
    for (long i = dx; i <= d - dz; ++i) {
        if (is_zero(f[i])) continue;
        Integer k = falling(i, dx) * falling(d - i, dz);
        out[i - dx] = f[i] * from_integer<S>(k);
    }
    return BinaryForm<S>(std::move(out));
}

enum class TransvectMode {
    Strict,       // reject r outside [0, min(deg f, deg g)]
    Derivative,   // higher derivatives vanish: out-of-range r yields the zero form
};

/// r-th transvectant (f, g)^r with the global prefactor (m-r)!(n-r)!/(n! m!), n = deg f, m = deg g.
template <class S>
BinaryForm<S> transvect(const BinaryForm<S>& f, const BinaryForm<S>& g, long r,
                        TransvectMode mode = TransvectMode::Strict) {
    long n = f.degree(), m = g.degree();
    if (r < 0 || r > std::min(n, m)) {
        if (mode == TransvectMode::Strict || r < 0) throw TransvectantIndexError(r, n, m);
        return BinaryForm<S>::zero(std::max(n + m - 2 * r, 0L));
    }
    BinaryForm<S> acc = BinaryForm<S>::zero(n + m - 2 * r);
    for (long k = 0; k <= r; ++k) {
        BinaryForm<S> df = diff(f, r - k, k);
        if (df.is_zero()) continue;
        BinaryForm<S> dg = diff(g, k, r - k);
        if (dg.is_zero()) continue;
        BinaryForm<S> term = df * dg;
        Integer c = binomial(r, k);
        if (k % 2) c = -c;
        acc += term * from_integer<S>(c);
    }
    Rational pre(factorial(m - r) * factorial(n - r), factorial(n) * factorial(m));
    pre.canonicalize();
    return acc * S(pre);
}

/// F(aX + bZ, cX + dZ).
template <class S>
BinaryForm<S> act(const MoebiusMap<S>& M, const BinaryForm<S>& f) {
    if (is_zero(M.det())) throw SingularMatrix();
    long d = f.degree();
    // powers of L1 = aX + bZ and L2 = cX + dZ as degree-k forms
    std::vector<BinaryForm<S>> p1, p2;
    p1.reserve(d + 1);
    p2.reserve(d + 1);
    p1.push_back(BinaryForm<S>::constant(S(1)));
    p2.push_back(BinaryForm<S>::constant(S(1)));
    BinaryForm<S> l1(std::vector<S>{M.b, M.a}), l2(std::vector<S>{M.d, M.c});
    for (long k = 1; k <= d; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BinaryForm<S> out = BinaryForm<S>::zero(d);
    for (long i = 0; i <= d; ++i) {
        if (is_zero(f[i])) continue;
        out += (p1[i] * p2[d - i]) * f[i];
    }
    return out;
}

/// Z^d p(X/Z) for a univariate coefficient list p (ascending powers).
template <class S>
BinaryForm<S> homogenize(const std::vector<S>& p, long d) {
    if (p.empty()) throw std::invalid_argument("empty polynomial");
    if (static_cast<long>(p.size()) - 1 > d) throw std::invalid_argument("polynomial degree exceeds target degree");
    std::vector<S> c(static_cast<std::size_t>(d) + 1, S(0));
    std::copy(p.begin(), p.end(), c.begin());
    return BinaryForm<S>(std::move(c));
}

/// Change of scalar type (e.g. Rational -> QuadExt).
template <class T, class S>
BinaryForm<T> convert(const BinaryForm<S>& f) {
    std::vector<T> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(T(x));
    return BinaryForm<T>(std::move(c));
}

}  // namespace hyperaut

#endif
