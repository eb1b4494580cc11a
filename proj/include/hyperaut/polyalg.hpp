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
   Dense univariate polynomials over an exact field: Euclidean division, gcd,
   squarefree tests and interpolation.
*/

#ifndef HYPERAUT_POLYALG_HPP
#define HYPERAUT_POLYALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "binform.hpp"
#include "exactnum.hpp"

namespace hyperaut {

/// Coefficients ascending in the variable; the zero polynomial is empty after trimming.
template <class S>
using Poly = std::vector<S>;

template <class S>
void trim(Poly<S>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

/// -1 for the zero polynomial.
template <class S>
long poly_degree(const Poly<S>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (!is_zero(p[i])) return i;
    return -1;
}

template <class S>
Poly<S> poly_add(const Poly<S>& p, const Poly<S>& q) {
    Poly<S> r(std::max(p.size(), q.size()), S(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    trim(r);
    return r;
}

template <class S>
Poly<S> poly_sub(const Poly<S>& p, const Poly<S>& q) {
    Poly<S> r(std::max(p.size(), q.size()), S(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
    trim(r);
    return r;
}

template <class S>
Poly<S> poly_scale(const Poly<S>& p, const S& s) {
    Poly<S> r(p);
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

template <class S>
Poly<S> poly_mul(const Poly<S>& p, const Poly<S>& q) {
    if (p.empty() || q.empty()) return {};
    Poly<S> r(p.size() + q.size() - 1, S(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (is_zero(p[i])) continue;
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    trim(r);
    return r;
}

template <class S>
S poly_eval(const Poly<S>& p, const S& x) {
    S acc(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

template <class S>
Poly<S> poly_derivative(const Poly<S>& p) {
    Poly<S> r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * S(Rational(static_cast<long>(i))));
    trim(r);
    return r;
}

/// Quotient and remainder; divisor must be nonzero.
template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(Poly<S> p, Poly<S> q) {
    trim(p);
    trim(q);
    if (q.empty()) throw DivisionByZero();
    long dq = static_cast<long>(q.size()) - 1;
    if (static_cast<long>(p.size()) - 1 < dq) return {Poly<S>{}, p};
    Poly<S> quo(p.size() - q.size() + 1, S(0));
    S lead_inv = S(1) / q.back();
    for (long k = static_cast<long>(p.size()) - 1; k >= dq; --k) {
        if (is_zero(p[k])) continue;
        S c = p[k] * lead_inv;
        quo[k - dq] = c;
        for (long j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    p.resize(static_cast<std::size_t>(dq));
    trim(p);
    trim(quo);
    return {quo, p};
}

template <class S>
Poly<S> poly_monic(const Poly<S>& p) {
    Poly<S> r(p);
    trim(r);
    if (r.empty()) return r;
    S inv = S(1) / r.back();
    for (auto& c : r) c *= inv;
    return r;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class S>
Poly<S> poly_gcd(Poly<S> p, Poly<S> q) {
    trim(p);
    trim(q);
    while (!q.empty()) {
        Poly<S> r = poly_divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
        if (!q.empty()) q = poly_monic(q);
    }
    return poly_monic(p);
}

template <class S>
bool poly_is_squarefree(const Poly<S>& p) {
    if (poly_degree(p) <= 0) return poly_degree(p) == 0;
    return poly_degree(poly_gcd(p, poly_derivative(p))) == 0;
}

/// Unique polynomial of degree < n through n points with distinct abscissae (Newton form).
template <class S>
Poly<S> interpolate(const std::vector<S>& xs, const std::vector<S>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation data of unequal length");
    std::size_t n = xs.size();
    std::vector<S> dd(ys);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            S den = xs[i] - xs[i - k];
            if (is_zero(den)) throw std::invalid_argument("repeated interpolation node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == k) break;
        }
    Poly<S> result;
    for (std::size_t k = n; k-- > 0;) {
        // result = result * (x - xs[k]) + dd[k]
        Poly<S> shifted(result.size() + 1, S(0));
        for (std::size_t i = 0; i < result.size(); ++i) {
            shifted[i + 1] += result[i];
            shifted[i] -= result[i] * xs[k];
        }
        if (shifted.empty()) shifted.push_back(S(0));
        shifted[0] += dd[k];
        trim(shifted);
        result = std::move(shifted);
    }
    return result;
}

/// F(X, 1) as a univariate polynomial.
template <class S>
Poly<S> dehomogenize(const BinaryForm<S>& f) {
    Poly<S> p(f.coeffs());
    trim(p);
    return p;
}

/// No repeated projective root: at most a simple root at infinity and a squarefree affine part.
template <class S>
bool is_squarefree_form(const BinaryForm<S>& f) {
    long d = f.degree();
    if (d < 1) return false;
    Poly<S> p = dehomogenize(f);
    long dp = poly_degree(p);
    if (dp < d - 1) return false;
    return poly_is_squarefree(p) || dp == 0;
}

}  // namespace hyperaut

#endif
