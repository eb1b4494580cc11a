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
   Branch points of Y^2 = F: certified complex roots (Aberth iteration, double
   warm start, MPFR refinement, Weierstrass inclusion discs) and exact
   recognition of roots lying in Q or a single quadratic field Q(sqrt m).
*/

#ifndef HYPERAUT_ROOTS_HPP
#define HYPERAUT_ROOTS_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "families.hpp"
#include "numeric.hpp"
#include "polyalg.hpp"

namespace hyperaut {

/// Projective point (x : z), normalized to (x : 1) or (1 : 0).
template <class S>
struct ProjPoint {
    S x, z;

    static ProjPoint infinity() { return {S(1), S(0)}; }
    static ProjPoint finite(const S& v) { return {v, S(1)}; }
    bool is_infinity() const { return is_zero(z); }
    ProjPoint normalized() const {
        if (is_zero(z)) return infinity();
        return {x / z, S(1)};
    }
    friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.x * q.z == q.x * p.z; }
};

struct CPoint {
    Complex x, z;

    std::complex<double> dx() const { return x.to_cdouble(); }
    std::complex<double> dz() const { return z.to_cdouble(); }
};

/// |x1 z2 - x2 z1| / (|v1| |v2|), a metric on P^1 bounded by 1.
inline BigFloat chordal(const CPoint& p, const CPoint& q) {
    Complex cross = p.x * q.z - q.x * p.z;
    BigFloat n1 = sqrt(cabs(p.x) * cabs(p.x) + cabs(p.z) * cabs(p.z));
    BigFloat n2 = sqrt(cabs(q.x) * cabs(q.x) + cabs(q.z) * cabs(q.z));
    return cabs(cross) / (n1 * n2);
}

inline double chordal(std::complex<double> x1, std::complex<double> z1, std::complex<double> x2,
                      std::complex<double> z2) {
    double n = std::sqrt((std::norm(x1) + std::norm(z1)) * (std::norm(x2) + std::norm(z2)));
    return std::abs(x1 * z2 - x2 * z1) / n;
}

inline Complex to_cvalue(const Rational& q, mpfr_prec_t prec) { return from_rational(q, prec); }
inline Complex to_cvalue(const QuadExt& q, mpfr_prec_t prec) { return to_complex(q, prec).value(); }

namespace detail {

inline Complex horner(const std::vector<Complex>& a, const Complex& z) {
    Complex acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) acc = acc * z + a[k];
    return acc;
}

inline std::vector<std::complex<double>> aberth_double(const std::vector<std::complex<double>>& a) {
    std::size_t n = a.size() - 1;
    double bound = 0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k] / a[n]));
    double r = 1 + bound;
    // start on a circle of radius ~ geometric mean of the root moduli
    double gm = std::pow(std::abs(a[0] / a[n]), 1.0 / static_cast<double>(n));
    if (!(gm > 0) || !std::isfinite(gm)) gm = 1;
    r = std::min(r, std::max(gm, 1e-3));
    std::vector<std::complex<double>> z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(r, 2 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4);
    auto eval = [&](std::complex<double> x, std::complex<double>& dp) {
        std::complex<double> p = a[n];
        dp = 0;
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * x + p;
            p = p * x + a[k];
        }
        return p;
    };
    for (int it = 0; it < 800; ++it) {
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> dp;
            std::complex<double> p = eval(z[i], dp);
            if (p == 0.0) continue;
            std::complex<double> w = p / dp;
            std::complex<double> s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> step = w / (1.0 - w * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

}  // namespace detail

struct CertifiedRoots {
    std::vector<Complex> roots;
    std::vector<BigFloat> radii;  // each root of the polynomial lies in exactly one disc
};

/// Roots of a univariate polynomial (ascending complex coefficients, nonzero leading term).
inline CertifiedRoots certified_roots(const std::vector<Complex>& a, mpfr_prec_t prec) {
    std::size_t n = a.size() - 1;
    if (n == 0) return {};
    std::vector<std::complex<double>> ad;
    for (const auto& c : a) ad.push_back(c.to_cdouble());
    std::vector<std::complex<double>> z0 = detail::aberth_double(ad);
    std::vector<Complex> z;
    for (auto v : z0) z.emplace_back(v, prec);

    std::vector<Complex> da;
    for (std::size_t k = 1; k <= n; ++k) da.push_back(a[k] * Complex(std::complex<double>(static_cast<double>(k), 0), prec));
    BigFloat eps = BigFloat::pow2(-static_cast<long>(prec) + 12, prec);
    for (int it = 0; it < 200; ++it) {
        BigFloat worst(prec);
        for (std::size_t i = 0; i < n; ++i) {
            Complex p = detail::horner(a, z[i]);
            if (p.is_zero()) continue;
            Complex dp = detail::horner(da, z[i]);
            Complex w = p / dp;
            Complex s(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) s += Complex(BigFloat(1.0, prec), BigFloat(prec)) / (z[i] - z[j]);
            Complex step = w / (Complex(BigFloat(1.0, prec), BigFloat(prec)) - w * s);
            z[i] -= step;
            BigFloat rel = cabs(step) / std::max(BigFloat(1.0, prec), cabs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) break;
    }

    CertifiedRoots out;
    out.roots = z;
    for (std::size_t i = 0; i < n; ++i) {
        Complex prod = a[n];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= z[i] - z[j];
        // Horner rounding bound: 2n ulp of sum |a_k| |z|^k
        BigFloat mag(prec), zp(1.0, prec);
        for (std::size_t k = 0; k <= n; ++k) {
            mag += cabs(a[k]) * zp;
            zp *= cabs(z[i]);
        }
        BigFloat rounding = mag * BigFloat(static_cast<double>(4 * n + 4), prec) * BigFloat::pow2(-static_cast<long>(prec), prec);
        BigFloat w = (cabs(detail::horner(a, z[i])) + rounding) / cabs(prod);
        BigFloat slack = cabs(z[i]) * BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
        out.radii.push_back(w * BigFloat(static_cast<double>(n), prec) + slack);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(cabs(z[i] - z[j]) > out.radii[i] + out.radii[j]))
                throw PrecisionError("root inclusion discs overlap at " + std::to_string(prec) + " bits");
    return out;
}

/// Continued-fraction recognition of a rational within `tol`; nullopt when no small-height candidate fits.
inline std::optional<Rational> recognize_rational(const BigFloat& x, const BigFloat& tol) {
    Rational X;
    mpfr_get_q(X.get_mpq_t(), x.get());
    Rational T;
    mpfr_get_q(T.get_mpq_t(), tol.get());
    if (sgn(T) <= 0) return std::nullopt;
    // denominators beyond ~1/sqrt(tol) are not determined by the approximation
    Rational bound_sq = 1 / T;
    Integer h0(1), h1(0), k0(0), k1(1);
    Rational r = X;
    for (int it = 0; it < 400; ++it) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        Integer h = a * h0 + h1, k = a * k0 + k1;
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        Rational c(h, k);
        c.canonicalize();
        if (Rational(k * k) * Rational(256) > bound_sq) return std::nullopt;
        if (abs(X - c) <= T) return c;
        Rational frac = r - Rational(a);
        if (sgn(frac) == 0) return std::nullopt;
        r = 1 / frac;
    }
    return std::nullopt;
}

/// Tries to express every root as an exact element of Q(sqrt m) with one common m.
/// `zc` are the roots of the conjugate polynomial (the same list when p is rational).
inline std::optional<std::pair<std::vector<QuadExt>, long>> recognize_roots(const Poly<QuadExt>& p,
                                                                           const CertifiedRoots& z,
                                                                           const CertifiedRoots& zc,
                                                                           long field_radicand,
                                                                           mpfr_prec_t prec) {
    long m = field_radicand;
    bool same_list = &z == &zc;
    std::vector<QuadExt> out;
    auto imag_small = [&](const Complex& v, const BigFloat& tol) { return abs(v.im) <= tol; };
    auto verify = [&](const QuadExt& c) {
        try {
            return is_zero(poly_eval(p, c));
        } catch (const RadicandMismatch&) {
            return false;
        }
    };
    BigFloat floor_tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
    for (std::size_t i = 0; i < z.roots.size(); ++i) {
        const Complex& zi = z.roots[i];
        BigFloat ti = z.radii[i] * BigFloat(4.0, prec) + floor_tol * BigFloat::pow2(-static_cast<long>(prec) / 4, prec);
        bool found = false;
        if (imag_small(zi, ti)) {
            if (auto q = recognize_rational(zi.re, ti); q && verify(QuadExt(*q))) {
                out.emplace_back(*q);
                found = true;
            }
        }
        for (std::size_t j = 0; !found && j < zc.roots.size(); ++j) {
            if (same_list && j == i) continue;
            const Complex& w = zc.roots[j];
            BigFloat tw = zc.radii[j] * BigFloat(4.0, prec);
            Complex s = zi + w, pr = zi * w;
            BigFloat ts = ti + tw;
            BigFloat tp = ti * cabs(w) + tw * cabs(zi) + ti * tw;
            if (!imag_small(s, ts) || !imag_small(pr, tp)) continue;
            auto rs = recognize_rational(s.re, ts);
            if (!rs) continue;
            auto rp = recognize_rational(pr.re, tp);
            if (!rp) continue;
            Rational disc = *rs * *rs - 4 * *rp;
            if (sgn(disc) == 0) continue;
            Integer nd = disc.get_num() * disc.get_den();
            if (abs(nd) > Integer("4611686018427387904")) continue;
            Integer sq;
            long core = squarefree_core(nd, sq);
            if (core == 1) continue;
            if (m != 1 && core != m) continue;
            Rational k(sq, disc.get_den());
            k.canonicalize();
            QuadExt c1(*rs / 2, k / 2, core), c2(*rs / 2, -k / 2, core);
            BigFloat d1 = cabs(to_cvalue(c1, prec) - zi), d2 = cabs(to_cvalue(c2, prec) - zi);
            QuadExt c = d1 < d2 ? c1 : c2;
            if (verify(c)) {
                out.push_back(c);
                m = core;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j]) return std::nullopt;
    return std::make_pair(std::move(out), m);
}

struct BranchSet {
    long genus = 0;
    bool exact = false;
    long radicand = 1;  // field of the exact points; 1 for Q
    mpfr_prec_t prec = 256;
    std::vector<ProjPoint<QuadExt>> exact_points;
    std::vector<CPoint> points;
    std::vector<BigFloat> radii;  // zero for exact points and infinity

    std::size_t size() const { return points.size(); }
};

/// All 2g+2 projective roots of F: exact in Q(sqrt m) when possible, otherwise certified approximations.
template <class S>
BranchSet branch_points(const HyperellipticCurve<S>& C, mpfr_prec_t prec = 256, bool try_exact = true) {
    const BinaryForm<S>& F = C.F();
    long g = C.genus();
    Poly<S> affine = dehomogenize(F);
    std::vector<Complex> a;
    for (const auto& c : affine) a.push_back(to_cvalue(c, prec));
    CertifiedRoots cr = certified_roots(a, prec);
    bool inf = poly_degree(affine) == 2 * g + 1;

    BranchSet B;
    B.genus = g;
    B.prec = prec;
    for (std::size_t i = 0; i < cr.roots.size(); ++i) {
        B.points.push_back({cr.roots[i], Complex(BigFloat(1.0, prec), BigFloat(prec))});
        B.radii.push_back(cr.radii[i]);
    }
    if (inf) {
        B.points.push_back({Complex(BigFloat(1.0, prec), BigFloat(prec)), Complex(prec)});
        B.radii.emplace_back(prec);
    }

    if (try_exact) {
        Poly<QuadExt> pq;
        long fm = 1;
        for (const auto& c : affine) {
            pq.push_back(QuadExt(c));
            if (radicand_of(pq.back()) != 1) fm = radicand_of(pq.back());
        }
        std::optional<std::pair<std::vector<QuadExt>, long>> rec;
        if (fm == 1) {
            rec = recognize_roots(pq, cr, cr, 1, prec);
        } else {
            std::vector<Complex> ac;
            for (const auto& c : pq) ac.push_back(to_cvalue(c.conj(), prec));
            CertifiedRoots crc = certified_roots(ac, prec);
            rec = recognize_roots(pq, cr, crc, fm, prec);
        }
        if (rec) {
            B.exact = true;
            B.radicand = rec->second;
            for (const auto& r : rec->first) B.exact_points.push_back(ProjPoint<QuadExt>::finite(r));
            if (inf) B.exact_points.push_back(ProjPoint<QuadExt>::infinity());
            for (std::size_t i = 0; i < rec->first.size(); ++i) {
                B.points[i].x = to_cvalue(rec->first[i], prec);
                B.radii[i] = BigFloat(prec);
            }
        }
    }
    return B;
}

}  // namespace hyperaut

#endif
