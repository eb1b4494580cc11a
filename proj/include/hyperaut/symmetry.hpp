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
   Independent route to the automorphism group: the Moebius maps permuting the
   branch points, the isomorphism type of that reduced group, its orbit data
   and the lift census, matched against the registry.
*/

#ifndef HYPERAUT_SYMMETRY_HPP
#define HYPERAUT_SYMMETRY_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "binform.hpp"
#include "families.hpp"
#include "registry.hpp"
#include "roots.hpp"

namespace hyperaut {

struct OracleOptions {
    mpfr_prec_t prec = 256;
    long tol_bits = 128;
    bool allow_exact = true;
    std::array<int, 3> base{0, 1, 2};  // branch points used as the source frame
    bool recheck = true;               // approximate mode: rerun at doubled precision
};

/// Numeric 2x2 matrix acting on (x : z).
struct CMat {
    Complex a, b, c, d;

    const Complex& at(int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
    friend CMat operator*(const CMat& m, const CMat& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    CPoint apply(const CPoint& p) const { return {a * p.x + b * p.z, c * p.x + d * p.z}; }
    std::array<std::complex<double>, 4> to_cdouble() const {
        return {a.to_cdouble(), b.to_cdouble(), c.to_cdouble(), d.to_cdouble()};
    }
};

inline CMat to_cmat(const MoebiusMap<QuadExt>& m, mpfr_prec_t prec) {
    return {to_cvalue(m.a, prec), to_cvalue(m.b, prec), to_cvalue(m.c, prec), to_cvalue(m.d, prec)};
}

namespace detail {

inline int argmax_entry(const CMat& m) {
    int k = 0;
    BigFloat best = cabs(m.a);
    for (int i = 1; i < 4; ++i)
        if (cabs(m.at(i)) > best) {
            best = cabs(m.at(i));
            k = i;
        }
    return k;
}

/// Distance between the projective classes, both scaled at the largest entry of m.
inline BigFloat projective_distance(const CMat& m, const CMat& n) {
    int k = argmax_entry(m);
    BigFloat nk = cabs(n.at(k));
    if (nk.is_zero()) return BigFloat(1.0, m.a.prec());
    BigFloat worst(m.a.prec());
    for (int i = 0; i < 4; ++i) {
        BigFloat e = cabs(m.at(i) / m.at(k) - n.at(i) / n.at(k));
        if (e > worst) worst = e;
    }
    return worst;
}

inline bool is_scalar(const CMat& m, const BigFloat& tol) {
    BigFloat s = std::max(cabs(m.a), cabs(m.d));
    return cabs(m.b) <= tol * s && cabs(m.c) <= tol * s && cabs(m.a - m.d) <= tol * s;
}

/// Matrix with columns alpha*v1, beta*v2 where v3 = alpha*v1 + beta*v2: sends (1:0), (0:1), (1:1) to v1, v2, v3.
template <class T>
std::array<T, 4> frame(const T& x1, const T& z1, const T& x2, const T& z2, const T& x3, const T& z3) {
    T det = x1 * z2 - x2 * z1;
    T al = (x3 * z2 - x2 * z3) / det;
    T be = (x1 * z3 - x3 * z1) / det;
    return {al * x1, be * x2, al * z1, be * z2};
}

template <class T>
std::array<T, 4> mul(const std::array<T, 4>& m, const std::array<T, 4>& n) {
    return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2],
            m[2] * n[1] + m[3] * n[3]};
}

template <class T>
std::array<T, 4> adj(const std::array<T, 4>& m) {
    return {m[3], T() - m[1], T() - m[2], m[0]};
}

inline std::array<Complex, 4> adj(const std::array<Complex, 4>& m) { return {m[3], -m[1], -m[2], m[0]}; }

inline Complex one(mpfr_prec_t prec) { return Complex(BigFloat(1.0, prec), BigFloat(prec)); }

/// F(x, z) for a form with complex coefficients.
inline Complex eval_form(const std::vector<Complex>& f, const Complex& x, const Complex& z) {
    std::size_t d = f.size() - 1;
    mpfr_prec_t prec = x.re.prec();
    std::vector<Complex> zp(d + 1, one(prec));
    for (std::size_t i = 1; i <= d; ++i) zp[i] = zp[i - 1] * z;
    Complex acc(prec), xp = one(prec);
    for (std::size_t i = 0; i <= d; ++i) {
        acc += f[i] * xp * zp[d - i];
        xp *= x;
    }
    return acc;
}

inline Complex csqrt(const Complex& z) {
    BigFloat r = cabs(z);
    BigFloat two(2.0, z.re.prec());
    BigFloat re = sqrt((r + z.re) / two);
    BigFloat im = sqrt(abs((r - z.re) / two));
    if (z.im.sign() < 0) im = -im;
    return {re, im};
}

}  // namespace detail

/// One element of the reduced automorphism group.
struct Symmetry {
    CMat m;                                    // numeric at the working precision
    std::optional<MoebiusMap<QuadExt>> exact;  // present in exact mode
    long order = 1;
    std::array<long, 2> lift_orders{1, 2};
    std::vector<CPoint> fixed;  // empty for the identity
};

struct SymmetryGroup {
    long genus = 0;
    bool exact = false;
    long radicand = 1;
    mpfr_prec_t prec = 256;
    long tol_bits = 128;
    std::vector<Symmetry> elements;  // elements[0] is the identity
    BranchSet branch;

    long order() const { return static_cast<long>(elements.size()); }
    BigFloat tol() const { return BigFloat::pow2(-tol_bits, prec); }
};

namespace detail {

inline std::vector<std::array<std::complex<double>, 2>> unit_points(const BranchSet& B) {
    std::vector<std::array<std::complex<double>, 2>> out;
    for (const auto& p : B.points) {
        std::complex<double> x = p.dx(), z = p.dz();
        double n = std::sqrt(std::norm(x) + std::norm(z));
        out.push_back({x / n, z / n});
    }
    return out;
}

/// Cheap double-precision screen: does m send every branch point near some branch point?
inline bool prefilter(const std::array<std::complex<double>, 4>& m,
                      const std::vector<std::array<std::complex<double>, 2>>& pts, double tol) {
    for (const auto& p : pts) {
        std::complex<double> x = m[0] * p[0] + m[1] * p[1], z = m[2] * p[0] + m[3] * p[1];
        bool hit = false;
        for (const auto& q : pts)
            if (chordal(x, z, q[0], q[1]) < tol) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline bool permutes_exact(const MoebiusMap<QuadExt>& m, const BranchSet& B) {
    for (const auto& p : B.exact_points) {
        ProjPoint<QuadExt> img{m.a * p.x + m.b * p.z, m.c * p.x + m.d * p.z};
        bool hit = false;
        for (const auto& q : B.exact_points)
            if (img == q) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline bool permutes_approx(const CMat& m, const BranchSet& B, const BigFloat& tol) {
    std::vector<bool> used(B.size(), false);
    for (const auto& p : B.points) {
        CPoint img = m.apply(p);
        bool hit = false;
        for (std::size_t j = 0; j < B.size(); ++j)
            if (!used[j] && chordal(img, B.points[j]) < tol) {
                used[j] = hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline std::vector<CPoint> fixed_points(const CMat& m) {
    // roots of c x^2 + (d - a) x z - b z^2, in the cancellation-free form (q : c), (-b : q)
    mpfr_prec_t prec = m.a.prec();
    Complex B = m.d - m.a;
    Complex s = csqrt(B * B + Complex(BigFloat(4.0, prec), BigFloat(prec)) * m.b * m.c);
    Complex half(BigFloat(0.5, prec), BigFloat(prec));
    Complex q1 = -(B + s) * half, q2 = -(B - s) * half;
    Complex q = cabs(q1) >= cabs(q2) ? q1 : q2;
    if (q.is_zero()) return {};
    return {{q, m.c}, {-m.b, q}};
}

}  // namespace detail

/// Every Moebius map permuting the branch points, as a closed group with orders, lifts and fixed points.
template <class S>
SymmetryGroup moebius_symmetries(const HyperellipticCurve<S>& C, const BranchSet& B, const OracleOptions& opt = {}) {
    if (opt.tol_bits <= 0 || opt.tol_bits + 32 > static_cast<long>(opt.prec))
        throw std::invalid_argument("tolerance must be positive and at least 32 bits below the precision");
    const mpfr_prec_t prec = opt.prec;
    const std::size_t nb = B.size();
    const long g = C.genus();
    SymmetryGroup G;
    G.genus = g;
    G.prec = prec;
    G.tol_bits = opt.tol_bits;
    G.branch = B;
    G.exact = B.exact && opt.allow_exact;
    G.radicand = G.exact ? B.radicand : 1;
    BigFloat tol = G.tol();

    std::array<int, 3> base = opt.base;
    for (int b : base)
        if (b < 0 || static_cast<std::size_t>(b) >= nb) throw std::invalid_argument("base index out of range");
    if (base[0] == base[1] || base[0] == base[2] || base[1] == base[2])
        throw std::invalid_argument("base indices must be distinct");

    auto pts = detail::unit_points(B);
    double sep = 1;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
            sep = std::min(sep, chordal(pts[i][0], pts[i][1], pts[j][0], pts[j][1]));
    bool screen = sep > 1e-5;
    double screen_tol = std::min(1e-6, sep / 4);

    auto dframe = [&](int i, int j, int k) {
        return detail::frame(pts[i][0], pts[i][1], pts[j][0], pts[j][1], pts[k][0], pts[k][1]);
    };
    auto src_d = detail::adj(dframe(base[0], base[1], base[2]));

    std::array<QuadExt, 4> src_e;
    std::array<Complex, 4> src_c;
    auto eframe = [&](int i, int j, int k) {
        const auto& P = B.exact_points;
        return detail::frame(P[i].x, P[i].z, P[j].x, P[j].z, P[k].x, P[k].z);
    };
    auto cframe = [&](int i, int j, int k) {
        const auto& P = B.points;
        return detail::frame(P[i].x, P[i].z, P[j].x, P[j].z, P[k].x, P[k].z);
    };
    if (G.exact) {
        auto f = eframe(base[0], base[1], base[2]);
        src_e = {f[3], -f[1], -f[2], f[0]};
    } else {
        src_c = detail::adj(cframe(base[0], base[1], base[2]));
    }

    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                if (k == i || k == j) continue;
                if (screen && !detail::prefilter(detail::mul(dframe(i, j, k), src_d), pts, screen_tol)) continue;
                Symmetry s;
                if (G.exact) {
                    auto m = detail::mul(eframe(i, j, k), src_e);
                    MoebiusMap<QuadExt> M(m[0], m[1], m[2], m[3]);
                    if (!detail::permutes_exact(M, B)) continue;
                    s.exact = M.normalized();
                    s.m = to_cmat(*s.exact, prec);
                } else {
                    auto m = detail::mul(cframe(i, j, k), src_c);
                    s.m = {m[0], m[1], m[2], m[3]};
                    if (!detail::permutes_approx(s.m, B, tol)) continue;
                }
                G.elements.push_back(std::move(s));
            }
        }
    if (G.elements.empty()) throw std::logic_error("identity map not found among the branch point symmetries");

    // the identity first
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        if (detail::is_scalar(G.elements[i].m, tol)) {
            std::swap(G.elements[0], G.elements[i]);
            break;
        }
    if (!detail::is_scalar(G.elements[0].m, tol)) throw std::logic_error("identity map not found");

    if (!G.exact) {
        BigFloat coarse = BigFloat::pow2(-opt.tol_bits / 2, prec);
        for (std::size_t i = 0; i < G.elements.size(); ++i)
            for (std::size_t j = i + 1; j < G.elements.size(); ++j)
                if (chordal(G.elements[i].m.a.to_cdouble(), G.elements[i].m.c.to_cdouble(), G.elements[j].m.a.to_cdouble(),
                            G.elements[j].m.c.to_cdouble()) < 1e-6 &&
                    detail::projective_distance(G.elements[i].m, G.elements[j].m) < coarse)
                    throw PrecisionError("tolerance too coarse: two candidate maps are indistinguishable");
    }

    // closure, checked on double-precision normalized matrices
    using DMat = std::array<std::complex<double>, 4>;
    auto dnorm = [](DMat m) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < 4; ++i)
            if (std::abs(m[i]) > std::abs(m[k])) k = i;
        std::complex<double> s = m[k];
        for (auto& x : m) x /= s;
        return m;
    };
    std::vector<DMat> dm;
    for (const auto& e : G.elements) dm.push_back(dnorm(e.m.to_cdouble()));
    auto dfind = [&](const DMat& m) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < 4; ++i)
            if (std::abs(m[i]) > std::abs(m[k])) k = i;
        for (const auto& q : dm) {
            if (std::abs(q[k]) < 1e-3) continue;
            double worst = 0;
            for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(m[i] / m[k] - q[i] / q[k]));
            if (worst < 1e-8) return true;
        }
        return false;
    };
    for (const auto& x : dm)
        for (const auto& y : dm)
            if (!dfind(dnorm(detail::mul(x, y)))) throw std::logic_error("branch point symmetries are not closed under composition");

    // orders, lift census, fixed points
    std::vector<Complex> fc;
    for (const auto& c : C.F().coeffs()) fc.push_back(to_cvalue(c, prec));
    BinaryForm<QuadExt> Fq;
    if (G.exact) {
        std::vector<QuadExt> q;
        for (const auto& c : C.F().coeffs()) q.emplace_back(c);
        Fq = BinaryForm<QuadExt>(std::move(q));
    }
    const long max_order = 2 * (2 * g + 1);
    for (std::size_t idx = 0; idx < G.elements.size(); ++idx) {
        Symmetry& s = G.elements[idx];
        if (idx == 0) continue;
        long k = 0;
        bool lift_same = false;
        if (G.exact) {
            MoebiusMap<QuadExt> P = *s.exact;
            for (k = 1; k <= max_order; ++k) {
                if (is_zero(P.b) && is_zero(P.c) && P.a == P.d) break;
                P = P * *s.exact;
            }
            if (k > max_order) throw std::logic_error("symmetry of unbounded order");
            QuadExt mu = P.a;
            BinaryForm<QuadExt> img = act(*s.exact, Fq);
            std::size_t lead = 0;
            while (is_zero(Fq[lead])) ++lead;
            QuadExt c = img[lead] / Fq[lead];
            if (!(img == Fq * c)) throw std::logic_error("branch point symmetry does not rescale the form");
            if (k % 2 == 0) lift_same = power(c, k / 2) == power(mu, g + 1);
        } else {
            CMat P = s.m;
            for (k = 1; k <= max_order; ++k) {
                if (detail::is_scalar(P, tol)) break;
                P = P * s.m;
            }
            if (k > max_order) throw PrecisionError("element order not resolved within the Wiman bound");
            Complex mu = P.a;
            if (k % 2 == 0) {
                // c from F(M v) = c F(v) at a well-conditioned sample point
                Complex best_c(prec);
                BigFloat best(prec);
                const std::complex<double> samples[] = {{0.31, 0.73}, {-0.62, 0.21}, {1.37, -0.94}, {-0.17, -1.41}};
                for (auto x0d : samples) {
                    Complex x0(x0d, prec), z0 = detail::one(prec);
                    Complex fv = detail::eval_form(fc, x0, z0);
                    CPoint im = s.m.apply({x0, z0});
                    BigFloat score = cabs(fv);
                    if (score > best) {
                        best = score;
                        best_c = detail::eval_form(fc, im.x, im.z) / fv;
                    }
                }
                Complex lhs = detail::one(prec), rhs = detail::one(prec);
                for (long e = 0; e < k / 2; ++e) lhs *= best_c;
                for (long e = 0; e <= g; ++e) rhs *= mu;
                lift_same = cabs(lhs - rhs) <= BigFloat::pow2(-opt.tol_bits / 2, prec) * cabs(rhs);
            }
        }
        s.order = k;
        if (k % 2) s.lift_orders = {k, 2 * k};
        else if (lift_same) s.lift_orders = {k, k};
        else s.lift_orders = {2 * k, 2 * k};
        s.fixed = detail::fixed_points(s.m);
    }
    return G;
}

/// Isomorphism type of a finite subgroup of PGL2 from its element orders.
inline ReducedType identify_kind(const std::vector<long>& orders) {
    long N = static_cast<long>(orders.size());
    std::map<long, long> census;
    long mx = 1;
    for (long o : orders) {
        ++census[o];
        mx = std::max(mx, o);
    }
    auto has_census = [&](const std::map<long, long>& want) { return census == want; };
    if (N == 1) return {ReducedKind::Trivial, 1};
    if (mx == N) return {ReducedKind::Cyclic, N};
    if (N % 2 == 0 && mx == N / 2) {
        long n = N / 2;
        if (census[2] == n + (n % 2 == 0 ? 1 : 0)) return {ReducedKind::Dihedral, n};
    }
    if (N == 12 && has_census({{1, 1}, {2, 3}, {3, 8}})) return {ReducedKind::A4, 1};
    if (N == 24 && has_census({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) return {ReducedKind::S4, 1};
    if (N == 60 && has_census({{1, 1}, {2, 15}, {3, 20}, {5, 24}})) return {ReducedKind::A5, 1};
    throw std::logic_error("element orders do not form a finite subgroup of PGL2 of order " + std::to_string(N));
}

struct OrbitInfo {
    long size = 0;
    long stabilizer = 1;  // order in the reduced group
    bool in_branch_set = false;
};

struct OracleEvidence {
    bool exact = false;
    long radicand = 1;
    long precision = 0;
    long tol_bits = 0;
    std::map<long, long> element_orders;  // reduced group: order -> count
    std::vector<OrbitInfo> orbits;        // special orbits
    long free_branch_orbits = 0;
    std::vector<std::pair<long, long>> markers;  // non-generic (cycle length, count)
    long delta = 0;
    std::vector<std::string> candidates;
    std::vector<int> matched_rows;
    long involutions_observed = 1;
    std::optional<long> involutions_tabulated;
    long max_lift_order = 2;
    bool bounds_ok = true;
};

struct GroupVerdict {
    ReducedType reduced;
    std::string full_name;
    long order = 2;
    bool determined = true;
    OracleEvidence evidence;
};

class NoMatchingRow : public std::runtime_error {
   public:
    NoMatchingRow(const std::string& what, OracleEvidence ev) : std::runtime_error(what), evidence(std::move(ev)) {}
    OracleEvidence evidence;
};

namespace detail {

inline std::vector<std::pair<long, long>> non_generic(std::vector<std::pair<long, long>> m, long order) {
    std::vector<std::pair<long, long>> out;
    for (const auto& x : m)
        if (!(x.first == 2 && x.second == order / 2)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Reduced type, orbit data, lift census and registry match of a symmetry group.
inline GroupVerdict full_group_name(const SymmetryGroup& G) {
    GroupVerdict V;
    OracleEvidence& ev = V.evidence;
    ev.exact = G.exact;
    ev.radicand = G.radicand;
    ev.precision = static_cast<long>(G.prec);
    ev.tol_bits = G.tol_bits;

    std::vector<long> orders;
    for (const auto& s : G.elements) {
        orders.push_back(s.order);
        ++ev.element_orders[s.order];
    }
    V.reduced = identify_kind(orders);
    const long N = G.order();
    V.order = 2 * N;
    const long g = G.genus;
    BigFloat tol = BigFloat::pow2(-G.tol_bits / 2, G.prec);

    // special points and their orbits
    std::vector<CPoint> special;
    for (const auto& s : G.elements)
        for (const auto& p : s.fixed) {
            bool seen = false;
            for (const auto& q : special)
                if (chordal(p, q) < tol) {
                    seen = true;
                    break;
                }
            if (!seen) special.push_back(p);
        }
    auto in_branch = [&](const CPoint& p) {
        for (const auto& q : G.branch.points)
            if (chordal(p, q) < tol) return true;
        return false;
    };
    std::vector<bool> done(special.size(), false);
    long special_in_b = 0;
    for (std::size_t i = 0; i < special.size(); ++i) {
        if (done[i]) continue;
        OrbitInfo o;
        for (const auto& s : G.elements) {
            CPoint img = s.m.apply(special[i]);
            if (chordal(img, special[i]) < tol) ++o.stabilizer;
            for (std::size_t j = 0; j < special.size(); ++j)
                if (!done[j] && chordal(img, special[j]) < tol) {
                    done[j] = true;
                    ++o.size;
                }
        }
        --o.stabilizer;  // counted the identity twice
        o.in_branch_set = in_branch(special[i]);
        if (o.size * o.stabilizer != N) throw PrecisionError("orbit-stabilizer count failed for a special point");
        if (o.in_branch_set) special_in_b += o.size;
        ev.orbits.push_back(o);
    }
    long free_pts = static_cast<long>(G.branch.size()) - special_in_b;
    if (free_pts % N != 0) throw PrecisionError("free branch points do not split into regular orbits");
    ev.free_branch_orbits = free_pts / N;
    ev.delta = static_cast<long>(ev.orbits.size()) + ev.free_branch_orbits - 3;

    std::vector<std::pair<long, long>> raw;
    for (const auto& o : ev.orbits) {
        long e = o.in_branch_set ? 2 * o.stabilizer : o.stabilizer;
        raw.emplace_back(e, V.order / e);
    }
    ev.markers = detail::non_generic(raw, V.order);

    long inv = 1, mx = 2;
    for (const auto& s : G.elements) {
        if (s.order == 2 && s.lift_orders[0] == 2) inv += 2;
        mx = std::max({mx, s.lift_orders[0], s.lift_orders[1]});
    }
    ev.involutions_observed = inv;
    ev.max_lift_order = mx;
    ev.bounds_ok = bounds_check(g, V.order, mx);

    if (V.reduced.kind == ReducedKind::Trivial) {
        V.full_name = "Z2";
        ev.candidates = {"Z2"};
        return V;
    }

    std::vector<Table1Entry> hits;
    for (const auto& e : table1_lookup(g, {std::nullopt, V.reduced})) {
        if (e.delta != ev.delta) continue;
        std::vector<std::pair<long, long>> m(e.markers.begin(), e.markers.end());
        if (detail::non_generic(m, e.order) != ev.markers) continue;
        hits.push_back(e);
    }
    std::set<std::string> names;
    for (const auto& e : hits) {
        names.insert(e.name);
        ev.matched_rows.push_back(e.row->index);
    }
    if (names.size() > 1) {
        // the involution count separates rows whose tabulated value is specific to them
        std::vector<Table1Entry> narrowed;
        for (const auto& e : hits)
            if (e.involutions && !e.row->involutions_merged && *e.involutions == inv) narrowed.push_back(e);
        std::set<std::string> nn;
        for (const auto& e : narrowed) nn.insert(e.name);
        if (nn.size() == 1) {
            names = nn;
            hits = narrowed;
        }
    }
    ev.candidates.assign(names.begin(), names.end());
    if (names.empty()) {
        std::string msg = "no registry row matches reduced group " + V.reduced.str() + " with delta " +
                          std::to_string(ev.delta) + " at genus " + std::to_string(g);
        throw NoMatchingRow(msg, ev);
    }
    if (names.size() == 1) {
        V.full_name = *names.begin();
        if (hits.front().involutions && !hits.front().row->involutions_merged)
            ev.involutions_tabulated = hits.front().involutions;
    } else {
        V.determined = false;
        std::string s = "undetermined among {";
        bool first = true;
        for (const auto& n : names) {
            s += (first ? "" : ", ") + n;
            first = false;
        }
        V.full_name = s + "}";
    }
    return V;
}

struct OracleResult {
    SymmetryGroup group;
    GroupVerdict verdict;
};

/// Full oracle run; approximate results are confirmed at doubled precision and tolerance.
template <class S>
OracleResult symmetry_oracle(const HyperellipticCurve<S>& C, const OracleOptions& opt = {}) {
    BranchSet B = branch_points(C, opt.prec, opt.allow_exact);
    SymmetryGroup G = moebius_symmetries(C, B, opt);
    GroupVerdict V = full_group_name(G);
    if (!G.exact && opt.recheck) {
        OracleOptions o2 = opt;
        o2.prec = opt.prec * 2;
        o2.tol_bits = opt.tol_bits * 2;
        o2.recheck = false;
        BranchSet B2 = branch_points(C, o2.prec, false);
        GroupVerdict V2 = full_group_name(moebius_symmetries(C, B2, o2));
        if (!(V2.reduced == V.reduced) || V2.full_name != V.full_name || V2.order != V.order)
            throw PrecisionError("verdict changed when the precision was doubled");
    }
    return {std::move(G), std::move(V)};
}

}  // namespace hyperaut

#endif
