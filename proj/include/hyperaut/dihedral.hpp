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
   Normal decompositions Y^2 = F(X^n) or Y^2 = X F(X^n), dihedral invariants
   and the genus-2 classification by (u1, u2).

   Normalization X -> gamma X makes the inner form monic with constant term 1:
   a_i = c_i gamma^(n(t-i)) with c_i = h_(t-i) / h_0 and gamma^(nt) = h_0 / h_t.
   Invariant monomials only involve gamma^(nt), which is substituted exactly.
*/

#ifndef HYPERAUT_DIHEDRAL_HPP
#define HYPERAUT_DIHEDRAL_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symmetry.hpp"

namespace hyperaut {

class DihedralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Square root inside Q or Q(sqrt m); `context` is the radicand already in use (1 for none).
inline std::optional<QuadExt> quad_sqrt(const QuadExt& x, long context = 1) {
    if (is_zero(x)) return QuadExt(0);
    if (x.is_rational()) {
        Rational r;
        if (rational_root(x.a(), 2, r)) return QuadExt(r);
        Integer nd = x.a().get_num() * x.a().get_den();
        if (abs(nd) > Integer("4611686018427387904")) return std::nullopt;
        Integer sq;
        long core = squarefree_core(nd, sq);
        if (context != 1 && core != context) return std::nullopt;
        Rational k(sq, x.a().get_den());
        k.canonicalize();
        return QuadExt(Rational(0), k, core);
    }
    long m = x.radicand();
    if (context != 1 && context != m) return std::nullopt;
    Rational norm = x.a() * x.a() - Rational(m) * x.b() * x.b(), n;
    if (!rational_root(norm, 2, n)) return std::nullopt;
    for (int sgn_n : {1, -1}) {
        Rational c2 = (x.a() + sgn_n * n) / 2, c;
        if (sgn(c2) == 0 || !rational_root(c2, 2, c)) continue;
        QuadExt r(c, x.b() / (2 * c), m);
        if (r * r == x) return r;
    }
    return std::nullopt;
}

enum class DecompositionKind { EvenPart, OddPart };

inline std::string to_string(DecompositionKind k) { return k == DecompositionKind::EvenPart ? "F(X^n)" : "X*F(X^n)"; }

struct NormalDecomposition {
    DecompositionKind kind = DecompositionKind::EvenPart;
    long genus = 0;
    long n = 2;
    long t = 1;
    long degree_s = 2;
    bool exact = true;
    // inner form sum h_k X^(nk), k = 0..t, after the witness change of coordinates
    std::vector<QuadExt> h;
    std::vector<Complex> h_approx;  // numeric route only
    std::optional<MoebiusMap<QuadExt>> witness_map;

    long nt() const { return n * t; }
    long delta() const { return t - 1; }

    /// gamma^(nt) = h_0 / h_t
    QuadExt rho() const { return h.front() / h.back(); }
    /// c_i = h_(t-i) / h_0, i = 0..t
    QuadExt c(long i) const { return h[t - i] / h.front(); }

    /// Normalized (a_1, ..., a_(t-1)) when gamma can be taken in the scalar field (e.g. h_0 = h_t).
    std::optional<std::vector<QuadExt>> coeffs() const {
        if (!exact) return std::nullopt;
        auto g = gamma();
        if (!g) return std::nullopt;
        std::vector<QuadExt> out;
        for (long i = 1; i < t; ++i) out.push_back(c(i) * power(*g, n * (t - i)));
        return out;
    }

    /// An exact nt-th root of rho, when one exists over Q.
    std::optional<QuadExt> gamma() const {
        QuadExt r = rho();
        if (r == QuadExt(1)) return QuadExt(1);
        if (!r.is_rational()) return std::nullopt;
        Rational q;
        if (rational_root(r.a(), static_cast<unsigned long>(nt()), q)) return QuadExt(q);
        return std::nullopt;
    }
};

/// Reads a decomposition off a form whose coefficients are supported on X^(r + nk), r in {0, 1}.
template <class S>
std::optional<NormalDecomposition> read_decomposition(const BinaryForm<S>& F, long n) {
    long d = F.degree();
    if (n < 2 || d < 6 || d % 2) return std::nullopt;
    long r = !is_zero(F[0]) ? 0 : (!is_zero(F[1]) ? 1 : -1);
    if (r < 0) return std::nullopt;
    long top = -1;
    for (long i = 0; i <= d; ++i) {
        if (is_zero(F[i])) continue;
        if ((i - r) % n != 0) return std::nullopt;
        top = i;
    }
    long t = (top - r) / n;
    if (t < 1) return std::nullopt;
    NormalDecomposition D;
    D.kind = r == 0 ? DecompositionKind::EvenPart : DecompositionKind::OddPart;
    D.genus = d / 2 - 1;
    D.n = D.degree_s = n;
    D.t = t;
    for (long k = 0; k <= t; ++k) D.h.push_back(QuadExt(F[r + n * k]));
    return D;
}

namespace detail {

/// Coefficients of F(aX + bZ, cX + dZ) for complex data.
inline std::vector<Complex> act_numeric(const std::array<Complex, 4>& m, const std::vector<Complex>& f) {
    std::size_t d = f.size() - 1;
    mpfr_prec_t prec = m[0].re.prec();
    auto mul = [&](const std::vector<Complex>& p, const std::vector<Complex>& q) {
        std::vector<Complex> r(p.size() + q.size() - 1, Complex(prec));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    // linear forms as coefficient lists in X (Z implicit)
    std::vector<Complex> l1{m[1], m[0]}, l2{m[3], m[2]};
    std::vector<std::vector<Complex>> p1{{one(prec)}}, p2{{one(prec)}};
    for (std::size_t k = 1; k <= d; ++k) {
        p1.push_back(mul(p1.back(), l1));
        p2.push_back(mul(p2.back(), l2));
    }
    std::vector<Complex> out(d + 1, Complex(prec));
    for (std::size_t i = 0; i <= d; ++i) {
        auto term = mul(p1[i], p2[d - i]);
        for (std::size_t k = 0; k <= d; ++k) out[k] += term[k] * f[i];
    }
    return out;
}

inline Complex cpow(Complex x, long e) {
    Complex r = one(x.re.prec());
    for (long k = 0; k < e; ++k) r *= x;
    return r;
}

}  // namespace detail

struct DihedralTuple {
    long level = 1;
    bool exact = true;
    bool recognized = false;          // numeric values identified as rationals, not proved
    std::vector<QuadExt> values;      // exact (or recognized) values
    std::vector<Complex> approx;      // numeric values, always filled on the numeric route

    bool is_zero_tuple() const {
        if (exact || recognized) {
            for (const auto& v : values)
                if (!is_zero(v)) return false;
            return true;
        }
        return false;
    }
};

/// a_p^e a_q^k with gamma^(nt) substituted; throws when the gamma exponent is not a multiple of nt.
inline QuadExt gamma_monomial(const NormalDecomposition& D, long p, long e, long q, long k = 1) {
    long E = e * D.n * (D.t - p) + k * D.n * (D.t - q);
    if (E % D.nt() != 0)
        throw DihedralError("residual gamma exponent " + std::to_string(E) + " is not a multiple of nt = " +
                            std::to_string(D.nt()));
    return power(D.c(p), e) * power(D.c(q), k) * power(D.rho(), E / D.nt());
}

inline Complex gamma_monomial_numeric(const NormalDecomposition& D, long p, long e, long q, long k = 1) {
    long E = e * D.n * (D.t - p) + k * D.n * (D.t - q);
    if (E % D.nt() != 0)
        throw DihedralError("residual gamma exponent " + std::to_string(E) + " is not a multiple of nt = " +
                            std::to_string(D.nt()));
    const auto& h = D.h_approx;
    Complex cp = h[D.t - p] / h.front(), cq = h[D.t - q] / h.front();
    Complex rho = h.front() / h.back();
    return detail::cpow(cp, e) * detail::cpow(cq, k) * detail::cpow(rho, E / D.nt());
}

/// Exponents (e, k) of the level-j entry a_j^e a_i^k: k minimal, then e in [0, t) with j e + i k = 0 mod t.
/// Level 1 gives (t - i, 1).
inline std::pair<long, long> level_exponents(long t, long j, long i) {
    long d = std::gcd(j, t);
    long k = d / std::gcd(d, i);
    for (long e = 0; e < t; ++e)
        if ((j * e + i * k) % t == 0) return {e, k};
    throw DihedralError("no level exponent");  // unreachable: d divides i k
}

/// Level-j tuple u_i^j = a_j^e a_i^k + a_(t-j)^e a_(t-i)^k, i = 1..delta, with (e, k) from level_exponents.
inline DihedralTuple dihedral_level(const NormalDecomposition& D, long j) {
    long delta = D.delta();
    if (delta < 1) throw DihedralError("dihedral invariants need t >= 2");
    if (j < 1 || j > (delta + 1) / 2) throw DihedralError("level out of range");
    DihedralTuple u;
    u.level = j;
    u.exact = D.exact;
    for (long i = 1; i <= delta; ++i) {
        auto [e, k] = level_exponents(D.t, j, i);
        if (D.exact) {
            u.values.push_back(gamma_monomial(D, j, e, i, k) + gamma_monomial(D, D.t - j, e, D.t - i, k));
        } else {
            u.approx.push_back(gamma_monomial_numeric(D, j, e, i, k) +
                               gamma_monomial_numeric(D, D.t - j, e, D.t - i, k));
        }
    }
    return u;
}

/// Level-1 tuple, or the first level whose pair (a_j, a_(t-j)) is nonzero; the zero tuple when all pairs vanish.
inline DihedralTuple dihedral_invariants(const NormalDecomposition& D) {
    DihedralTuple first = dihedral_level(D, 1);
    if (!D.exact || !first.is_zero_tuple()) return first;
    for (long j = 2; j <= (D.delta() + 1) / 2; ++j)
        if (!is_zero(D.h[D.t - j]) || !is_zero(D.h[j])) return dihedral_level(D, j);
    return first;
}

/// Every level up to floor((delta + 1) / 2) that can be evaluated.
inline std::vector<DihedralTuple> dihedral_levels(const NormalDecomposition& D) {
    std::vector<DihedralTuple> out;
    for (long j = 1; j <= (D.delta() + 1) / 2; ++j) {
        try {
            out.push_back(dihedral_level(D, j));
        } catch (const DihedralError&) {
        }
    }
    return out;
}

/// Rational identification of numeric tuple entries at 2^-tol_bits.
inline void recognize_tuple(DihedralTuple& u, long tol_bits) {
    if (u.exact) return;
    std::vector<QuadExt> vals;
    for (const auto& v : u.approx) {
        mpfr_prec_t prec = v.re.prec();
        BigFloat tol = BigFloat::pow2(-tol_bits, prec) * std::max(BigFloat(1.0, prec), cabs(v));
        if (abs(v.im) > tol) return;
        auto q = recognize_rational(v.re, tol);
        if (!q) return;
        vals.emplace_back(*q);
    }
    u.values = std::move(vals);
    u.recognized = true;
}

/// 2^(g-1) u_1^2 - u_g^(g+1) = 0 on a level-1 tuple.
inline bool extra_involution_relation(const DihedralTuple& u, long g) {
    if (u.level != 1) throw DihedralError("the relation is stated for level-1 tuples");
    if (static_cast<long>(u.values.size()) < g) throw DihedralError("tuple too short for genus " + std::to_string(g));
    return power(QuadExt(2), g - 1) * u.values[0] * u.values[0] == power(u.values[g - 1], g + 1);
}

namespace detail {

/// Coordinates with the two fixed points of an exact involution or rotation; nullopt outside the field.
inline std::optional<std::pair<ProjPoint<QuadExt>, ProjPoint<QuadExt>>> exact_fixed_points(const MoebiusMap<QuadExt>& M,
                                                                                         long context) {
    // c x^2 + (d - a) x z - b z^2
    if (is_zero(M.c)) {
        if (M.a == M.d) return std::nullopt;
        return std::make_pair(ProjPoint<QuadExt>::infinity(), ProjPoint<QuadExt>::finite(M.b / (M.d - M.a)));
    }
    QuadExt disc = (M.d - M.a) * (M.d - M.a) + QuadExt(4) * M.b * M.c;
    long ctx = context;
    for (const auto* v : {&M.a, &M.b, &M.c, &M.d})
        if (radicand_of(*v) != 1) ctx = radicand_of(*v);
    auto s = quad_sqrt(disc, ctx);
    if (!s) return std::nullopt;
    try {
        QuadExt x1 = (M.a - M.d + *s) / (QuadExt(2) * M.c), x2 = (M.a - M.d - *s) / (QuadExt(2) * M.c);
        return std::make_pair(ProjPoint<QuadExt>::finite(x1), ProjPoint<QuadExt>::finite(x2));
    } catch (const RadicandMismatch&) {
        return std::nullopt;
    }
}

inline bool near(const CPoint& p, bool infinity, const BigFloat& tol) {
    mpfr_prec_t prec = p.x.re.prec();
    CPoint q = infinity ? CPoint{one(prec), Complex(prec)} : CPoint{Complex(prec), one(prec)};
    return chordal(p, q) < tol;
}

}  // namespace detail

/// Normal decomposition from the oracle group: an involution gives n = 2, otherwise the group is
/// cyclic of odd order N and a generator gives n = N. nullopt for the trivial group.
template <class S>
std::optional<NormalDecomposition> normal_decomposition(const HyperellipticCurve<S>& C, const SymmetryGroup& G) {
    if (G.order() == 1) return std::nullopt;
    const long g = C.genus();
    BigFloat tol = BigFloat::pow2(-G.tol_bits / 2, G.prec);

    std::vector<const Symmetry*> cands;
    long n = 2;
    for (const auto& s : G.elements)
        if (s.order == 2) cands.push_back(&s);
    if (cands.empty()) {
        n = G.order();
        if (n % 2 == 0) throw std::logic_error("even-order group without an involution");
        for (const auto& s : G.elements)
            if (s.order == n) cands.push_back(&s);
    }

    auto in_branch = [&](const CPoint& p) {
        for (const auto& q : G.branch.points)
            if (chordal(p, q) < tol) return true;
        return false;
    };
    auto at_zero_inf = [&](const Symmetry* s) {
        const auto& f = s->fixed;
        return (detail::near(f[0], false, tol) && detail::near(f[1], true, tol)) ||
               (detail::near(f[0], true, tol) && detail::near(f[1], false, tol));
    };
    // prefer fixed points outside the branch set, then fixed points already at 0 and oo
    std::stable_sort(cands.begin(), cands.end(), [&](const Symmetry* x, const Symmetry* y) {
        bool bx = in_branch(x->fixed[0]), by = in_branch(y->fixed[0]);
        if (bx != by) return !bx;
        return at_zero_inf(x) && !at_zero_inf(y);
    });

    for (const Symmetry* s : cands) {
        if (at_zero_inf(s))
            if (auto D = read_decomposition(C.F(), n)) {
                D->witness_map = MoebiusMap<QuadExt>();
                return D;
            }
    }

    std::vector<QuadExt> fq;
    for (const auto& c : C.F().coeffs()) fq.emplace_back(c);
    BinaryForm<QuadExt> Fq(fq);
    long ctx = 1;
    for (const auto& c : fq)
        if (radicand_of(c) != 1) ctx = radicand_of(c);
    if (G.exact && G.radicand != 1) ctx = G.radicand;
    for (const Symmetry* s : cands) {
        if (!s->exact) break;
        auto fp = detail::exact_fixed_points(*s->exact, ctx);
        if (!fp) continue;
        const auto& [p, q] = *fp;
        MoebiusMap<QuadExt> N(p.x, q.x, p.z, q.z);
        try {
            auto D = read_decomposition(act(N, Fq), n);
            if (!D) throw std::logic_error("conjugated form has the wrong support");
            D->witness_map = N;
            return D;
        } catch (const RadicandMismatch&) {
        }
    }

    // numeric route
    const Symmetry* s = cands.front();
    mpfr_prec_t prec = G.prec;
    const CPoint& p = s->fixed[0];
    const CPoint& q = s->fixed[1];
    std::vector<Complex> fc;
    for (const auto& c : C.F().coeffs()) fc.push_back(to_cvalue(c, prec));
    std::vector<Complex> f2 = detail::act_numeric({p.x, q.x, p.z, q.z}, fc);
    BigFloat scale(prec);
    for (const auto& c : f2) scale = std::max(scale, cabs(c));
    BigFloat small = scale * tol;
    long d = static_cast<long>(f2.size()) - 1;
    long r = cabs(f2[0]) > small ? 0 : 1;
    long top = -1;
    for (long i = 0; i <= d; ++i) {
        if (cabs(f2[i]) <= small) continue;
        if ((i - r) % n != 0) throw PrecisionError("conjugated form has stray coefficients at this precision");
        top = i;
    }
    NormalDecomposition D;
    D.kind = r == 0 ? DecompositionKind::EvenPart : DecompositionKind::OddPart;
    D.genus = g;
    D.n = D.degree_s = n;
    D.t = (top - r) / n;
    D.exact = false;
    for (long k = 0; k <= D.t; ++k) D.h_approx.push_back(f2[r + n * k]);
    return D;
}

struct Genus2Verdict {
    std::string name;  // V6, GL2(3), D6, D4, Z2xZ2
    bool exact = true;
    // on a D6 or D4 locus but at an excluded value of u2; the name is then not decisive
    bool boundary = false;
    std::string note;
};

/// Genus-2 classification by (u1, u2).
inline Genus2Verdict genus2_classify(const QuadExt& u1, const QuadExt& u2) {
    Genus2Verdict v;
    auto eq = [](const QuadExt& x, long k) { return x == QuadExt(k); };
    if ((is_zero(u1) && is_zero(u2)) || (eq(u1, 6750) && eq(u2, 450))) {
        v.name = "V6";
        return v;
    }
    if (eq(u1, -250) && eq(u2, 50)) {
        v.name = "GL2(3)";
        return v;
    }
    if (is_zero(u2 * u2 - QuadExt(220) * u2 - QuadExt(16) * u1 + QuadExt(4500))) {
        bool excluded = eq(u2, 18) || eq(u2, 50);
        long m = radicand_of(u2);
        if (m == 5) {
            excluded = excluded || u2 == QuadExt(Rational(140), Rational(60), 5);
        } else if (m == 1) {
            v.note = "u2 = 140 + 60*sqrt(5) cannot occur for rational u2";
        } else {
            v.note = "u2 lies outside Q(sqrt 5); the irrational exclusion does not apply";
        }
        if (!excluded) {
            v.name = "D6";
            return v;
        }
        v.boundary = true;
    }
    if (is_zero(QuadExt(2) * u1 * u1 - u2 * u2 * u2)) {
        bool excluded = eq(u2, 2) || eq(u2, 18) || eq(u2, 0) || eq(u2, 50) || eq(u2, 450);
        if (!excluded) {
            v.name = "D4";
            return v;
        }
        v.boundary = true;
    }
    v.name = "Z2xZ2";
    if (v.boundary) v.note = "excluded boundary value of u2; resolve with the symmetry oracle";
    return v;
}

/// Approximate variant for tuples that stayed numeric; all tests within 2^-tol_bits relative.
inline Genus2Verdict genus2_classify(const Complex& u1, const Complex& u2, long tol_bits) {
    mpfr_prec_t prec = u1.re.prec();
    auto C = [&](double x) { return Complex(std::complex<double>(x, 0), prec); };
    auto zero = [&](const Complex& x, const BigFloat& scale) {
        return cabs(x) <= BigFloat::pow2(-tol_bits, prec) * std::max(BigFloat(1.0, prec), scale);
    };
    auto close = [&](const Complex& x, double k) { return zero(x - C(k), BigFloat(std::abs(k) + 1, prec)); };
    Genus2Verdict v;
    v.exact = false;
    BigFloat s = cabs(u1) + cabs(u2) * cabs(u2) * cabs(u2);
    if ((close(u1, 0) && close(u2, 0)) || (close(u1, 6750) && close(u2, 450))) v.name = "V6";
    else if (close(u1, -250) && close(u2, 50)) v.name = "GL2(3)";
    else {
        bool d6 = zero(u2 * u2 - C(220) * u2 - C(16) * u1 + C(4500), s);
        bool d4 = zero(C(2) * u1 * u1 - u2 * u2 * u2, s);
        if (d6 && !close(u2, 18) && !close(u2, 50) && !close(u2, 140 + 60 * std::sqrt(5.0))) v.name = "D6";
        else if (d4 && !close(u2, 2) && !close(u2, 18) && !close(u2, 0) && !close(u2, 50) && !close(u2, 450))
            v.name = "D4";
        else {
            v.name = "Z2xZ2";
            v.boundary = d6 || d4;
        }
    }
    v.note = v.boundary ? "excluded boundary value of u2 on numeric invariants; resolve with the symmetry oracle"
                        : "decided on numeric invariants";
    return v;
}

inline Genus2Verdict genus2_classify(const DihedralTuple& u, long tol_bits = 128) {
    if (u.level != 1) throw DihedralError("genus-2 classification needs the level-1 tuple");
    if (u.exact || u.recognized) {
        if (u.values.size() != 2) throw DihedralError("genus-2 tuple must have two entries");
        Genus2Verdict v = genus2_classify(u.values[0], u.values[1]);
        if (u.recognized) {
            v.exact = false;
            v.note += (v.note.empty() ? "" : "; ") + std::string("invariants recognized from numeric values");
        }
        return v;
    }
    if (u.approx.size() != 2) throw DihedralError("genus-2 tuple must have two entries");
    return genus2_classify(u.approx[0], u.approx[1], tol_bits);
}

}  // namespace hyperaut

#endif
