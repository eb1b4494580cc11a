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
   Automorphism group determination by three routes:

     algorithm1  I4 early exit, then membership in the one-dimensional loci
                 of the large groups (reduced A4, S4, A5) through the moduli point.
     algorithm2  the same membership test for every registry row with delta <= 1.
     algorithm3  normal decomposition, odd degree short cut, dihedral invariants.

   Locus membership: along a family with one parameter the form is linear in l,
   so an invariant of degree k is a polynomial of degree <= k in l. It is
   interpolated exactly, each moduli coordinate gives a polynomial equation
   in l, its roots are found numerically and every candidate is verified on
   all coordinates (exactly when l is rational).
*/

#ifndef HYPERAUT_CLASSIFY_HPP
#define HYPERAUT_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dihedral.hpp"
#include "invariants.hpp"

namespace hyperaut {

enum class Route { Algorithm1, Algorithm2, Algorithm3, Oracle, CrossChecked };
enum class Mode { Auto, InvariantsOnly, OracleOnly, Cross };

inline const char* to_string(Route r) {
    switch (r) {
        case Route::Algorithm1: return "Algorithm1";
        case Route::Algorithm2: return "Algorithm2";
        case Route::Algorithm3: return "Algorithm3";
        case Route::Oracle: return "Oracle";
        case Route::CrossChecked: return "CrossChecked";
    }
    return "?";
}

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::Auto: return "auto";
        case Mode::InvariantsOnly: return "invariants_only";
        case Mode::OracleOnly: return "oracle_only";
        case Mode::Cross: return "cross";
    }
    return "?";
}

inline Mode parse_mode(const std::string& s) {
    if (s == "auto") return Mode::Auto;
    if (s == "invariants_only") return Mode::InvariantsOnly;
    if (s == "oracle_only") return Mode::OracleOnly;
    if (s == "cross") return Mode::Cross;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

inline constexpr long algorithm1_max_genus = 12;

inline bool is_large(const ReducedType& r) {
    return r.kind == ReducedKind::A4 || r.kind == ReducedKind::S4 || r.kind == ReducedKind::A5;
}

enum class Membership { Member, NotMember, Untested };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::Member: return "member";
        case Membership::NotMember: return "not a member";
        case Membership::Untested: return "untested";
    }
    return "?";
}

struct LocusTest {
    int row = 0;
    std::string group;
    long n = 0;
    long delta = 0;
    long order = 0;
    Membership status = Membership::Untested;
    std::optional<QuadExt> lambda;  // exact parameter of the matching member
    std::optional<std::complex<double>> lambda_approx;
    bool exact = true;
    std::string note;
};

struct Algorithm1Result {
    long genus = 0;
    bool in_range = true;
    std::map<Inv, Maybe<QuadExt>> invariants;
    bool early_exit = false;  // I4 != 0: none of the large groups
    std::optional<ModuliPoint<QuadExt>> point;
    std::vector<LocusTest> loci;
    std::string note;

    std::vector<const LocusTest*> members() const {
        std::vector<const LocusTest*> out;
        for (const auto& l : loci)
            if (l.status == Membership::Member) out.push_back(&l);
        return out;
    }
};

class OutOfRange : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline QuadExt to_quad(const QuadExt& x) { return x; }
inline QuadExt to_quad(const Rational& x) { return QuadExt(x); }

/// Cross-multiplied coordinate equation N^a Dc^b - Nc^a D^b for one absolute invariant.
struct CoordinateEquation {
    Abs coordinate;
    Poly<QuadExt> num, den;  // interpolated invariants along the family
    QuadExt num_c, den_c;    // values at the curve
    long a = 1, b = 1;

    Poly<QuadExt> equation() const {
        Poly<QuadExt> lhs = poly_scale(poly_pow(num, a), power(den_c, b));
        Poly<QuadExt> rhs = poly_scale(poly_pow(den, b), power(num_c, a));
        Poly<QuadExt> e = poly_sub(lhs, rhs);
        trim(e);
        return e;
    }

    static Poly<QuadExt> poly_pow(const Poly<QuadExt>& p, long e) {
        Poly<QuadExt> r{QuadExt(1)};
        for (long i = 0; i < e; ++i) r = poly_mul(r, p);
        return r;
    }
};

inline bool is_zero_poly(const Poly<QuadExt>& p) {
    for (const auto& c : p)
        if (!is_zero(c)) return false;
    return true;
}

inline std::vector<Complex> to_complex_poly(const Poly<QuadExt>& p, mpfr_prec_t prec) {
    std::vector<Complex> out;
    for (const auto& c : p) out.push_back(to_cvalue(c, prec));
    return out;
}

inline Complex eval_complex(const Poly<QuadExt>& p, const Complex& x, mpfr_prec_t prec) {
    return horner(to_complex_poly(p, prec), x);
}

/// The curve's moduli point as cross-multiplication data; throws ModuliPointUndefined.
template <class S>
ModuliPoint<QuadExt> curve_point(const InvariantVector<S>& iv) {
    ModuliPoint<S> p = moduli_point(iv);
    ModuliPoint<QuadExt> q;
    q.branch = p.branch;
    q.coordinates = p.coordinates;
    for (const auto& c : p.components) q.components.push_back(to_quad(c));
    return q;
}

/// Gate invariant of the piecewise moduli point at genus g, if any.
inline std::optional<Inv> moduli_gate(long g) {
    switch (g) {
        case 5:
        case 8:
        case 9:
        case 12: return Inv::I2;
        case 7: return Inv::I3;
        case 10: return Inv::I12;
        default: return std::nullopt;
    }
}

inline std::map<Inv, Maybe<QuadExt>> to_quad(const InvariantVector<QuadExt>& iv) { return iv.values; }

template <class S>
std::map<Inv, Maybe<QuadExt>> to_quad(const InvariantVector<S>& iv) {
    std::map<Inv, Maybe<QuadExt>> out;
    for (const auto& [k, v] : iv.values)
        out[k] = v.defined() ? Maybe<QuadExt>::of(to_quad(*v.value)) : Maybe<QuadExt>::undefined(v.reason);
    return out;
}

/// Membership of a curve (given by its invariants) in the family locus of one registry entry.
inline LocusTest test_locus(const Table1Entry& e, const std::map<Inv, Maybe<QuadExt>>& cv,
                            const ModuliPoint<QuadExt>& point, mpfr_prec_t prec) {
    LocusTest T;
    T.row = e.row->index;
    T.group = e.name;
    T.n = e.n;
    T.delta = e.delta;
    T.order = e.order;
    long g = e.genus;
    auto gate = moduli_gate(g);

    auto member_invariants = [&](const QuadExt& l, bool with_param) -> std::optional<InvariantVector<QuadExt>> {
        FamilySpec<QuadExt> spec{e.row->index, g, e.n, {}};
        if (with_param) spec.lambdas.push_back(l);
        try {
            return classical_invariants(generate(spec).F());
        } catch (const NotSquarefree&) {
            return std::nullopt;
        }
    };

    std::vector<Inv> needed;
    for (Abs a : point.coordinates) {
        needed.push_back(recipe(a).num);
        needed.push_back(recipe(a).den);
    }
    if (gate) needed.push_back(*gate);
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

    if (e.delta == 0) {
        auto iv = member_invariants(QuadExt(0), false);
        if (!iv) {
            T.note = "the tabulated curve is singular";
            return T;
        }
        bool same = true;
        for (Abs a : point.coordinates) {
            AbsRecipe r = recipe(a);
            const auto &N = (*iv)[r.num], &D = (*iv)[r.den];
            if (!N.defined() || !D.defined()) {
                T.note = "invariants of the tabulated curve undefined";
                return T;
            }
            if (is_zero(*D.value)) same = false;
            else if (power(*N.value, r.num_exp) * power(*cv.at(r.den).value, r.den_exp) !=
                     power(*cv.at(r.num).value, r.num_exp) * power(*D.value, r.den_exp))
                same = false;
        }
        if (gate && is_zero(*cv.at(*gate).value) != iv->is_zero(*gate)) same = false;
        T.status = same ? Membership::Member : Membership::NotMember;
        return T;
    }
    if (e.delta != 1) {
        T.note = "locus of dimension " + std::to_string(e.delta) + " is not tested";
        return T;
    }

    // interpolate the needed invariants along the family
    long maxdeg = 0;
    for (Inv i : needed) maxdeg = std::max(maxdeg, invariant_degree(i));
    std::vector<QuadExt> xs;
    std::map<Inv, std::vector<QuadExt>> ys;
    for (long k = 0; static_cast<long>(xs.size()) <= maxdeg && k < 4 * maxdeg + 20; ++k) {
        QuadExt l((k % 2 ? 1 : -1) * ((k + 1) / 2));
        auto iv = member_invariants(l, true);
        if (!iv) continue;
        bool ok = true;
        for (Inv i : needed) ok = ok && (*iv)[i].defined();
        if (!ok) {
            T.note = "invariants along the family undefined";
            return T;
        }
        xs.push_back(l);
        for (Inv i : needed) ys[i].push_back(*(*iv)[i].value);
    }
    if (static_cast<long>(xs.size()) <= maxdeg) {
        T.note = "too few nonsingular members for interpolation";
        return T;
    }
    std::map<Inv, Poly<QuadExt>> along;
    for (Inv i : needed) along[i] = interpolate(xs, ys[i]);

    std::vector<CoordinateEquation> eqs;
    for (Abs a : point.coordinates) {
        AbsRecipe r = recipe(a);
        eqs.push_back({a, along[r.num], along[r.den], *cv.at(r.num).value, *cv.at(r.den).value, r.num_exp,
                       r.den_exp});
    }
    std::vector<Poly<QuadExt>> polys;
    for (const auto& q : eqs) polys.push_back(q.equation());
    if (gate && is_zero(*cv.at(*gate).value)) polys.push_back(along[*gate]);

    // candidate parameters from the first nontrivial equation
    const Poly<QuadExt>* pivot = nullptr;
    for (const auto& p : polys)
        if (!is_zero_poly(p)) {
            pivot = &p;
            break;
        }
    if (!pivot) {
        T.status = Membership::Member;
        T.note = "moduli point constant along the family";
        return T;
    }
    if (poly_degree(*pivot) == 0) {
        T.status = Membership::NotMember;
        return T;
    }
    Poly<QuadExt> sq = poly_divmod(*pivot, poly_gcd(*pivot, poly_derivative(*pivot))).first;
    trim(sq);

    CertifiedRoots R;
    mpfr_prec_t p2 = prec;
    for (int attempt = 0;; ++attempt) {
        try {
            R = certified_roots(to_complex_poly(sq, p2), p2);
            break;
        } catch (const PrecisionError&) {
            if (attempt == 2) {
                T.note = "parameter roots not separated";
                return T;
            }
            p2 *= 2;
        }
    }

    auto verify_exact = [&](const QuadExt& l) {
        for (const auto& p : polys)
            if (!is_zero(poly_eval(p, l))) return false;
        for (const auto& q : eqs)
            if (is_zero(poly_eval(q.den, l))) return false;
        if (gate && !is_zero(*cv.at(*gate).value) && is_zero(poly_eval(along[*gate], l))) return false;
        return member_invariants(l, true).has_value();
    };
    auto verify_numeric = [&](const Complex& l) {
        BigFloat tol = BigFloat::pow2(-static_cast<long>(p2) / 2, p2);
        auto small = [&](const Poly<QuadExt>& p) {
            BigFloat scale(1.0, p2), lp(1.0, p2);
            for (const auto& c : p) {
                scale += cabs(to_cvalue(c, p2)) * lp;
                lp *= cabs(l);
            }
            return cabs(eval_complex(p, l, p2)) <= tol * scale;
        };
        for (const auto& p : polys)
            if (!small(p)) return false;
        for (const auto& q : eqs)
            if (small(q.den)) return false;
        return true;
    };

    BigFloat rtol = BigFloat::pow2(-static_cast<long>(p2) / 2, p2);
    for (const auto& z : R.roots) {
        std::optional<Rational> re;
        if (cabs(Complex(BigFloat(p2), z.im)) <= rtol * std::max(BigFloat(1.0, p2), cabs(z)))
            re = recognize_rational(z.re, rtol * std::max(BigFloat(1.0, p2), cabs(z)));
        if (re) {
            if (verify_exact(QuadExt(*re))) {
                T.status = Membership::Member;
                T.lambda = QuadExt(*re);
                return T;
            }
            continue;
        }
        if (verify_numeric(z)) {
            T.status = Membership::Member;
            T.exact = false;
            T.lambda_approx = z.to_cdouble();
            T.note = "parameter verified numerically";
            return T;
        }
    }
    T.status = Membership::NotMember;
    return T;
}

template <class S>
Algorithm1Result locus_scan(const HyperellipticCurve<S>& C, bool large_only, mpfr_prec_t prec) {
    Algorithm1Result out;
    long g = C.genus();
    out.genus = g;
    if (g > algorithm1_max_genus) {
        out.in_range = false;
        out.note = "out of Algorithm 1 range (g = " + std::to_string(g) + " > " +
                   std::to_string(algorithm1_max_genus) + ")";
        return out;
    }
    InvariantVector<S> iv = classical_invariants(C.F());
    out.invariants = to_quad(iv);
    if (large_only && iv.is_nonzero(Inv::I4)) {
        out.early_exit = true;
        out.note = "I4 != 0: not one of the large groups";
        return out;
    }
    if (!moduli_point_genus(g)) {
        out.note = "no moduli point at genus " + std::to_string(g) + "; loci untested";
        return out;
    }
    try {
        out.point = curve_point(iv);
    } catch (const ModuliPointUndefined& e) {
        out.note = e.what();
        return out;
    }
    for (const auto& e : table1_lookup(g)) {
        if (large_only && !is_large(e.reduced)) continue;
        if (e.reduced.kind == ReducedKind::Dihedral && e.n % 2) continue;
        if (e.delta > 1) continue;
        try {
            out.loci.push_back(test_locus(e, out.invariants, *out.point, prec));
        } catch (const FamilyError& x) {
            LocusTest T{e.row->index, e.name, e.n, e.delta, e.order};
            T.note = x.what();
            out.loci.push_back(T);
        } catch (const RadicandMismatch& x) {
            LocusTest T{e.row->index, e.name, e.n, e.delta, e.order};
            T.note = std::string("family and curve live in different quadratic fields: ") + x.what();
            out.loci.push_back(T);
        }
    }
    return out;
}

}  // namespace detail

/// I4 early exit, then locus membership for the large groups; g <= 12.
template <class S>
Algorithm1Result algorithm1(const HyperellipticCurve<S>& C, mpfr_prec_t prec = 256) {
    if (C.genus() > algorithm1_max_genus)
        throw OutOfRange("out of Algorithm 1 range (g = " + std::to_string(C.genus()) + " > " +
                         std::to_string(algorithm1_max_genus) + ")");
    return detail::locus_scan(C, true, prec);
}

/// Parametric membership in every registry locus of dimension <= 1.
template <class S>
Algorithm1Result algorithm2(const HyperellipticCurve<S>& C, mpfr_prec_t prec = 256) {
    if (C.genus() > algorithm1_max_genus)
        throw OutOfRange("out of Algorithm 2 range (g = " + std::to_string(C.genus()) + " > " +
                         std::to_string(algorithm1_max_genus) + ")");
    return detail::locus_scan(C, false, prec);
}

struct Algorithm3Result {
    GroupVerdict verdict;
    long s = 1;  // degree of the normal decomposition, 1 when there is none
    std::string step;
    std::optional<NormalDecomposition> decomposition;
    std::optional<DihedralTuple> dihedral;
    std::optional<Genus2Verdict> genus2;
    OracleResult oracle;
    std::vector<std::string> notes;
};

namespace detail {

/// Verdict for a group named at genus g, with the oracle's evidence attached.
inline GroupVerdict verdict_named(long g, const std::string& name, const OracleEvidence& ev) {
    GroupVerdict v;
    v.evidence = ev;
    v.full_name = name;
    if (name == "Z2") {
        v.reduced = {ReducedKind::Trivial, 1};
        v.order = 2;
        return v;
    }
    for (const auto& e : table1_lookup(g))
        if (e.name == name) {
            v.reduced = e.reduced;
            v.order = e.order;
            return v;
        }
    throw std::logic_error("group " + name + " has no registry row at genus " + std::to_string(g));
}

}  // namespace detail

template <class S>
Algorithm3Result algorithm3(const HyperellipticCurve<S>& C, const OracleOptions& opt = {}) {
    Algorithm3Result out;
    const long g = C.genus();
    out.oracle = symmetry_oracle(C, opt);
    const SymmetryGroup& G = out.oracle.group;
    auto oracle_verdict = [&]() -> const GroupVerdict& { return out.oracle.verdict; };

    out.decomposition = normal_decomposition(C, G);
    if (!out.decomposition) {
        out.step = "no normal decomposition";
        out.verdict = oracle_verdict();
        if (out.verdict.reduced.kind != ReducedKind::Trivial)
            throw std::logic_error("trivial symmetry group with a nontrivial verdict");
        return out;
    }
    const NormalDecomposition& D = *out.decomposition;
    out.s = D.n;
    if (D.n % 2 == 1) {
        out.step = "odd degree s = " + std::to_string(D.n);
        out.verdict = detail::verdict_named(g, "Z" + std::to_string(2 * D.n), oracle_verdict().evidence);
        return out;
    }

    if (D.t >= 2) {
        try {
            DihedralTuple u = dihedral_invariants(D);
            if (!u.exact) recognize_tuple(u, opt.tol_bits);
            out.dihedral = u;
        } catch (const DihedralError& e) {
            out.notes.push_back(std::string("no dihedral tuple: ") + e.what());
        }
    }
    if (g == 2 && D.kind == DecompositionKind::EvenPart && D.n == 2 && D.t == 3 && out.dihedral &&
        out.dihedral->level == 1) {
        out.genus2 = genus2_classify(*out.dihedral, opt.tol_bits);
        if (!out.genus2->boundary) {
            out.step = "genus-2 dihedral invariants";
            out.verdict = detail::verdict_named(g, out.genus2->name, oracle_verdict().evidence);
            return out;
        }
        out.step = "genus-2 boundary value, oracle row";
    } else {
        out.step = "dihedral evidence, oracle row";
    }
    out.verdict = oracle_verdict();
    return out;
}

struct ClassificationReport {
    Mode mode = Mode::Auto;
    Route route = Route::Oracle;
    GroupVerdict verdict;
    std::optional<Algorithm1Result> invariant_evidence;
    std::optional<Algorithm3Result> algorithm3;
    std::optional<GroupVerdict> oracle_verdict;
    std::optional<bool> agreement;
    std::vector<std::string> notes;
};

class RouteDisagreement : public std::runtime_error {
   public:
    RouteDisagreement(const std::string& what, ClassificationReport r)
        : std::runtime_error(what), report(std::move(r)) {}
    ClassificationReport report;
};

namespace detail {

/// Consistency of a verdict with the invariant route; empty when consistent.
inline std::string invariant_conflict(const Algorithm1Result& a, const GroupVerdict& v) {
    if (!v.determined) return {};
    if (a.early_exit && is_large(v.reduced)) return "I4 != 0 but the verdict is " + v.full_name;
    for (const auto& l : a.loci) {
        if (l.status == Membership::Member && v.order % l.order != 0)
            return "curve lies on the " + l.group + " locus but the verdict is " + v.full_name;
        if (l.status == Membership::NotMember && l.group == v.full_name)
            return "verdict " + v.full_name + " but the curve is not on its locus";
    }
    return {};
}

inline bool same_verdict(const GroupVerdict& a, const GroupVerdict& b) {
    return a.full_name == b.full_name && a.order == b.order && a.reduced == b.reduced;
}

}  // namespace detail

struct ClassifyOptions {
    OracleOptions oracle;
    bool run_invariants = true;  // Algorithm 1 corroboration in auto and cross modes
};

template <class S>
ClassificationReport classify(const HyperellipticCurve<S>& C, Mode mode = Mode::Auto,
                              const ClassifyOptions& opt = {}) {
    ClassificationReport rep;
    rep.mode = mode;
    const long g = C.genus();
    auto finish = [&]() -> ClassificationReport {
        if (!bounds_check(g, rep.verdict.order, rep.verdict.evidence.max_lift_order))
            throw std::logic_error("verdict " + rep.verdict.full_name + " violates the order bounds");
        return rep;
    };
    auto corroborate = [&](bool large_only) {
        if (!opt.run_invariants || g > algorithm1_max_genus) {
            if (g > algorithm1_max_genus)
                rep.notes.push_back("out of Algorithm 1 range (g = " + std::to_string(g) + ")");
            return;
        }
        rep.invariant_evidence = large_only ? algorithm1(C, opt.oracle.prec) : algorithm2(C, opt.oracle.prec);
        if (!rep.invariant_evidence->note.empty()) rep.notes.push_back(rep.invariant_evidence->note);
    };
    auto check_invariants = [&]() {
        if (!rep.invariant_evidence) return;
        std::string c = detail::invariant_conflict(*rep.invariant_evidence, rep.verdict);
        if (!c.empty()) {
            rep.agreement = false;
            throw RouteDisagreement(c, rep);
        }
    };

    switch (mode) {
        case Mode::OracleOnly: {
            rep.route = Route::Oracle;
            rep.verdict = symmetry_oracle(C, opt.oracle).verdict;
            rep.oracle_verdict = rep.verdict;
            return finish();
        }
        case Mode::InvariantsOnly: {
            if (g > algorithm1_max_genus)
                throw OutOfRange("out of Algorithm 1 range (g = " + std::to_string(g) + " > " +
                                 std::to_string(algorithm1_max_genus) + ")");
            rep.invariant_evidence = algorithm1(C, opt.oracle.prec);
            rep.route = Route::Algorithm1;
            if (!rep.invariant_evidence->early_exit) {
                Algorithm1Result all = algorithm2(C, opt.oracle.prec);
                rep.invariant_evidence = all;
                rep.route = Route::Algorithm2;
            }
            const LocusTest* best = nullptr;
            for (const LocusTest* l : rep.invariant_evidence->members())
                if (!best || l->order > best->order) best = l;
            if (best) {
                rep.verdict = detail::verdict_named(g, best->group, {});
                rep.verdict.determined = false;
                rep.notes.push_back("largest locus containing the curve; the group contains " + best->group);
            } else {
                rep.verdict.full_name = "undetermined";
                rep.verdict.determined = false;
                rep.notes.push_back(rep.invariant_evidence->early_exit
                                        ? "I4 != 0: not one of the large groups"
                                        : "on no locus of dimension <= 1");
            }
            return finish();
        }
        case Mode::Auto: {
            rep.algorithm3 = algorithm3(C, opt.oracle);
            rep.route = Route::Algorithm3;
            rep.verdict = rep.algorithm3->verdict;
            corroborate(true);
            if (rep.invariant_evidence) rep.agreement = true;
            check_invariants();
            return finish();
        }
        case Mode::Cross: {
            rep.algorithm3 = algorithm3(C, opt.oracle);
            rep.verdict = rep.algorithm3->verdict;
            OracleOptions o = opt.oracle;
            o.base = {1, 3, 5};
            rep.oracle_verdict = symmetry_oracle(C, o).verdict;
            rep.route = Route::CrossChecked;
            rep.agreement = detail::same_verdict(rep.verdict, *rep.oracle_verdict);
            if (!*rep.agreement)
                throw RouteDisagreement("Algorithm 3 gives " + rep.verdict.full_name + ", the oracle gives " +
                                            rep.oracle_verdict->full_name,
                                        rep);
            corroborate(true);
            check_invariants();
            return finish();
        }
    }
    throw std::logic_error("unknown mode");
}

}  // namespace hyperaut

#endif
