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
   Parametrized curve families, one generator per registry row:
     rows 1-3    cyclic reduced group, X^(nt) + a1 X^(n(t-1)) + ... + 1
     rows 4-9    dihedral reduced group, prefix * prod (X^(2n) + l_i X^n + 1)
     rows 10-15  A4, prefix * prod G_i(X)
     rows 16-23  S4, products of R, S, T and the G_i
     rows 24-31  A5, same shape with the icosahedral forms
*/

#ifndef HYPERAUT_FAMILIES_HPP
#define HYPERAUT_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "binform.hpp"
#include "polyalg.hpp"
#include "registry.hpp"

namespace hyperaut {

class FamilyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NotSquarefree : public FamilyError {
   public:
    using FamilyError::FamilyError;
};

/// Y^2 = F(X, Z) with deg F = 2g + 2 and no repeated projective root.
template <class S>
class HyperellipticCurve {
   public:
    HyperellipticCurve(long genus, BinaryForm<S> F) : genus_(genus), F_(std::move(F)) {
        if (genus < 2) throw std::invalid_argument("genus must be >= 2");
        if (F_.degree() != 2 * genus + 2)
            throw std::invalid_argument("form degree " + std::to_string(F_.degree()) + " != 2g+2 = " +
                                        std::to_string(2 * genus + 2));
        if (!is_squarefree_form(F_)) throw NotSquarefree("F has a repeated projective root");
    }
    /// From an affine polynomial of degree 2g+1 or 2g+2 (ascending coefficients).
    static HyperellipticCurve from_affine(const Poly<S>& p) {
        Poly<S> q = p;
        trim(q);
        long dp = poly_degree(q);
        if (dp < 5) throw std::invalid_argument("affine degree must be at least 5");
        long g = (dp - 1) / 2;
        return HyperellipticCurve(g, homogenize(q, 2 * g + 2));
    }

    long genus() const { return genus_; }
    const BinaryForm<S>& F() const { return F_; }

   private:
    long genus_;
    BinaryForm<S> F_;
};

enum class A5Reading { Corrected, Verbatim };

template <class S>
struct FamilySpec {
    int row = 0;  // registry row index 1..31 (rows 10-15 are the A4 rows in order)
    long genus = 0;
    long n = 0;
    std::vector<S> lambdas;
    A5Reading a5 = A5Reading::Corrected;
};

namespace detail {

template <class S>
Poly<S> monomial_poly(std::initializer_list<std::pair<long, long>> terms) {
    long deg = 0;
    for (auto& t : terms) deg = std::max(deg, t.first);
    Poly<S> p(static_cast<std::size_t>(deg) + 1, S(0));
    for (auto& [e, c] : terms) p[e] += S(Rational(c));
    return p;
}

template <class S>
Poly<S> x_power(long k) {
    Poly<S> p(static_cast<std::size_t>(k) + 1, S(0));
    p[k] = S(1);
    return p;
}

template <class S>
S sqrt_minus_3() {
    if constexpr (std::is_same_v<S, QuadExt>) {
        return QuadExt::root(-3);
    } else {
        throw FamilyError("this row needs sqrt(-3); use QuadExt scalars");
    }
}

}  // namespace detail

/// X^(2n) + l X^n + 1.
template <class S>
Poly<S> dihedral_factor(long n, const S& l) {
    Poly<S> p(static_cast<std::size_t>(2 * n) + 1, S(0));
    p[0] = S(1);
    p[n] = l;
    p[2 * n] = S(1);
    return p;
}

/// X^12 - l X^10 - 33 X^8 + 2 l X^6 - 33 X^4 - l X^2 + 1.
template <class S>
Poly<S> a4_factor(const S& l) {
    Poly<S> p(13, S(0));
    p[0] = S(1);
    p[2] = -l;
    p[4] = S(-33);
    p[6] = S(2) * l;
    p[8] = S(-33);
    p[10] = -l;
    p[12] = S(1);
    return p;
}

/// X^4 + 2 sqrt(-3) X^2 + 1.
template <class S>
Poly<S> a4_quartic() {
    Poly<S> p(5, S(0));
    p[0] = S(1);
    p[2] = S(2) * detail::sqrt_minus_3<S>();
    p[4] = S(1);
    return p;
}

template <class S>
Poly<S> a4_octic() {
    return detail::monomial_poly<S>({{8, 1}, {4, 14}, {0, 1}});
}

/// X (X^4 - 1): the six octahedron vertices, infinity included through the degree drop.
template <class S>
Poly<S> octahedral_T() {
    return detail::monomial_poly<S>({{5, 1}, {1, -1}});
}

template <class S>
Poly<S> s4_factor(const S& l) {
    Poly<S> p(25, S(0));
    p[24] = S(1);
    p[20] = l;
    p[16] = S(759) - S(4) * l;
    p[12] = S(2) * (S(3) * l + S(1288));
    p[8] = S(759) - S(4) * l;
    p[4] = l;
    p[0] = S(1);
    return p;
}

template <class S>
Poly<S> s4_R() {
    return detail::monomial_poly<S>({{12, 1}, {8, -33}, {4, -33}, {0, 1}});
}

template <class S>
Poly<S> s4_S() {
    return detail::monomial_poly<S>({{8, 1}, {4, 14}, {0, 1}});
}

template <class S>
Poly<S> a5_R(A5Reading r = A5Reading::Corrected) {
    if (r == A5Reading::Verbatim)
        return detail::monomial_poly<S>({{30, 1}, {25, 522}, {20, -10005}, {15, -10005}, {5, -522}, {0, 1}});
    return detail::monomial_poly<S>({{30, 1}, {25, 522}, {20, -10005}, {10, -10005}, {5, -522}, {0, 1}});
}

template <class S>
Poly<S> a5_S() {
    return detail::monomial_poly<S>({{20, 1}, {15, -228}, {10, 494}, {5, 228}, {0, 1}});
}

template <class S>
Poly<S> a5_T(A5Reading r = A5Reading::Corrected) {
    if (r == A5Reading::Verbatim) return detail::monomial_poly<S>({{10, 1}, {1, 10}, {0, -1}});
    return detail::monomial_poly<S>({{11, 1}, {6, 11}, {1, -1}});
}

/// The degree-60 A5 family factor G_i(X); coefficients are (c1 l + c0) at X^k.
template <class S>
Poly<S> a5_factor(const S& l) {
    struct Term {
        long k, c1, c0;
    };
    static const Term terms[] = {
        {60, 1, -1},
        {55, -36 * 19, -36 * 29},
        {50, 6 * 26239, -6 * 42079},
        {45, -540 * 23199, 540 * 19343},
        {40, 105 * 737719, -105 * 953143},
        {35, -72 * 1815127, 72 * 145087},
        {30, -4 * 8302981, -4 * 49913771},
        {25, 72 * 1815127, -72 * 145087},
        {20, 105 * 737719, -105 * 953143},
        {15, 540 * 23199, -540 * 19343},
        {10, 6 * 26239, -6 * 42079},
        {5, 36 * 19, 36 * 29},
        {0, 1, -1},
    };
    Poly<S> p(61, S(0));
    for (const auto& t : terms) p[t.k] = S(Rational(t.c1)) * l + S(Rational(t.c0));
    return p;
}

/// Generates the family member for `spec`; throws FamilyError on inadmissible input.
template <class S>
HyperellipticCurve<S> generate(const FamilySpec<S>& spec) {
    const Table1Row& row = registry().row(spec.row);
    long g = spec.genus, n = spec.n;
    if (g < 2) throw FamilyError("genus must be >= 2");
    if (row.parametrized() && n < 2) throw FamilyError("row " + std::to_string(spec.row) + " needs n >= 2");
    if (row.reduced.kind == ReducedKind::Dihedral && n % 2)
        throw FamilyError("dihedral rows are generated for even n only");
    Rational dq = row.delta(g, n);
    if (dq.get_den() != 1 || sgn(dq) < 0)
        throw FamilyError("row " + std::to_string(spec.row) + " inadmissible at g=" + std::to_string(g) +
                          (row.parametrized() ? ", n=" + std::to_string(n) : "") + ": delta = " + to_string(dq));
    long delta = dq.get_num().get_si();
    for (const auto& c : row.constraints)
        if (c != "n even" && !constraint_holds(c, g, n, delta))
            throw FamilyError("row " + std::to_string(spec.row) + " violates '" + c + "' at g=" + std::to_string(g));
    if (static_cast<long>(spec.lambdas.size()) != delta)
        throw FamilyError("row " + std::to_string(spec.row) + " needs " + std::to_string(delta) + " parameters, got " +
                          std::to_string(spec.lambdas.size()));

    Poly<S> one{S(1)};
    Poly<S> F;
    const auto& L = spec.lambdas;
    switch (row.reduced.kind) {
        case ReducedKind::Cyclic: {
            long total = spec.row == 1 ? 2 * g + 2 : spec.row == 2 ? 2 * g + 1 : 2 * g;
            long t = total / n;
            Poly<S> p(static_cast<std::size_t>(n * t) + 1, S(0));
            p[n * t] = S(1);
            p[0] = S(1);
            for (long i = 1; i < t; ++i) p[n * (t - i)] = L[i - 1];
            F = spec.row == 3 ? poly_mul(detail::x_power<S>(1), p) : p;
            break;
        }
        case ReducedKind::Dihedral: {
            Poly<S> xn1 = poly_sub(detail::x_power<S>(n), one);
            Poly<S> x2n1 = poly_sub(detail::x_power<S>(2 * n), one);
            Poly<S> x = detail::x_power<S>(1);
            Poly<S> prefix;
            switch (spec.row) {
                case 4: prefix = one; break;
                case 5: prefix = xn1; break;
                case 6: prefix = x; break;
                case 7: prefix = x2n1; break;
                case 8: prefix = poly_mul(x, xn1); break;
                default: prefix = poly_mul(x, x2n1); break;
            }
            F = prefix;
            for (const auto& l : L) F = poly_mul(F, dihedral_factor<S>(n, l));
            break;
        }
        case ReducedKind::A4: {
            Poly<S> T = poly_mul(detail::x_power<S>(1), poly_sub(detail::x_power<S>(4), one));
            switch (spec.row) {
                case 10: F = one; break;
                case 11: F = a4_quartic<S>(); break;
                case 12: F = a4_octic<S>(); break;
                case 13: F = T; break;
                case 14: F = poly_mul(T, a4_quartic<S>()); break;
                default: F = poly_mul(T, a4_octic<S>()); break;
            }
            for (const auto& l : L) {
                if (is_zero(l * l + S(108))) throw FamilyError("A4 parameter with l^2 + 108 = 0");
                F = poly_mul(F, a4_factor<S>(l));
            }
            break;
        }
        case ReducedKind::S4: {
            static const char* pre[] = {"", "S", "T", "ST", "R", "RS", "RT", "RST"};
            std::string code = pre[spec.row - 16];
            F = one;
            for (char c : code)
                F = poly_mul(F, c == 'R' ? s4_R<S>() : c == 'S' ? s4_S<S>() : octahedral_T<S>());
            for (const auto& l : L) F = poly_mul(F, s4_factor<S>(l));
            break;
        }
        case ReducedKind::A5: {
            static const char* pre[] = {"", "T", "ST", "S", "R", "RT", "RS", "RST"};
            std::string code = pre[spec.row - 24];
            F = one;
            for (char c : code)
                F = poly_mul(F, c == 'R' ? a5_R<S>(spec.a5) : c == 'S' ? a5_S<S>() : a5_T<S>(spec.a5));
            for (const auto& l : L) F = poly_mul(F, a5_factor<S>(l));
            break;
        }
        case ReducedKind::Trivial: throw FamilyError("no family for the trivial reduced group");
    }
    trim(F);
    long dF = poly_degree(F);
    if (dF != 2 * g + 2 && dF != 2 * g + 1)
        throw FamilyError("row " + std::to_string(spec.row) + " produced affine degree " + std::to_string(dF) +
                          " at g=" + std::to_string(g));
    BinaryForm<S> form = homogenize(F, 2 * g + 2);
    if (!is_squarefree_form(form))
        throw NotSquarefree("parameters put the curve on a degenerate locus (repeated branch point)");
    return HyperellipticCurve<S>(g, std::move(form));
}

}  // namespace hyperaut

#endif
