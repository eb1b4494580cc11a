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
   Classical covariants and invariants of a binary form of degree d = 2g + 2,
   the absolute invariants built from them, the moduli point used for
   genus 4..12 and the vanishing predicates for A4, S4 and A5 reduced groups.
*/

#ifndef HYPERAUT_INVARIANTS_HPP
#define HYPERAUT_INVARIANTS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binform.hpp"

namespace hyperaut {

enum class Inv { I2, I3, I4, I4p, I6, I6p, I6pp, I12 };

inline constexpr std::array<Inv, 8> all_invariants{Inv::I2, Inv::I3, Inv::I4, Inv::I4p,
                                                   Inv::I6, Inv::I6p, Inv::I6pp, Inv::I12};

inline const char* name(Inv i) {
    switch (i) {
        case Inv::I2: return "I2";
        case Inv::I3: return "I3";
        case Inv::I4: return "I4";
        case Inv::I4p: return "I4p";
        case Inv::I6: return "I6";
        case Inv::I6p: return "I6p";
        case Inv::I6pp: return "I6pp";
        case Inv::I12: return "I12";
    }
    return "?";
}

/// Degree in the coefficients of F.
inline long invariant_degree(Inv i) {
    switch (i) {
        case Inv::I2: return 2;
        case Inv::I3: return 3;
        case Inv::I4:
        case Inv::I4p: return 4;
        case Inv::I6:
        case Inv::I6p:
        case Inv::I6pp: return 6;
        case Inv::I12: return 12;
    }
    return 0;
}

/// A value that may be undefined; `reason` says why.
template <class T>
struct Maybe {
    std::optional<T> value;
    std::string reason;

    bool defined() const { return value.has_value(); }
    static Maybe undefined(std::string why) { return Maybe{std::nullopt, std::move(why)}; }
    static Maybe of(T v) { return Maybe{std::move(v), {}}; }
};

class DegreeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

template <class S>
struct InvariantVector {
    long degree = 0;
    std::map<Inv, Maybe<S>> values;
    // covariants, keyed by a label such as "J4", "Jd", "(F,J4)^4", "M"
    std::map<std::string, Maybe<BinaryForm<S>>> covariants;

    const Maybe<S>& operator[](Inv i) const { return values.at(i); }
    bool is_zero(Inv i) const {
        const auto& m = values.at(i);
        return m.defined() && hyperaut::is_zero(*m.value);
    }
    bool is_nonzero(Inv i) const {
        const auto& m = values.at(i);
        return m.defined() && !hyperaut::is_zero(*m.value);
    }
};

namespace detail {

template <class S>
Maybe<BinaryForm<S>> chain(const Maybe<BinaryForm<S>>& a, const Maybe<BinaryForm<S>>& b, long r,
                           const std::string& label) {
    if (!a.defined()) return Maybe<BinaryForm<S>>::undefined(a.reason);
    if (!b.defined()) return Maybe<BinaryForm<S>>::undefined(b.reason);
    long n = a.value->degree(), m = b.value->degree();
    if (r < 0 || r > std::min(n, m))
        return Maybe<BinaryForm<S>>::undefined(label + ": transvectant index " + std::to_string(r) +
                                               " outside [0, " + std::to_string(std::min(n, m)) + "]");
    return Maybe<BinaryForm<S>>::of(transvect(*a.value, *b.value, r));
}

template <class S>
Maybe<S> scalar_of(const Maybe<BinaryForm<S>>& f) {
    if (!f.defined()) return Maybe<S>::undefined(f.reason);
    return Maybe<S>::of((*f.value)[0]);
}

}  // namespace detail

/// Evaluates the transvectant chains for I2, I3, I4, I4', I6, I6', I6'', I12 of a form of even degree d >= 6.
/// Entries whose chain needs an index above an operand degree are undefined, never zero.
/// With `all_covariants` every J_{4j}, 1 <= j <= g, is kept; otherwise only J4, J8, J12.
template <class S>
InvariantVector<S> classical_invariants(const BinaryForm<S>& F, bool all_covariants = false) {
    long d = F.degree();
    if (d < 6 || d % 2 != 0) throw DegreeError("invariants need an even degree d >= 6, got " + std::to_string(d));
    long g = (d - 2) / 2;
    using MF = Maybe<BinaryForm<S>>;
    InvariantVector<S> out;
    out.degree = d;
    MF f = MF::of(F);

    for (long j = 1; j <= (all_covariants ? g : std::min(g, 3L)); ++j)
        out.covariants["J" + std::to_string(4 * j)] = detail::chain(f, f, d - 2 * j, "J" + std::to_string(4 * j));
    auto J = [&](long k) -> MF {
        auto it = out.covariants.find("J" + std::to_string(k));
        if (it == out.covariants.end())
            return MF::undefined("J" + std::to_string(k) + " needs g >= " + std::to_string(k / 4));
        return it->second;
    };
    MF J4 = J(4), J8 = J(8), J12 = J(12);
    MF Jd = detail::chain(f, f, d / 2, "Jd");
    out.covariants["Jd"] = Jd;

    MF A = detail::chain(f, J4, 4, "(F,J4)^4");
    MF B = detail::chain(f, J8, 8, "(F,J8)^8");
    MF C = detail::chain(f, J12, 12, "(F,J12)^12");
    out.covariants["(F,J4)^4"] = A;
    out.covariants["(F,J8)^8"] = B;
    out.covariants["(F,J12)^12"] = C;
    MF Mc = detail::chain(A, B, d - 10, "M");
    out.covariants["M"] = Mc;

    out.values[Inv::I2] = detail::scalar_of(detail::chain(f, f, d, "I2"));
    out.values[Inv::I4] = detail::scalar_of(detail::chain(J4, J4, 4, "I4"));
    out.values[Inv::I4p] = detail::scalar_of(detail::chain(J8, J8, 8, "I4p"));
    out.values[Inv::I6] = detail::scalar_of(detail::chain(A, A, d - 4, "I6"));
    out.values[Inv::I6p] = detail::scalar_of(detail::chain(B, B, d - 8, "I6p"));
    out.values[Inv::I6pp] = detail::scalar_of(detail::chain(C, C, d - 12, "I6pp"));
    out.values[Inv::I3] = detail::scalar_of(detail::chain(f, Jd, d, "I3"));
    out.values[Inv::I12] = detail::scalar_of(detail::chain(Mc, Mc, 8, "I12"));
    return out;
}

enum class Abs { i1, i2, i3, j1, j2, s1, s2, v1, v2, v3, v4, v5 };

inline constexpr std::array<Abs, 12> all_absolute{Abs::i1, Abs::i2, Abs::i3, Abs::j1, Abs::j2, Abs::s1,
                                                  Abs::s2, Abs::v1, Abs::v2, Abs::v3, Abs::v4, Abs::v5};

inline const char* name(Abs a) {
    static const char* names[] = {"i1", "i2", "i3", "j1", "j2", "s1", "s2", "v1", "v2", "v3", "v4", "v5"};
    return names[static_cast<int>(a)];
}

/// (numerator invariant, exponent, denominator invariant, exponent) for each absolute invariant.
struct AbsRecipe {
    Inv num;
    long num_exp;
    Inv den;
    long den_exp;
};

inline AbsRecipe recipe(Abs a) {
    switch (a) {
        case Abs::i1: return {Inv::I4p, 1, Inv::I2, 2};
        case Abs::i2: return {Inv::I3, 2, Inv::I2, 3};
        case Abs::i3: return {Inv::I6pp, 1, Inv::I2, 3};
        case Abs::j1: return {Inv::I6p, 1, Inv::I3, 2};
        case Abs::j2: return {Inv::I6, 1, Inv::I3, 2};
        case Abs::s1: return {Inv::I6, 2, Inv::I12, 1};
        case Abs::s2: return {Inv::I6p, 2, Inv::I12, 1};
        case Abs::v1: return {Inv::I6, 1, Inv::I6pp, 1};
        case Abs::v2: return {Inv::I4p, 3, Inv::I3, 4};
        case Abs::v3: return {Inv::I6, 1, Inv::I6p, 1};
        case Abs::v4: return {Inv::I6pp, 2, Inv::I3, 4};
        case Abs::v5: return {Inv::I6pp, 1, Inv::I6p, 1};
    }
    throw std::logic_error("unknown absolute invariant");
}

template <class S>
using AbsoluteInvariants = std::map<Abs, Maybe<S>>;

template <class S>
Maybe<S> absolute_invariant(const InvariantVector<S>& iv, Abs a) {
    AbsRecipe r = recipe(a);
    const Maybe<S>& num = iv[r.num];
    const Maybe<S>& den = iv[r.den];
    if (!den.defined()) return Maybe<S>::undefined(std::string(name(r.den)) + " undefined: " + den.reason);
    if (is_zero(*den.value)) return Maybe<S>::undefined(std::string(name(r.den)) + " = 0");
    if (!num.defined()) return Maybe<S>::undefined(std::string(name(r.num)) + " undefined: " + num.reason);
    return Maybe<S>::of(power(*num.value, r.num_exp) / power(*den.value, r.den_exp));
}

template <class S>
AbsoluteInvariants<S> absolute_invariants(const InvariantVector<S>& iv) {
    AbsoluteInvariants<S> out;
    for (Abs a : all_absolute) out[a] = absolute_invariant(iv, a);
    return out;
}

class GenusNotCovered : public std::invalid_argument {
   public:
    explicit GenusNotCovered(long g)
        : std::invalid_argument("genus " + std::to_string(g) + " not covered by the moduli point table") {}
};

class ModuliPointUndefined : public std::domain_error {
   public:
    explicit ModuliPointUndefined(const std::string& why)
        : std::domain_error("moduli point undefined, defer to oracle: " + why) {}
};

template <class S>
struct ModuliPoint {
    std::vector<S> components;
    std::string branch;  // e.g. "(i1,i2)" or "v2"
    std::vector<Abs> coordinates;
};

inline bool moduli_point_genus(long g) { return g == 4 || g == 5 || g == 7 || g == 8 || g == 9 || g == 10 || g == 12; }

/// The piecewise moduli point for 4 <= g <= 12, g in {4, 5, 7, 8, 9, 10, 12}.
template <class S>
ModuliPoint<S> moduli_point(const InvariantVector<S>& iv) {
    long g = (iv.degree - 2) / 2;
    if (!moduli_point_genus(g)) throw GenusNotCovered(g);
    auto require_defined = [&](Inv i) {
        if (!iv[i].defined()) throw ModuliPointUndefined(std::string(name(i)) + " undefined (" + iv[i].reason + ")");
    };
    std::vector<Abs> coords;
    std::string branch;
    auto pick = [&](Inv gate, std::vector<Abs> nonzero_case, Abs zero_case, const char* nz_name, const char* z_name) {
        require_defined(gate);
        if (!is_zero(*iv[gate].value)) {
            coords = std::move(nonzero_case);
            branch = nz_name;
        } else {
            coords = {zero_case};
            branch = z_name;
        }
    };
    switch (g) {
        case 4:
            coords = {Abs::v1};
            branch = "v1";
            break;
        case 5:
        case 9: pick(Inv::I2, {Abs::i1, Abs::i2}, Abs::v2, "(i1,i2)", "v2"); break;
        case 7: pick(Inv::I3, {Abs::j1, Abs::j2}, Abs::v3, "(j1,j2)", "v3"); break;
        case 8:
        case 12: pick(Inv::I2, {Abs::i1, Abs::i3}, Abs::v4, "(i1,i3)", "v4"); break;
        case 10: pick(Inv::I12, {Abs::s2, Abs::s1}, Abs::v5, "(s2,s1)", "v5"); break;
    }
    ModuliPoint<S> p;
    p.branch = branch;
    p.coordinates = coords;
    for (Abs a : coords) {
        Maybe<S> v = absolute_invariant(iv, a);
        if (!v.defined()) throw ModuliPointUndefined(std::string(name(a)) + ": " + v.reason);
        p.components.push_back(*v.value);
    }
    return p;
}

enum class LargeReduced { A4, S4, A5 };

inline const char* name(LargeReduced t) {
    switch (t) {
        case LargeReduced::A4: return "A4";
        case LargeReduced::S4: return "S4";
        case LargeReduced::A5: return "A5";
    }
    return "?";
}

/// Invariants that must vanish for a genus-g curve whose reduced group is `target`.
inline std::vector<Inv> required_vanishing(LargeReduced target, long g) {
    switch (target) {
        case LargeReduced::A4:
            if (g == 4) return {Inv::I2, Inv::I4, Inv::I4p, Inv::I6p};
            if (g == 5 || g == 9 || g == 12) return {Inv::I4, Inv::I6};
            if (g == 7 || g == 10) return {Inv::I2, Inv::I4, Inv::I4p, Inv::I6pp};
            return {Inv::I4};
        case LargeReduced::S4: return {Inv::I4};
        case LargeReduced::A5: return {Inv::I4, Inv::I4p, Inv::I6, Inv::I6p, Inv::I12};
    }
    return {};
}

struct VanishingReport {
    LargeReduced target;
    long genus;
    struct Item {
        Inv invariant;
        bool defined;
        bool vanishes;
    };
    std::vector<Item> items;
    bool passed() const {
        for (const auto& it : items)
            if (!it.defined || !it.vanishes) return false;
        return true;
    }
};

template <class S>
VanishingReport lemma_vanishing_check(const InvariantVector<S>& iv, LargeReduced target) {
    long g = (iv.degree - 2) / 2;
    VanishingReport rep{target, g, {}};
    for (Inv i : required_vanishing(target, g)) rep.items.push_back({i, iv[i].defined(), iv.is_zero(i)});
    return rep;
}

}  // namespace hyperaut

#endif
