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
   JSON encoding of scalars, forms, curves and every report type.

   Scalars are strings: "p/q" for rationals, "a + b*sqrt(m)" for elements of
   Q(sqrt m). Numeric values carry a "re"/"im" pair of decimal strings.
*/

#ifndef HYPERAUT_SERIALIZE_HPP
#define HYPERAUT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"

namespace hyperaut {

using json = nlohmann::ordered_json;

// ---- scalars

inline json to_json_scalar(const Rational& x) { return to_string(x); }
inline json to_json_scalar(const QuadExt& x) { return x.str(); }

inline json to_json_complex(const Complex& z, int digits = 30) {
    return json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
}

/// Parses "p/q", "a + b*sqrt(m)", "a - b*sqrt(m)", "b*sqrt(m)" or "sqrt(m)" (spaces ignored).
inline QuadExt parse_scalar(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return QuadExt(parse_rational(s));
    auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size())
        throw std::invalid_argument("not a scalar literal: '" + std::string(text) + "'");
    long m = 0;
    try {
        m = std::stol(s.substr(pos + 5, close - pos - 5));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad radicand in '" + std::string(text) + "'");
    }
    if (!is_squarefree(m) || m == 1) throw std::invalid_argument("radicand must be squarefree and != 1");
    std::string head = s.substr(0, pos);  // "a+b*", "a-b*", "b*", "", "-"
    Rational a(0), b(1);
    if (!head.empty()) {
        if (head.back() == '*') head.pop_back();
        // split off the rational part at the last sign that is not leading
        std::size_t cut = std::string::npos;
        for (std::size_t i = head.size(); i-- > 1;)
            if (head[i] == '+' || head[i] == '-') {
                cut = i;
                break;
            }
        std::string coef = head;
        if (cut != std::string::npos) {
            a = parse_rational(head.substr(0, cut));
            coef = head.substr(cut);
        }
        if (coef == "+" || coef.empty()) b = 1;
        else if (coef == "-") b = -1;
        else b = parse_rational(coef);
    }
    return QuadExt(a, b, m);
}

// ---- forms and curves

template <class S>
json form_json(const BinaryForm<S>& f) {
    json c = json::array();
    for (const auto& x : f.coeffs()) c.push_back(to_json_scalar(x));
    return json{{"degree", f.degree()}, {"coeffs", c}};
}

template <class S>
json map_json(const MoebiusMap<S>& m) {
    return json::array({to_json_scalar(m.a), to_json_scalar(m.b), to_json_scalar(m.c), to_json_scalar(m.d)});
}

struct FamilyOrigin {
    int row = 0;
    long n = 0;
    std::vector<QuadExt> lambdas;
};

template <class S>
json curve_json(const HyperellipticCurve<S>& C, const std::optional<FamilyOrigin>& origin = std::nullopt) {
    json j{{"genus", C.genus()}, {"form", form_json(C.F())}};
    if (origin) {
        json l = json::array();
        for (const auto& x : origin->lambdas) l.push_back(to_json_scalar(x));
        j["family"] = json{{"row", origin->row}, {"n", origin->n}, {"lambdas", l}};
    }
    return j;
}

/// Inverse of curve_json; the form must have degree 2g+2 and be squarefree.
inline HyperellipticCurve<QuadExt> curve_from_json(const json& j) {
    long g = j.at("genus").get<long>();
    const json& f = j.at("form");
    std::vector<QuadExt> c;
    for (const auto& x : f.at("coeffs")) c.push_back(parse_scalar(x.get<std::string>()));
    if (static_cast<long>(c.size()) != f.at("degree").get<long>() + 1)
        throw std::invalid_argument("form degree and coefficient count disagree");
    return HyperellipticCurve<QuadExt>(g, BinaryForm<QuadExt>(std::move(c)));
}

inline std::optional<FamilyOrigin> origin_from_json(const json& j) {
    if (!j.contains("family")) return std::nullopt;
    const json& f = j.at("family");
    FamilyOrigin o{f.at("row").get<int>(), f.at("n").get<long>(), {}};
    for (const auto& x : f.at("lambdas")) o.lambdas.push_back(parse_scalar(x.get<std::string>()));
    return o;
}

// ---- invariants

template <class S>
json maybe_map_json(const std::map<Inv, Maybe<S>>& values) {
    json out = json::object(), reasons = json::object();
    for (Inv i : all_invariants) {
        auto it = values.find(i);
        if (it == values.end()) continue;
        if (it->second.defined()) out[name(i)] = to_json_scalar(*it->second.value);
        else {
            out[name(i)] = nullptr;
            reasons[name(i)] = it->second.reason;
        }
    }
    if (!reasons.empty()) out["reason"] = reasons;
    return out;
}

template <class S>
json invariants_json(const InvariantVector<S>& iv) {
    json j = maybe_map_json(iv.values);
    j["degree"] = iv.degree;
    return j;
}

template <class S>
json absolute_json(const AbsoluteInvariants<S>& a) {
    json out = json::object(), reasons = json::object();
    for (Abs x : all_absolute) {
        const auto& m = a.at(x);
        if (m.defined()) out[name(x)] = to_json_scalar(*m.value);
        else {
            out[name(x)] = nullptr;
            reasons[name(x)] = m.reason;
        }
    }
    if (!reasons.empty()) out["reason"] = reasons;
    return out;
}

template <class S>
json moduli_point_json(const ModuliPoint<S>& p) {
    json c = json::array(), names = json::array();
    for (const auto& x : p.components) c.push_back(to_json_scalar(x));
    for (Abs a : p.coordinates) names.push_back(name(a));
    return json{{"branch", p.branch}, {"coordinates", names}, {"values", c}};
}

// ---- symmetry oracle

inline json evidence_json(const OracleEvidence& e) {
    json orders = json::object();
    for (const auto& [o, c] : e.element_orders) orders[std::to_string(o)] = c;
    json orbits = json::array();
    for (const auto& o : e.orbits)
        orbits.push_back({{"size", o.size}, {"stabilizer", o.stabilizer}, {"in_branch_set", o.in_branch_set}});
    json markers = json::array();
    for (const auto& [len, cnt] : e.markers) markers.push_back(json::array({len, cnt}));
    json j{{"exact", e.exact},
           {"radicand", e.radicand},
           {"precision", e.precision},
           {"tol_bits", e.tol_bits},
           {"element_orders", orders},
           {"special_orbits", orbits},
           {"free_branch_orbits", e.free_branch_orbits},
           {"markers", markers},
           {"delta", e.delta},
           {"candidates", e.candidates},
           {"matched_rows", e.matched_rows},
           {"involutions_observed", e.involutions_observed},
           {"max_lift_order", e.max_lift_order},
           {"bounds_ok", e.bounds_ok}};
    j["involutions_tabulated"] = e.involutions_tabulated ? json(*e.involutions_tabulated) : json(nullptr);
    return j;
}

inline json verdict_json(const GroupVerdict& v) {
    return json{{"reduced", v.reduced.str()},
                {"full", v.full_name},
                {"order", v.order},
                {"determined", v.determined},
                {"evidence", evidence_json(v.evidence)}};
}

// ---- dihedral

inline json tuple_json(const DihedralTuple& u) {
    json vals = json::array(), approx = json::array();
    for (const auto& v : u.values) vals.push_back(to_json_scalar(v));
    for (const auto& v : u.approx) approx.push_back(to_json_complex(v));
    json j{{"j", u.level}, {"exact", u.exact}, {"recognized", u.recognized}, {"values", vals}};
    if (!u.approx.empty()) j["approx"] = approx;
    return j;
}

inline json decomposition_json(const NormalDecomposition& D) {
    json j{{"kind", to_string(D.kind)}, {"n", D.n}, {"t", D.t}, {"s", D.degree_s}, {"exact", D.exact}};
    json h = json::array();
    if (D.exact) {
        for (const auto& x : D.h) h.push_back(to_json_scalar(x));
    } else {
        for (const auto& x : D.h_approx) h.push_back(to_json_complex(x));
    }
    j["inner"] = h;
    if (auto c = D.coeffs()) {
        json a = json::array();
        for (const auto& x : *c) a.push_back(to_json_scalar(x));
        j["coeffs"] = a;
    } else {
        j["coeffs"] = nullptr;
        if (D.exact) j["rho"] = to_json_scalar(D.rho());
    }
    j["witness_map"] = D.witness_map ? map_json(*D.witness_map) : json(nullptr);
    return j;
}

inline json genus2_json(const Genus2Verdict& v) {
    return json{{"name", v.name}, {"exact", v.exact}, {"boundary", v.boundary}, {"note", v.note}};
}

/// {n, t, s, kind, coeffs, levels: [{j, values}]}
inline json dihedral_json(const NormalDecomposition& D) {
    json j = decomposition_json(D);
    json levels = json::array();
    if (D.t >= 2) {
        for (const auto& u : dihedral_levels(D)) levels.push_back(tuple_json(u));
    }
    j["levels"] = levels;
    return j;
}

// ---- classification

inline json locus_json(const LocusTest& l) {
    json j{{"row", l.row}, {"group", l.group}, {"delta", l.delta}, {"order", l.order}, {"status", to_string(l.status)}};
    if (l.n) j["n"] = l.n;
    if (l.lambda) j["lambda"] = to_json_scalar(*l.lambda);
    if (l.lambda_approx)
        j["lambda_approx"] = json{{"re", l.lambda_approx->real()}, {"im", l.lambda_approx->imag()}};
    if (!l.exact) j["exact"] = false;
    if (!l.note.empty()) j["note"] = l.note;
    return j;
}

inline json algorithm1_json(const Algorithm1Result& a) {
    json j{{"genus", a.genus}, {"in_range", a.in_range}, {"invariants", maybe_map_json(a.invariants)},
           {"early_exit", a.early_exit}};
    j["moduli_point"] = a.point ? moduli_point_json(*a.point) : json(nullptr);
    json loci = json::array();
    for (const auto& l : a.loci) loci.push_back(locus_json(l));
    j["loci"] = loci;
    if (!a.note.empty()) j["note"] = a.note;
    return j;
}

inline json algorithm3_json(const Algorithm3Result& r) {
    json j{{"s", r.s}, {"step", r.step}, {"verdict", r.verdict.full_name}};
    j["decomposition"] = r.decomposition ? decomposition_json(*r.decomposition) : json(nullptr);
    j["dihedral"] = r.dihedral ? tuple_json(*r.dihedral) : json(nullptr);
    if (r.genus2) j["genus2"] = genus2_json(*r.genus2);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline json report_json(const ClassificationReport& r) {
    json j{{"mode", to_string(r.mode)}, {"route", to_string(r.route)}, {"verdict", verdict_json(r.verdict)}};
    json ev = json::object();
    ev["invariants"] = r.invariant_evidence ? algorithm1_json(*r.invariant_evidence) : json(nullptr);
    ev["algorithm3"] = r.algorithm3 ? algorithm3_json(*r.algorithm3) : json(nullptr);
    ev["oracle"] = r.oracle_verdict ? verdict_json(*r.oracle_verdict) : json(nullptr);
    j["evidence"] = ev;
    j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

// ---- registry

inline json entry_json(const Table1Entry& e) {
    json markers = json::array();
    for (const auto& [len, cnt] : e.markers) markers.push_back(json::array({len, cnt}));
    json j{{"row", e.row->index}, {"label", e.row->group}, {"name", e.name}, {"reduced", e.reduced.str()},
           {"order", e.order}, {"delta", e.delta}, {"signature", e.row->signature}, {"markers", markers}};
    if (e.row->parametrized()) j["n"] = e.n;
    j["involutions"] = e.involutions ? json(*e.involutions) : json(nullptr);
    return j;
}

}  // namespace hyperaut

#endif
