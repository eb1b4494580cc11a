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
   Typed view of the group registry (table1_data.hpp): row records, instantiation
   at a genus, canonical group names and the Hurwitz / Wiman bounds.
*/

#ifndef HYPERAUT_REGISTRY_HPP
#define HYPERAUT_REGISTRY_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "exactnum.hpp"
#include "table1_data.hpp"

namespace hyperaut {

enum class ReducedKind { Trivial, Cyclic, Dihedral, A4, S4, A5 };

struct ReducedType {
    ReducedKind kind = ReducedKind::Trivial;
    long n = 1;  // Cyclic(n), Dihedral(n); unused otherwise

    long order() const {
        switch (kind) {
            case ReducedKind::Trivial: return 1;
            case ReducedKind::Cyclic: return n;
            case ReducedKind::Dihedral: return 2 * n;
            case ReducedKind::A4: return 12;
            case ReducedKind::S4: return 24;
            case ReducedKind::A5: return 60;
        }
        return 0;
    }
    std::string str() const {
        switch (kind) {
            case ReducedKind::Trivial: return "trivial";
            case ReducedKind::Cyclic: return "Z" + std::to_string(n);
            case ReducedKind::Dihedral: return "D" + std::to_string(n);
            case ReducedKind::A4: return "A4";
            case ReducedKind::S4: return "S4";
            case ReducedKind::A5: return "A5";
        }
        return "?";
    }
    friend bool operator==(const ReducedType& a, const ReducedType& b) {
        if (a.kind != b.kind) return false;
        return (a.kind != ReducedKind::Cyclic && a.kind != ReducedKind::Dihedral) || a.n == b.n;
    }
};

/// Parses "Zn", "Dn", "A4", "S4", "A5" (row labels) or "Z5", "D3", "trivial".
inline ReducedType parse_reduced(const std::string& s) {
    if (s == "trivial") return {ReducedKind::Trivial, 1};
    if (s == "A4") return {ReducedKind::A4, 1};
    if (s == "S4") return {ReducedKind::S4, 1};
    if (s == "A5") return {ReducedKind::A5, 1};
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'D')) {
        ReducedKind k = s[0] == 'Z' ? ReducedKind::Cyclic : ReducedKind::Dihedral;
        if (s.substr(1) == "n") return {k, 0};
        return {k, std::stol(s.substr(1))};
    }
    throw std::invalid_argument("unknown reduced group '" + s + "'");
}

/// Linear expression a*n + b written as "n", "2n", "4", "2n+3".
inline long eval_linear(const std::string& e, long n) {
    std::string s;
    for (char c : e)
        if (c != ' ') s += c;
    long total = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        long coef = j > i ? std::stol(s.substr(i, j - i)) : 1;
        if (j < s.size() && s[j] == 'n') {
            total += sign * coef * n;
            ++j;
        } else {
            if (j == i) throw std::invalid_argument("bad expression '" + e + "'");
            total += sign * coef;
        }
        i = j;
    }
    return total;
}

struct Table1Row {
    int index = 0;
    std::string group;  // row label, e.g. "Z2xZn", "GL2(3)"
    ReducedType reduced;
    long delta_a = 0, delta_b = 0, delta_den = 0;  // den == 0 means n
    Rational delta_offset;
    std::vector<std::string> constraints;
    std::string signature;
    std::vector<std::pair<std::string, std::string>> markers;
    std::string phi;
    std::string involutions;
    bool involutions_merged = false;

    bool parametrized() const {
        return reduced.kind == ReducedKind::Cyclic || reduced.kind == ReducedKind::Dihedral;
    }

    /// delta at (g, n) as a rational; the row applies only when it is a nonnegative integer.
    Rational delta(long g, long n) const {
        long den = delta_den == 0 ? n : delta_den;
        Rational v(delta_a * g + delta_b, den);
        v.canonicalize();
        return v + delta_offset;
    }
};

/// Canonical name of a row label at a given n.
inline std::string canonical_group_name(const std::string& label, long n) {
    const std::string N = std::to_string(n), N2 = std::to_string(2 * n);
    if (label == "Z2xZn") return n % 2 ? "Z" + N2 : "Z2xZ" + N;
    if (label == "Z2n") return "Z" + N2;
    if (label == "Z2xDn") {
        if (n % 2) return "D" + N2;
        if (n == 2) return "Z2xZ2xZ2";
        return "Z2xD" + N;
    }
    if (label == "D2n") return "D" + N2;
    if (label == "Vn") return n == 2 ? "D4" : "V" + N;
    if (label == "Hn") return n == 2 ? "Z2xZ4" : "H" + N;
    if (label == "Un") return n == 2 ? "Z2xZ4" : "U" + N;
    if (label == "Gn") return n == 2 ? "Q8" : "G" + N;
    return label;
}

struct Exclusion {
    std::string group;    // row label, empty if keyed by reduced group
    std::string reduced;  // e.g. "D3"
    long genus = 0;       // 0: all genera
    std::string note;
};

class Registry {
   public:
    explicit Registry(const std::string& text) : raw_(nlohmann::json::parse(text)) {
        version_ = raw_.at("version").get<std::string>();
        for (const auto& r : raw_.at("rows")) {
            Table1Row row;
            row.index = r.at("index").get<int>();
            row.group = r.at("group").get<std::string>();
            row.reduced = parse_reduced(r.at("reduced").get<std::string>());
            const auto& d = r.at("delta");
            row.delta_a = d.at("a").get<long>();
            row.delta_b = d.at("b").get<long>();
            row.delta_den = d.at("den").is_string() ? 0 : d.at("den").get<long>();
            row.delta_offset = parse_rational(d.at("offset").get<std::string>());
            row.constraints = r.at("constraints").get<std::vector<std::string>>();
            row.signature = r.at("signature").get<std::string>();
            for (const auto& m : r.at("markers")) row.markers.emplace_back(m.at(0), m.at(1));
            row.phi = r.at("phi").get<std::string>();
            row.involutions = r.at("involutions").get<std::string>();
            row.involutions_merged = r.at("involutions_cell").get<std::string>() == "merged";
            rows_.push_back(std::move(row));
        }
        for (const auto& e : raw_.at("exclusions")) {
            Exclusion x;
            x.group = e.value("group", "");
            x.reduced = e.value("reduced", "");
            x.genus = e.value("genus", 0L);
            x.note = e.value("note", "");
            exclusions_.push_back(std::move(x));
        }
    }

    const std::string& version() const { return version_; }
    const std::vector<Table1Row>& rows() const { return rows_; }
    const std::vector<Exclusion>& exclusions() const { return exclusions_; }
    const nlohmann::json& raw() const { return raw_; }

    const Table1Row& row(int index) const {
        for (const auto& r : rows_)
            if (r.index == index) return r;
        throw std::out_of_range("no registry row " + std::to_string(index));
    }

   private:
    nlohmann::json raw_;
    std::string version_;
    std::vector<Table1Row> rows_;
    std::vector<Exclusion> exclusions_;
};

inline const Registry& registry() {
    static const Registry r(data::table1_json);
    return r;
}

/// A registry row instantiated at genus g (and n for the cyclic / dihedral rows).
struct Table1Entry {
    const Table1Row* row = nullptr;
    long genus = 0;
    long n = 0;
    long delta = 0;
    std::string name;
    ReducedType reduced;
    long order = 0;
    std::optional<long> involutions;
    // evaluated non-generic signature markers (cycle length, count)
    std::vector<std::pair<long, long>> markers;
};

inline bool constraint_holds(const std::string& c, long g, long n, long delta) {
    if (c == "n<g+1") return n < g + 1;
    if (c == "n<g") return n < g;
    if (c == "g!=2") return g != 2;
    if (c == "delta!=0") return delta != 0;
    if (c == "n even") return n % 2 == 0;
    throw std::invalid_argument("unknown registry constraint '" + c + "'");
}

inline bool excluded(const Registry& reg, const Table1Entry& e) {
    for (const auto& x : reg.exclusions()) {
        if (x.genus != 0 && x.genus != e.genus) continue;
        if (!x.group.empty() && (x.group == e.name || (e.row->parametrized() && x.group == e.row->group.substr(0, 1) + std::to_string(e.n))))
            return true;
        if (!x.reduced.empty() && parse_reduced(x.reduced) == e.reduced) return true;
    }
    return false;
}

/// Instantiates a row; nullopt when delta is not a nonnegative integer or a side condition fails.
inline std::optional<Table1Entry> instantiate(const Table1Row& row, long g, long n = 0) {
    if (row.parametrized() && n < 2) return std::nullopt;
    Rational dq = row.delta(g, n);
    if (dq.get_den() != 1 || sgn(dq) < 0) return std::nullopt;
    long delta = dq.get_num().get_si();
    for (const auto& c : row.constraints)
        if (!constraint_holds(c, g, n, delta)) return std::nullopt;
    Table1Entry e;
    e.row = &row;
    e.genus = g;
    e.n = row.parametrized() ? n : 0;
    e.delta = delta;
    e.reduced = row.reduced;
    if (row.parametrized()) e.reduced.n = n;
    e.order = 2 * e.reduced.order();
    e.name = canonical_group_name(row.group, n);
    if (!row.involutions.empty()) e.involutions = eval_linear(row.involutions, n);
    for (const auto& [len, cnt] : row.markers) e.markers.emplace_back(eval_linear(len, n), eval_linear(cnt, n));
    if (excluded(registry(), e)) return std::nullopt;
    return e;
}

struct LookupFilter {
    std::optional<std::string> group;  // row label or canonical name
    std::optional<ReducedType> reduced;  // n == 0 matches every n
};

/// All admissible rows at genus g, n ranging over 2..2g+2 for the parametrized rows.
inline std::vector<Table1Entry> table1_lookup(long g, const LookupFilter& filter = {}) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    std::vector<Table1Entry> out;
    auto keep = [&](const Table1Entry& e) {
        if (filter.group && *filter.group != e.name && *filter.group != e.row->group) return false;
        if (filter.reduced) {
            const ReducedType& r = *filter.reduced;
            if (r.kind != e.reduced.kind) return false;
            if (r.n != 0 && e.row->parametrized() && r.n != e.reduced.n) return false;
        }
        return true;
    };
    for (const auto& row : registry().rows()) {
        if (row.parametrized()) {
            for (long n = 2; n <= 2 * g + 2; ++n)
                if (auto e = instantiate(row, g, n); e && keep(*e)) out.push_back(*e);
        } else if (auto e = instantiate(row, g); e && keep(*e)) {
            out.push_back(*e);
        }
    }
    return out;
}

/// Hurwitz bound on the group order and Wiman bound on element orders.
inline bool bounds_check(long g, long claimed_order, long max_element_order) {
    return claimed_order <= 84 * (g - 1) && max_element_order <= 2 * (2 * g + 1);
}

}  // namespace hyperaut

#endif
