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

// hyperaut command-line tool. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 route disagreement, 4 precision exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperaut/hyperaut.hpp"

using namespace hyperaut;

namespace {

enum Exit { Ok = 0, Internal = 1, Invalid = 2, Disagree = 3, Precision = 4 };

class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    long precision = 256;
    long tol = 128;
    long radicand = 1;
    bool json_out = true;
    bool compact = false;
};

struct CurveArgs {
    std::string coeffs;
    std::string curve_file;
    long genus = 0;
};

void emit(const Globals& g, const json& j) {
    std::cout << (g.compact ? j.dump() : j.dump(2)) << "\n";
}

std::vector<QuadExt> parse_list(const std::string& text) {
    std::vector<QuadExt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
    if (out.empty()) throw InputError("empty coefficient list");
    return out;
}

json read_json_file(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return json::parse(in);
}

/// Curve from --coeffs (ascending affine coefficients) or --curve (JSON file).
HyperellipticCurve<QuadExt> read_curve(const CurveArgs& a, const Globals& G) {
    if (a.coeffs.empty() == a.curve_file.empty()) throw InputError("give exactly one of --coeffs and --curve");
    std::optional<HyperellipticCurve<QuadExt>> C;
    if (!a.curve_file.empty()) {
        C = curve_from_json(read_json_file(a.curve_file));
    } else {
        Poly<QuadExt> p = parse_list(a.coeffs);
        trim(p);
        long d = poly_degree(p);
        if (d < 5) throw InputError("degree " + std::to_string(d) + " too small for genus >= 2 (need 5 or more)");
        long g = (d - 1) / 2;
        C = HyperellipticCurve<QuadExt>(g, homogenize(p, 2 * g + 2));
    }
    if (a.genus && a.genus != C->genus())
        throw InputError("--genus " + std::to_string(a.genus) + " disagrees with the inferred genus " +
                         std::to_string(C->genus()));
    for (const auto& c : C->F().coeffs()) {
        long m = radicand_of(c);
        if (m != 1 && G.radicand != 1 && m != G.radicand)
            throw InputError("coefficient " + c.str() + " is outside Q(sqrt(" + std::to_string(G.radicand) + "))");
    }
    return *C;
}

bool is_rational_curve(const HyperellipticCurve<QuadExt>& C) {
    for (const auto& c : C.F().coeffs())
        if (!c.is_rational()) return false;
    return true;
}

HyperellipticCurve<Rational> rational_curve(const HyperellipticCurve<QuadExt>& C) {
    std::vector<Rational> c;
    for (const auto& x : C.F().coeffs()) c.push_back(as_rational(x));
    return HyperellipticCurve<Rational>(C.genus(), BinaryForm<Rational>(std::move(c)));
}

/// Calls f with the curve over Q when possible, over Q(sqrt m) otherwise.
template <class F>
json with_curve(const HyperellipticCurve<QuadExt>& C, F&& f) {
    if (is_rational_curve(C)) return f(rational_curve(C));
    return f(C);
}

OracleOptions oracle_options(const Globals& G) {
    if (G.precision < 64) throw InputError("--precision must be at least 64");
    if (G.tol < 16 || G.tol >= G.precision) throw InputError("--tol must lie in [16, precision)");
    OracleOptions o;
    o.prec = G.precision;
    o.tol_bits = G.tol;
    return o;
}

void add_curve_options(CLI::App* sub, CurveArgs& a) {
    sub->add_option("--coeffs", a.coeffs, "affine coefficients c0,c1,... ascending in X (\"p/q\", \"a+b*sqrt(m)\")");
    sub->add_option("--curve", a.curve_file, "curve JSON file as written by 'family gen' ('-' for stdin)");
    sub->add_option("--genus", a.genus, "expected genus");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and automorphism groups of hyperelliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals G;
    app.add_option("--precision", G.precision, "working precision in bits for numeric routes")->capture_default_str();
    app.add_option("--tol", G.tol, "acceptance tolerance 2^-k, k given here")->capture_default_str();
    app.add_option("--radicand", G.radicand, "squarefree m: scalars live in Q(sqrt m)");
    app.add_flag("--json,!--no-json", G.json_out, "JSON output (default on)");
    app.add_flag("--compact", G.compact, "single-line JSON");

    CurveArgs ca;
    bool all_cov = false;
    auto* inv = app.add_subcommand("invariants", "classical invariants I2 ... I12");
    add_curve_options(inv, ca);
    inv->add_flag("--all-covariants", all_cov, "keep every J_4j covariant");

    auto* absl = app.add_subcommand("absolute", "absolute invariants and the moduli point");
    add_curve_options(absl, ca);

    auto* dih = app.add_subcommand("dihedral", "normal decomposition and dihedral invariants");
    add_curve_options(dih, ca);

    auto* nf = app.add_subcommand("normalform", "normal decomposition Y^2 = F(X^n) or X F(X^n)");
    add_curve_options(nf, ca);

    bool oracle_flag = true;
    auto* aut = app.add_subcommand("autgroup", "automorphism group by the Moebius symmetry oracle");
    add_curve_options(aut, ca);
    aut->add_flag("--oracle", oracle_flag, "use the symmetry oracle (default)");

    std::string mode = "auto";
    auto* cls = app.add_subcommand("classify", "automorphism group by Algorithms 1-3 and the oracle");
    add_curve_options(cls, ca);
    cls->add_option("--mode", mode, "auto | invariants_only | oracle_only | cross")->capture_default_str();

    auto* fam = app.add_subcommand("family", "family curves");
    fam->require_subcommand(1);
    int row = 0;
    long fg = 0, fn = 0;
    std::string lambdas, a5reading = "corrected";
    auto* gen = fam->add_subcommand("gen", "generate a family member as curve JSON");
    gen->add_option("--row", row, "registry row 1..31")->required();
    gen->add_option("--genus", fg, "genus")->required();
    gen->add_option("--n", fn, "n for the cyclic and dihedral rows");
    gen->add_option("--lambda", lambdas, "comma-separated parameters");
    gen->add_option("--a5-reading", a5reading, "corrected | verbatim")->capture_default_str();
    std::string show_file;
    auto* show = fam->add_subcommand("show", "parse a curve JSON and write it back");
    show->add_option("--curve", show_file, "curve JSON file ('-' for stdin)")->required();

    long tg = 0;
    auto* tab = app.add_subcommand("table1", "registry rows");
    tab->add_option("--genus", tg, "list the rows admissible at this genus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Invalid;
    }
    if (!G.json_out) std::cerr << "note: only JSON output is implemented; writing JSON\n";

    try {
        if (G.radicand != 1 && !is_squarefree(G.radicand)) throw InputError("--radicand must be squarefree");
        if (inv->parsed()) {
            auto C = read_curve(ca, G);
            emit(G, with_curve(C, [&](const auto& D) {
                     json j = invariants_json(classical_invariants(D.F(), all_cov));
                     j["genus"] = D.genus();
                     return j;
                 }));
        } else if (absl->parsed()) {
            auto C = read_curve(ca, G);
            emit(G, with_curve(C, [&](const auto& D) {
                     auto iv = classical_invariants(D.F());
                     json j{{"genus", D.genus()}, {"absolute", absolute_json(absolute_invariants(iv))}};
                     j["moduli_point"] = nullptr;
                     if (moduli_point_genus(D.genus())) {
                         try {
                             j["moduli_point"] = moduli_point_json(moduli_point(iv));
                         } catch (const ModuliPointUndefined& e) {
                             j["moduli_point_reason"] = e.what();
                         }
                     } else {
                         j["moduli_point_reason"] = "no moduli point at genus " + std::to_string(D.genus());
                     }
                     return j;
                 }));
        } else if (dih->parsed() || nf->parsed()) {
            auto C = read_curve(ca, G);
            OracleOptions o = oracle_options(G);
            bool levels = dih->parsed();
            emit(G, with_curve(C, [&](const auto& D) {
                     auto R = symmetry_oracle(D, o);
                     auto N = normal_decomposition(D, R.group);
                     json j{{"genus", D.genus()}};
                     if (!N) {
                         j["s"] = 1;
                         j["decomposition"] = nullptr;
                         return j;
                     }
                     j["s"] = N->degree_s;
                     j["decomposition"] = levels ? dihedral_json(*N) : decomposition_json(*N);
                     if (levels && D.genus() == 2 && N->n == 2 && N->t == 3 &&
                         N->kind == DecompositionKind::EvenPart) {
                         DihedralTuple u = dihedral_invariants(*N);
                         if (!u.exact) recognize_tuple(u, o.tol_bits);
                         j["genus2"] = genus2_json(genus2_classify(u, o.tol_bits));
                     }
                     return j;
                 }));
        } else if (aut->parsed()) {
            auto C = read_curve(ca, G);
            OracleOptions o = oracle_options(G);
            emit(G, with_curve(C, [&](const auto& D) {
                     auto R = symmetry_oracle(D, o);
                     json j = verdict_json(R.verdict);
                     j["genus"] = D.genus();
                     j["reduced_elements"] = R.group.order();
                     return j;
                 }));
        } else if (cls->parsed()) {
            auto C = read_curve(ca, G);
            ClassifyOptions opt;
            opt.oracle = oracle_options(G);
            Mode m;
            try {
                m = parse_mode(mode);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            emit(G, with_curve(C, [&](const auto& D) { return report_json(classify(D, m, opt)); }));
        } else if (gen->parsed()) {
            FamilySpec<QuadExt> spec{row, fg, fn, {}};
            if (!lambdas.empty()) spec.lambdas = parse_list(lambdas);
            if (a5reading == "verbatim") spec.a5 = A5Reading::Verbatim;
            else if (a5reading != "corrected") throw InputError("--a5-reading must be corrected or verbatim");
            auto C = generate(spec);
            emit(G, curve_json(C, FamilyOrigin{row, fn, spec.lambdas}));
        } else if (show->parsed()) {
            json in = read_json_file(show_file);
            emit(G, curve_json(curve_from_json(in), origin_from_json(in)));
        } else if (tab->parsed()) {
            if (tg == 0) {
                emit(G, json(registry().raw()));
            } else {
                json rows = json::array();
                for (const auto& e : table1_lookup(tg)) rows.push_back(entry_json(e));
                emit(G, json{{"genus", tg}, {"registry_version", registry().version()}, {"rows", rows}});
            }
        }
        return Ok;
    } catch (const RouteDisagreement& e) {
        std::cerr << "route disagreement: " << e.what() << "\n";
        json j = report_json(e.report);
        j["error"] = e.what();
        emit(G, j);
        return Disagree;
    } catch (const NoMatchingRow& e) {
        std::cerr << "no registry row: " << e.what() << "\n";
        emit(G, json{{"error", e.what()}, {"evidence", evidence_json(e.evidence)}});
        return Disagree;
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return Precision;
    } catch (const json::exception& e) {
        std::cerr << "invalid JSON input: " << e.what() << "\n";
        return Invalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Internal;
    }
}
