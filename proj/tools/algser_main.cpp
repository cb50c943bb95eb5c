// Command-line surface over the engine: diagonals, Hensel lifting,
// Denef-Lipshitz certificates, Weierstrass division, Artin-Mazur codes,
// annihilators, Hadamard products, and the regression corpus runner.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage or parse
// error, 3 violated mathematical precondition.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "algser/artin_mazur.hpp"
#include "algser/corpus.hpp"
#include "algser/denef_lipshitz.hpp"
#include "algser/diagonal.hpp"
#include "algser/errors.hpp"
#include "algser/hensel.hpp"
#include "algser/json_io.hpp"
#include "algser/parser.hpp"
#include "algser/weierstrass.hpp"

namespace {

using algser::MultiPoly;
using algser::Rational;
using algser::TruncSeries;
using algser::VarSet;
using nlohmann::json;

struct GlobalOpts {
    std::string vars = "x,t";
    int order = 10;
    std::string format = "text";
    unsigned long seed = 0;  // reserved for randomized corpus entries
};

void print_series(const TruncSeries& s, const GlobalOpts& g, const std::string& label) {
    if (g.format == "json") {
        std::cout << algser::series_to_json(s).dump(2) << "\n";
        return;
    }
    if (!label.empty()) std::cout << label << ":\n";
    std::cout << "vars: ";
    for (std::size_t i = 0; i < s.vars().size(); ++i)
        std::cout << (i ? "," : "") << s.vars().name(i);
    std::cout << "\ntruncation: " << s.bound() << "\n" << s.str() << "\n";
}

std::string trailing_var(const VarSet& vars) { return vars.name(vars.size() - 1); }

algser::WRepresentation representation_from_lists(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b,
                                                  const VarSet& base) {
    if (a.empty() && b.empty()) return algser::WRepresentation::identity(base);
    if (a.empty() || b.empty())
        throw algser::UsageError("provide both --a and --b coefficient lists, or neither");
    algser::WRepresentation rep;
    for (const auto& s : a) rep.a.push_back(algser::parse_poly(s, base));
    for (const auto& s : b) rep.b.push_back(algser::parse_poly(s, base));
    return rep;
}

json verification_to_json(const algser::VerificationRecord& rec) {
    json j;
    j["order"] = rec.order;
    j["pass"] = rec.pass;
    j["computed"] = algser::series_to_json(rec.computed);
    j["expected"] = algser::series_to_json(rec.expected);
    return j;
}

int cmd_diag(const GlobalOpts& g, const std::string& kind, const std::string& expr) {
    const VarSet vars = VarSet::split(g.vars);
    const algser::RationalFunction rf = algser::parse_ratfun(expr, vars);
    if (kind == "small") {
        const TruncSeries s =
            small_diagonal(rf.expand(g.order * static_cast<int>(vars.size())));
        print_series(s, g, "small diagonal");
        return 0;
    }
    const TruncSeries s = big_diagonal(rf.expand(2 * g.order));
    print_series(s, g, "big diagonal");
    return 0;
}

int cmd_lift(const GlobalOpts& g, const std::string& minpoly, const std::string& lambda) {
    const VarSet vars = VarSet::split(g.vars);
    const MultiPoly p = algser::parse_poly(minpoly, vars);
    const algser::LiftedRoot root =
        algser::lift_root(p, trailing_var(vars), Rational::from_string(lambda), g.order);
    print_series(root.series, g, "lifted root");
    return 0;
}

int cmd_lift_factor(const GlobalOpts& g, const std::string& f_text, const std::string& p0_text,
                    const std::string& q0_text) {
    const VarSet vars = VarSet::split(g.vars);
    const std::string tvar = trailing_var(vars);
    const algser::LiftedFactorization lf =
        algser::lift_factorization(algser::parse_poly(f_text, vars),
                                   tvar,
                                   algser::parse_poly(p0_text, vars),
                                   algser::parse_poly(q0_text, vars), g.order);
    if (g.format == "json") {
        json j;
        j["order"] = lf.bound;
        json jp = json::array();
        for (const auto& c : lf.p.coeffs) jp.push_back(algser::series_to_json(c));
        json jq = json::array();
        for (const auto& c : lf.q.coeffs) jq.push_back(algser::series_to_json(c));
        j["p"] = std::move(jp);
        j["q"] = std::move(jq);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "factor p (coefficients by " << tvar << "-degree):\n";
    for (std::size_t k = 0; k < lf.p.coeffs.size(); ++k)
        std::cout << "  " << tvar << "^" << k << ": " << lf.p.coeffs[k].str() << "\n";
    std::cout << "factor q (coefficients by " << tvar << "-degree):\n";
    for (std::size_t k = 0; k < lf.q.coeffs.size(); ++k)
        std::cout << "  " << tvar << "^" << k << ": " << lf.q.coeffs[k].str() << "\n";
    return 0;
}

int cmd_dl(const GlobalOpts& g, const std::string& minpoly, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
    const VarSet vars = VarSet::split(g.vars);
    const std::string tvar = trailing_var(vars);
    const MultiPoly p = algser::parse_poly(minpoly, vars);
    const algser::AlgebraicSeriesSpec spec = algser::make_spec(p, tvar);
    const algser::WRepresentation rep =
        representation_from_lists(a, b, vars.without(vars.size() - 1));
    const algser::DLCertificate cert = algser::dl_rational(spec, rep, g.order);

    if (g.format == "json") {
        json j;
        j["R"] = {{"num", cert.rational.num().str()}, {"den", cert.rational.den().str()}};
        j["verification"] = verification_to_json(cert.verification);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "R(x,t) = " << cert.rational.str() << "\n";
        std::cout << "diagonal of R through order " << g.order << ":\n  "
                  << cert.verification.computed.str() << "\n";
        std::cout << "W(x,h) computed independently:\n  " << cert.verification.expected.str()
                  << "\n";
        std::cout << "verification: " << (cert.verification.pass ? "pass" : "FAIL") << "\n";
    }
    return cert.verification.pass ? 0 : 1;
}

int cmd_weierstrass(const GlobalOpts& g, const std::string& mode, const std::string& f_text,
                    const std::string& g_text, const std::string& var) {
    const VarSet vars = VarSet::split(g.vars);
    const TruncSeries gs =
        TruncSeries::from_poly(algser::parse_poly(g_text, vars), g.order);
    if (mode == "divide") {
        if (f_text.empty()) throw algser::UsageError("divide mode needs --f");
        const TruncSeries fs =
            TruncSeries::from_poly(algser::parse_poly(f_text, vars), g.order);
        const algser::WeierstrassDivision div = algser::w_divide(fs, gs, var);
        if (g.format == "json") {
            json j;
            j["window"] = div.window;
            j["regularity_order"] = div.regularity_order;
            j["quotient"] = algser::series_to_json(div.quotient);
            json r = json::array();
            for (const auto& c : div.remainder_coeffs) r.push_back(algser::series_to_json(c));
            j["remainder_coeffs"] = std::move(r);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "regular of order " << div.regularity_order << " in " << var
                      << "; exact window " << div.window << "\n";
            std::cout << "q = " << div.quotient.str() << "\n";
            for (std::size_t k = 0; k < div.remainder_coeffs.size(); ++k)
                std::cout << "r[" << var << "^" << k << "] = " << div.remainder_coeffs[k].str()
                          << "\n";
        }
        return 0;
    }
    const algser::WeierstrassPreparation prep = algser::w_prepare(gs, var);
    if (g.format == "json") {
        json j;
        j["window"] = prep.window;
        j["degree"] = prep.degree;
        j["unit"] = algser::series_to_json(prep.unit);
        json a = json::array();
        for (const auto& c : prep.distinguished_coeffs) a.push_back(algser::series_to_json(c));
        j["distinguished_coeffs"] = std::move(a);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "distinguished degree " << prep.degree << "; exact window " << prep.window
                  << "\n";
        std::cout << "u = " << prep.unit.str() << "\n";
        for (std::size_t k = 0; k < prep.distinguished_coeffs.size(); ++k)
            std::cout << "a[" << var << "^" << k << "] = "
                      << prep.distinguished_coeffs[k].str() << "\n";
    }
    return 0;
}

int cmd_am_code(const GlobalOpts& g, const std::string& branch, const std::string& annihilator,
                const std::vector<std::string>& a, const std::vector<std::string>& b,
                int verify_order) {
    const VarSet vars = VarSet::split(g.vars);
    const std::string yvar = trailing_var(vars);
    const VarSet base = vars.without(vars.size() - 1);
    const MultiPoly ann = algser::parse_poly(annihilator, vars);

    algser::AMCode code = (branch == "simple")
                              ? algser::am_code_simple(ann, yvar, "y2")
                              : algser::am_code_from_representation(
                                    representation_from_lists(a, b, base), ann, "y1", yvar);

    bool verified = true;
    json jver;
    if (verify_order > 0) {
        const TruncSeries h_root =
            algser::lift_root(ann, yvar, Rational(0), verify_order).series;
        const TruncSeries f =
            (branch == "simple")
                ? h_root
                : algser::representation_at_series(
                      representation_from_lists(a, b, base), h_root);
        const TruncSeries h =
            (branch == "simple") ? TruncSeries(base, verify_order) : h_root;
        const algser::AMVerification v = algser::am_verify(code, f, h, verify_order);
        verified = v.pass;
        jver = {{"order", v.order},
                {"first_vanishes", v.first_vanishes},
                {"second_vanishes", v.second_vanishes},
                {"jacobian_invertible", v.jacobian_invertible},
                {"pass", v.pass}};
    }

    if (g.format == "json") {
        json j;
        j["branch"] = branch;
        j["P1"] = code.p1.str();
        j["P2"] = code.p2.str();
        j["jacobian_at_origin"] = {{code.jacobian_at_origin[0][0].str(),
                                    code.jacobian_at_origin[0][1].str()},
                                   {code.jacobian_at_origin[1][0].str(),
                                    code.jacobian_at_origin[1][1].str()}};
        j["jacobian_det"] = code.jacobian_det().str();
        if (!jver.is_null()) j["verification"] = jver;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "P1 = " << code.p1.str() << "\n";
        std::cout << "P2 = " << code.p2.str() << "\n";
        std::cout << "J(0) = [[" << code.jacobian_at_origin[0][0] << ", "
                  << code.jacobian_at_origin[0][1] << "], [" << code.jacobian_at_origin[1][0]
                  << ", " << code.jacobian_at_origin[1][1] << "]]"
                  << ", det = " << code.jacobian_det() << "\n";
        if (verify_order > 0)
            std::cout << "verification through " << verify_order << ": "
                      << (verified ? "pass" : "FAIL") << "\n";
    }
    return verified ? 0 : 1;
}

int cmd_annihilate(const GlobalOpts& g, const std::string& op, const std::string& p1_text,
                   const std::string& p2_text) {
    const VarSet vars = VarSet::split(g.vars);
    const std::string tvar = trailing_var(vars);
    const MultiPoly p1 = algser::parse_poly(p1_text, vars);
    const MultiPoly p2 = algser::parse_poly(p2_text, vars);
    const MultiPoly ann = (op == "add") ? algser::annihilator_sum(p1, p2, tvar)
                                        : algser::annihilator_prod(p1, p2, tvar);
    if (g.format == "json") {
        json j;
        j["op"] = op;
        j["annihilator"] = ann.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ann.str() << "\n";
    }
    return 0;
}

int cmd_hadamard(const GlobalOpts& g, const std::string& f_text, const std::string& g_text) {
    const VarSet vars = VarSet::split(g.vars);
    const TruncSeries fs = algser::parse_ratfun(f_text, vars).expand(g.order);
    const TruncSeries gs = algser::parse_ratfun(g_text, vars).expand(g.order);
    print_series(algser::hadamard(fs, gs), g, "hadamard product");
    return 0;
}

int cmd_corpus(const GlobalOpts&, const std::string& path) {
    json entries;
    if (path == "builtin") {
        entries = algser::builtin_corpus();
    } else {
        std::ifstream in(path);
        if (!in) throw algser::UsageError("cannot open corpus file: " + path);
        in >> entries;
    }
    const auto results = algser::run_corpus(entries, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
              << " entries passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for algebraic power series as diagonals of rational functions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--vars", g.vars,
                   "comma-separated variable order; the last variable is the designated t");
    app.add_option("--order", g.order, "truncation order of the result");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized corpus entries");

    std::string kind = "big", expr, minpoly, lambda = "0";
    std::string f_text, g_text, p0_text, q0_text, var = "t", mode = "prepare";
    std::string branch = "simple", op = "add", path = "builtin";
    std::vector<std::string> a_list, b_list;
    int verify_order = 0;

    auto* diag = app.add_subcommand("diag", "small or big diagonal of a rational function");
    diag->add_option("--kind", kind, "small | big")->check(CLI::IsMember({"small", "big"}));
    diag->add_option("expr", expr, "rational function")->required();

    auto* lift = app.add_subcommand("lift", "lift a simple root to a truncated series");
    lift->add_option("minpoly", minpoly, "annihilating polynomial")->required();
    lift->add_option("--lambda", lambda, "root of P(0,t) to lift (default 0)");

    auto* lf = app.add_subcommand("lift-factor", "lift a coprime factorization of f(0,t)");
    lf->add_option("f", f_text, "monic polynomial in t")->required();
    lf->add_option("p0", p0_text, "first monic seed in t")->required();
    lf->add_option("q0", q0_text, "second monic seed in t")->required();

    auto* dl = app.add_subcommand("dl", "Denef-Lipshitz rational function with certificate");
    dl->add_option("minpoly", minpoly, "etale annihilator of h")->required();
    dl->add_option("--a", a_list, "numerator coefficients of W (polynomials in x)");
    dl->add_option("--b", b_list, "denominator coefficients of W");

    auto* wei = app.add_subcommand("weierstrass", "Weierstrass division or preparation");
    wei->add_option("--mode", mode, "prepare | divide")
        ->check(CLI::IsMember({"prepare", "divide"}));
    wei->add_option("--f", f_text, "dividend (divide mode)");
    wei->add_option("--g", g_text, "regular series")->required();
    wei->add_option("--var", var, "distinguished variable")->required();

    auto* am = app.add_subcommand("am-code", "two-polynomial Artin-Mazur code");
    am->add_option("--branch", branch, "simple | representation")
        ->check(CLI::IsMember({"simple", "representation"}));
    am->add_option("annihilator", minpoly, "Q(x,y1) or S(x,y2) depending on branch")
        ->required();
    am->add_option("--a", a_list, "representation numerator coefficients");
    am->add_option("--b", b_list, "representation denominator coefficients");
    am->add_option("--verify-order", verify_order, "run the truncated verification");

    auto* ann = app.add_subcommand("annihilate", "annihilator of a sum or product");
    ann->add_option("--op", op, "add | mul")->check(CLI::IsMember({"add", "mul"}));
    ann->add_option("p1", p0_text, "annihilator of the first series")->required();
    ann->add_option("p2", q0_text, "annihilator of the second series")->required();

    auto* had = app.add_subcommand("hadamard", "coefficient-wise product of two expansions");
    had->add_option("f", f_text, "first rational function")->required();
    had->add_option("g", g_text, "second rational function")->required();

    auto* cor = app.add_subcommand("corpus", "run a regression corpus ('builtin' or a path)");
    cor->add_option("corpus", path, "'builtin' or a JSON file of entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (diag->parsed()) return cmd_diag(g, kind, expr);
        if (lift->parsed()) return cmd_lift(g, minpoly, lambda);
        if (lf->parsed()) return cmd_lift_factor(g, f_text, p0_text, q0_text);
        if (dl->parsed()) return cmd_dl(g, minpoly, a_list, b_list);
        if (wei->parsed()) return cmd_weierstrass(g, mode, f_text, g_text, var);
        if (am->parsed()) return cmd_am_code(g, branch, minpoly, a_list, b_list, verify_order);
        if (ann->parsed()) return cmd_annihilate(g, op, p0_text, q0_text);
        if (had->parsed()) return cmd_hadamard(g, f_text, g_text);
        if (cor->parsed()) return cmd_corpus(g, path);
    } catch (const algser::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const algser::MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
