#include "algser/corpus.hpp"

#include <ostream>

#include "algser/artin_mazur.hpp"
#include "algser/denef_lipshitz.hpp"
#include "algser/diagonal.hpp"
#include "algser/errors.hpp"
#include "algser/hensel.hpp"
#include "algser/json_io.hpp"
#include "algser/oracles.hpp"
#include "algser/parser.hpp"
#include "algser/weierstrass.hpp"

namespace algser {

using nlohmann::json;

namespace {

Rational param_rational(const json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) return Rational::from_string(fallback);
    return Rational::from_string(j.at(key).get<std::string>());
}

int param_int(const json& j, const std::string& key, int fallback) {
    return j.contains(key) ? j.at(key).get<int>() : fallback;
}

TruncSeries univariate_from_coeffs(const std::vector<Rational>& coeffs, const VarSet& vars,
                                   int order) {
    if (vars.size() != 1) throw UsageError("univariate oracle used with several variables");
    TruncSeries s(vars, order);
    for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k)
        s.add_term({k}, coeffs[static_cast<std::size_t>(k)]);
    return s;
}

mpz_class multinomial(const Exponents& alpha) {
    mpz_class acc = 1;
    unsigned long partial = 0;
    for (int a : alpha) {
        partial += static_cast<unsigned long>(a);
        acc *= oracles::binomial_uint(partial, static_cast<unsigned long>(a));
    }
    return acc;
}

TruncSeries oracle_series(const json& spec, const VarSet& vars, int order) {
    const std::string name = spec.at("oracle").get<std::string>();

    if (name == "central-binomial")
        return univariate_from_coeffs(oracles::central_binomial(order), vars, order);
    if (name == "apery")
        return univariate_from_coeffs(oracles::apery_numbers(order), vars, order);
    if (name == "catalan-shifted")
        return univariate_from_coeffs(oracles::catalan_shifted(order), vars, order);
    if (name == "catalan-shifted-square") {
        const auto h = oracles::catalan_shifted(order);
        return univariate_from_coeffs(oracles::convolve(h, h, order), vars, order);
    }
    if (name == "binomial-series" || name == "binomial-series-sum") {
        std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
        const json terms = (name == "binomial-series") ? json::array({spec}) : spec.at("terms");
        for (const auto& term : terms) {
            const Rational r = param_rational(term, "r", "1");
            const int sign = param_int(term, "sign", 1);
            const int pre = param_int(term, "prefactor_exp", 0);
            const Rational scale = param_rational(term, "scale", "1");
            const auto base = oracles::binomial_series(r, sign, order);
            for (int k = 0; k + pre <= order && k < static_cast<int>(base.size()); ++k)
                coeffs[static_cast<std::size_t>(k + pre)] +=
                    base[static_cast<std::size_t>(k)] * scale;
        }
        const Rational shift = param_rational(spec, "shift", "0");
        coeffs[0] += shift;
        return univariate_from_coeffs(coeffs, vars, order);
    }
    if (name == "binomial-linear-sum") {
        // (1 + sign*(x1+...+xn))^r + shift
        const Rational r = param_rational(spec, "r", "1");
        const int sign = param_int(spec, "sign", 1);
        const Rational shift = param_rational(spec, "shift", "0");
        TruncSeries s(vars, order);
        for (const Exponents& e : exponents_up_to(vars.size(), order)) {
            const int d = total_degree(e);
            Rational c = oracles::binomial(r, static_cast<unsigned>(d)) *
                         Rational(mpq_class(multinomial(e)));
            if (sign < 0 && d % 2 == 1) c = -c;
            if (d == 0) c += shift;
            s.add_term(e, c);
        }
        return s;
    }
    if (name == "catalan-product") {
        if (vars.size() != 2) throw UsageError("catalan-product oracle needs two variables");
        const auto h = oracles::catalan_shifted(order);
        TruncSeries s(vars, order);
        for (int n = 0; 2 * n <= order && n < static_cast<int>(h.size()); ++n)
            s.add_term({n, n}, h[static_cast<std::size_t>(n)]);
        return s;
    }
    throw UsageError("unknown oracle directive: '" + name + "'");
}

}  // namespace

TruncSeries expected_series(const json& spec, const VarSet& vars, int order) {
    if (spec.is_object() && spec.contains("oracle")) return oracle_series(spec, vars, order);
    TruncSeries s = series_from_json(spec);
    if (s.vars() != vars) throw UsageError("expected series uses different variables");
    if (s.bound() < order) throw UsageError("expected series is not exact through the order");
    return s.truncated(order);
}

namespace {

struct EntryOutcome {
    bool pass = false;
    std::string detail;
};

std::string mismatch_detail(const TruncSeries& got, const TruncSeries& want, int order) {
    for (const Exponents& e : exponents_up_to(got.vars().size(), order)) {
        if (got.coeff(e) != want.coeff(e)) {
            std::string exp = "(";
            for (std::size_t i = 0; i < e.size(); ++i)
                exp += (i ? "," : "") + std::to_string(e[i]);
            exp += ")";
            return "first mismatch at " + exp + ": got " + got.coeff(e).str() + ", want " +
                   want.coeff(e).str();
        }
    }
    return "match";
}

EntryOutcome check_series(const TruncSeries& got, const json& expected, int order) {
    const TruncSeries want = expected_series(expected, got.vars(), order);
    if (agree_through(got.truncated(order), want, order)) return {true, "match through " +
                                                                            std::to_string(order)};
    return {false, mismatch_detail(got, want, order)};
}

EntryOutcome run_diagonal_identity(const json& in, const json& expected) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const RationalFunction rf = parse_ratfun(in.at("expr").get<std::string>(), vars);
    const std::string diag = in.at("diag").get<std::string>();
    if (diag == "small") {
        const int bound = order * static_cast<int>(vars.size());
        return check_series(small_diagonal(rf.expand(bound)), expected, order);
    }
    if (diag == "big") {
        return check_series(big_diagonal(rf.expand(2 * order)), expected, order);
    }
    throw UsageError("diag must be 'small' or 'big'");
}

EntryOutcome run_lift(const json& in, const json& expected) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const std::string tvar = vars.name(vars.size() - 1);
    const MultiPoly p = parse_poly(in.at("minpoly").get<std::string>(), vars);
    const Rational lambda =
        in.contains("lambda") ? Rational::from_string(in.at("lambda").get<std::string>())
                              : Rational(0);
    const LiftedRoot root = lift_root(p, tvar, lambda, order);
    return check_series(root.series, expected, order);
}

WRepresentation representation_from_json(const json& in, const VarSet& base) {
    if (!in.contains("a") && !in.contains("b")) return WRepresentation::identity(base);
    WRepresentation rep;
    for (const auto& s : in.at("a")) rep.a.push_back(parse_poly(s.get<std::string>(), base));
    for (const auto& s : in.at("b")) rep.b.push_back(parse_poly(s.get<std::string>(), base));
    return rep;
}

EntryOutcome run_dl_certificate(const json& in, const json& expected) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const std::string tvar = vars.name(vars.size() - 1);
    const MultiPoly p = parse_poly(in.at("minpoly").get<std::string>(), vars);
    const AlgebraicSeriesSpec spec = make_spec(p, tvar);
    const WRepresentation rep =
        representation_from_json(in, vars.without(vars.size() - 1));
    const DLCertificate cert = dl_rational(spec, rep, order);
    if (!cert.verification.pass)
        return {false, "diagonal disagrees with W(x,h): " +
                           mismatch_detail(cert.verification.computed, cert.verification.expected,
                                           order)};
    if (!expected.is_null()) return check_series(cert.verification.computed, expected, order);
    return {true, "certificate verified through " + std::to_string(order)};
}

EntryOutcome run_am_code(const json& in, const json& expected) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const std::string branch = in.at("branch").get<std::string>();
    const std::string yvar = vars.name(vars.size() - 1);
    const VarSet base = vars.without(vars.size() - 1);

    if (branch == "simple") {
        const MultiPoly q = parse_poly(in.at("annihilator").get<std::string>(), vars);
        const AMCode code = am_code_simple(q, yvar, "y2");
        const TruncSeries f = lift_root(q, yvar, Rational(0), order).series;
        const TruncSeries h(base, order);  // the companion series is 0
        const AMVerification v = am_verify(code, f, h, order);
        if (!v.pass) return {false, "code verification failed"};
        if (!expected.is_null()) return check_series(f, expected, order);
        return {true, "code verified, det J = " + code.jacobian_det().str()};
    }
    if (branch == "representation") {
        const MultiPoly s = parse_poly(in.at("annihilator").get<std::string>(), vars);
        const WRepresentation rep = representation_from_json(in, base);
        const AMCode code = am_code_from_representation(rep, s, "y1", yvar);
        const TruncSeries h = lift_root(s, yvar, Rational(0), order).series;
        const TruncSeries f = representation_at_series(rep, h);
        const AMVerification v = am_verify(code, f, h, order);
        if (!v.pass) return {false, "code verification failed"};
        if (!expected.is_null()) return check_series(f, expected, order);
        return {true, "code verified, det J = " + code.jacobian_det().str()};
    }
    throw UsageError("branch must be 'simple' or 'representation'");
}

EntryOutcome run_weierstrass(const json& in, const json&) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const std::string var = in.at("var").get<std::string>();
    const TruncSeries g =
        TruncSeries::from_poly(parse_poly(in.at("g").get<std::string>(), vars), order);
    const std::string mode = in.at("mode").get<std::string>();

    if (mode == "divide") {
        const TruncSeries f =
            TruncSeries::from_poly(parse_poly(in.at("f").get<std::string>(), vars), order);
        const WeierstrassDivision div = w_divide(f, g, var);
        const TruncSeries back = div.quotient * g.truncated(div.window) +
                                 remainder_series(div, vars, var);
        if (!agree_through(back, f.truncated(div.window), div.window))
            return {false, "q*g + r does not reconstruct f"};
        return {true, "division verified on window " + std::to_string(div.window)};
    }
    if (mode == "prepare") {
        const WeierstrassPreparation prep = w_prepare(g, var);
        const TruncSeries back =
            prep.unit * distinguished_series(prep, vars, var).truncated(prep.window);
        if (!agree_through(back, g.truncated(prep.window), prep.window))
            return {false, "u*p does not reconstruct g"};
        if (prep.unit.constant_coeff().is_zero()) return {false, "unit is not a unit"};
        for (const auto& a : prep.distinguished_coeffs)
            if (!a.constant_coeff().is_zero()) return {false, "p is not distinguished"};
        return {true, "preparation verified on window " + std::to_string(prep.window)};
    }
    throw UsageError("mode must be 'divide' or 'prepare'");
}

EntryOutcome run_annihilator(const json& in, const json&) {
    const VarSet vars = VarSet::split(in.at("vars").get<std::string>());
    const int order = in.at("order").get<int>();
    const std::string tvar = vars.name(vars.size() - 1);
    const VarSet base = vars.without(vars.size() - 1);
    const MultiPoly p1 = parse_poly(in.at("p1").get<std::string>(), vars);
    const MultiPoly p2 = parse_poly(in.at("p2").get<std::string>(), vars);
    const std::string op = in.at("op").get<std::string>();
    const MultiPoly ann = (op == "sum")   ? annihilator_sum(p1, p2, tvar)
                          : (op == "prod") ? annihilator_prod(p1, p2, tvar)
                                           : throw UsageError("op must be 'sum' or 'prod'");
    if (ann.is_zero()) return {false, "annihilator collapsed to zero"};
    const TruncSeries target = expected_series(in.at("target"), base, order);
    const TruncSeries residue = eval_poly_at_series(ann, tvar, target);
    if (!residue.is_zero())
        return {false, "annihilator does not vanish on the target series"};
    return {true, "annihilates the target through " + std::to_string(order)};
}

}  // namespace

std::vector<CorpusResult> run_corpus(const json& entries, std::ostream& log) {
    if (!entries.is_array()) throw UsageError("corpus must be a JSON array of entries");
    std::vector<CorpusResult> results;
    for (const auto& entry : entries) {
        CorpusResult r;
        r.name = entry.value("name", std::string("<unnamed>"));
        try {
            const std::string kind = entry.at("kind").get<std::string>();
            const json& in = entry.at("inputs");
            const json expected = entry.contains("expected") ? entry.at("expected") : json();
            EntryOutcome out{false, "unknown kind '" + kind + "'"};
            if (kind == "diagonal-identity") out = run_diagonal_identity(in, expected);
            else if (kind == "lift") out = run_lift(in, expected);
            else if (kind == "dl-certificate") out = run_dl_certificate(in, expected);
            else if (kind == "am-code") out = run_am_code(in, expected);
            else if (kind == "weierstrass") out = run_weierstrass(in, expected);
            else if (kind == "annihilator") out = run_annihilator(in, expected);
            r.pass = out.pass;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        log << (r.pass ? "ok   " : "FAIL ") << r.name << "  -  " << r.detail << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

json builtin_corpus() {
    static const char* text = R"JSON([
  {
    "name": "example1-central-binomial-diagonal",
    "kind": "diagonal-identity",
    "inputs": {"expr": "1/(1-x-t)", "vars": "x,t", "diag": "big", "order": 15},
    "expected": {"oracle": "central-binomial"}
  },
  {
    "name": "example2-hadamard-viewpoint-small-diagonal",
    "kind": "diagonal-identity",
    "inputs": {"expr": "1/(1-x1-x2)", "vars": "x1,x2", "diag": "small", "order": 12},
    "expected": {"oracle": "central-binomial"}
  },
  {
    "name": "example3-apery-five-variables",
    "kind": "diagonal-identity",
    "inputs": {"expr": "1/((1-x1)*((1-x2)*(1-x3)*(1-x4)*(1-x5) - x1*x2*x3))",
               "vars": "x1,x2,x3,x4,x5", "diag": "small", "order": 4},
    "expected": {"oracle": "apery"}
  },
  {
    "name": "example3-apery-four-variables",
    "kind": "diagonal-identity",
    "inputs": {"expr": "1/((1-x1-x2)*(1-x3-x4) - x1*x2*x3*x4)",
               "vars": "x1,x2,x3,x4", "diag": "small", "order": 6},
    "expected": {"oracle": "apery"}
  },
  {
    "name": "lift-sqrt-one-plus-x",
    "kind": "lift",
    "inputs": {"minpoly": "t^2 + 2*t - x", "vars": "x,t", "lambda": "0", "order": 16},
    "expected": {"oracle": "binomial-series", "r": "1/2", "sign": 1, "shift": "-1"}
  },
  {
    "name": "lift-sqrt-one-minus-x",
    "kind": "lift",
    "inputs": {"minpoly": "t^2 + 2*t + x", "vars": "x,t", "lambda": "0", "order": 16},
    "expected": {"oracle": "binomial-series", "r": "1/2", "sign": -1, "shift": "-1"}
  },
  {
    "name": "lift-catalan",
    "kind": "lift",
    "inputs": {"minpoly": "t^2 - t + x", "vars": "x,t", "lambda": "0", "order": 16},
    "expected": {"oracle": "catalan-shifted"}
  },
  {
    "name": "lift-polynomial-root",
    "kind": "lift",
    "inputs": {"minpoly": "t - x", "vars": "x,t", "lambda": "0", "order": 9},
    "expected": {"vars": ["x"], "truncation": 9,
                 "terms": [{"exp": [1], "num": "1", "den": "1"}]}
  },
  {
    "name": "dl-identity-catalan",
    "kind": "dl-certificate",
    "inputs": {"minpoly": "t^2 - t + x", "vars": "x,t", "order": 12},
    "expected": {"oracle": "catalan-shifted"}
  },
  {
    "name": "dl-node-x-sqrt-one-plus-x",
    "kind": "dl-certificate",
    "inputs": {"minpoly": "t^2 + 2*t - x", "vars": "x,t", "order": 20,
               "a": ["x", "x"], "b": ["1"]},
    "expected": {"oracle": "binomial-series", "r": "1/2", "sign": 1, "prefactor_exp": 1}
  },
  {
    "name": "dl-square-of-binomial",
    "kind": "dl-certificate",
    "inputs": {"minpoly": "t^2 + 2*t - x", "vars": "x,t", "order": 12,
               "a": ["0", "0", "1"], "b": ["1"]},
    "expected": {"oracle": "binomial-series-sum", "shift": "1",
                 "terms": [{"r": "1", "sign": 1, "scale": "1"},
                           {"r": "1/2", "sign": 1, "scale": "-2"}]}
  },
  {
    "name": "dl-two-base-variables",
    "kind": "dl-certificate",
    "inputs": {"minpoly": "t^2 + 2*t - x1 - x2", "vars": "x1,x2,t", "order": 8},
    "expected": {"oracle": "binomial-linear-sum", "r": "1/2", "sign": 1, "shift": "-1"}
  },
  {
    "name": "am-simple-sqrt-one-plus-x",
    "kind": "am-code",
    "inputs": {"branch": "simple", "annihilator": "y1^2 + 2*y1 - x", "vars": "x,y1",
               "order": 12},
    "expected": {"oracle": "binomial-series", "r": "1/2", "sign": 1, "shift": "-1"}
  },
  {
    "name": "am-representation-node",
    "kind": "am-code",
    "inputs": {"branch": "representation", "annihilator": "y2^2 + 2*y2 - x", "vars": "x,y2",
               "order": 12, "a": ["x", "x"], "b": ["1"]},
    "expected": {"oracle": "binomial-series", "r": "1/2", "sign": 1, "prefactor_exp": 1}
  },
  {
    "name": "am-representation-catalan-square",
    "kind": "am-code",
    "inputs": {"branch": "representation", "annihilator": "y2^2 - y2 + x", "vars": "x,y2",
               "order": 12, "a": ["0", "0", "1"], "b": ["1"]},
    "expected": {"oracle": "catalan-shifted-square"}
  },
  {
    "name": "weierstrass-divide-cube-by-node",
    "kind": "weierstrass",
    "inputs": {"mode": "divide", "f": "y^3", "g": "y^2 - x", "vars": "x,y", "var": "y",
               "order": 12}
  },
  {
    "name": "weierstrass-prepare-unit-times-node",
    "kind": "weierstrass",
    "inputs": {"mode": "prepare", "g": "(1+x)*y^2 - x", "vars": "x,y", "var": "y",
               "order": 12}
  },
  {
    "name": "weierstrass-prepare-degree-one",
    "kind": "weierstrass",
    "inputs": {"mode": "prepare", "g": "(1+x)*y", "vars": "x,y", "var": "y", "order": 12}
  },
  {
    "name": "example5-sextic-sum-annihilator",
    "kind": "annihilator",
    "inputs": {"op": "sum", "p1": "t^2 - (1+x)", "p2": "t^3 - (1+x)", "vars": "x,t",
               "order": 12,
               "target": {"oracle": "binomial-series-sum",
                          "terms": [{"r": "1/2", "sign": 1}, {"r": "1/3", "sign": 1}]}},
    "expected": null
  },
  {
    "name": "annihilator-product-twice-sqrt",
    "kind": "annihilator",
    "inputs": {"op": "prod", "p1": "t^2 - (1+x)", "p2": "t - 2", "vars": "x,t",
               "order": 12,
               "target": {"oracle": "binomial-series", "r": "1/2", "sign": 1, "scale": "2"}},
    "expected": null
  }
])JSON";
    return json::parse(text);
}

}  // namespace algser
