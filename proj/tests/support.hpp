#pragma once

#include <random>
#include <string>
#include <vector>

#include "algser/hensel.hpp"
#include "algser/multipoly.hpp"
#include "algser/oracles.hpp"
#include "algser/parser.hpp"
#include "algser/series.hpp"

namespace testsupport {

using algser::Exponents;
using algser::MultiPoly;
using algser::Rational;
using algser::TruncSeries;
using algser::VarSet;

using Rng = std::mt19937_64;

inline VarSet vs(const std::string& comma_list) { return VarSet::split(comma_list); }

inline MultiPoly pp(const std::string& text, const VarSet& vars) {
    return algser::parse_poly(text, vars);
}

inline TruncSeries from_coeffs(const std::vector<Rational>& coeffs, const VarSet& vars,
                               int bound) {
    TruncSeries s(vars, bound);
    for (int k = 0; k <= bound && k < static_cast<int>(coeffs.size()); ++k)
        s.add_term({k}, coeffs[static_cast<std::size_t>(k)]);
    return s;
}

inline Rational random_rational(Rng& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<unsigned long> den(1, 4);
    long n = num(rng);
    if (!allow_zero && n == 0) n = 1;
    return Rational(n, den(rng));
}

inline MultiPoly random_poly(Rng& rng, const VarSet& vars, int max_degree, int terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars.size(), 0);
        int budget = deg(rng);
        for (std::size_t v = 0; v < vars.size(); ++v) {
            std::uniform_int_distribution<int> part(0, budget);
            e[v] = part(rng);
            budget -= e[v];
        }
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline TruncSeries random_series(Rng& rng, const VarSet& vars, int bound, int terms) {
    return TruncSeries::from_poly(random_poly(rng, vars, bound, terms), bound);
}

inline TruncSeries random_unit(Rng& rng, const VarSet& vars, int bound, int terms) {
    TruncSeries s = random_series(rng, vars, bound, terms);
    s.add_term(Exponents(vars.size(), 0),
               Rational(1) - s.constant_coeff());  // force constant term 1
    return s;
}

// Random v-regular series of order exactly d in the last variable: c*v^d,
// higher pure-v terms, and mixed terms touching at least one other variable.
inline TruncSeries random_regular(Rng& rng, const VarSet& vars, int d, int bound, int terms) {
    const std::size_t vi = vars.size() - 1;
    MultiPoly g(vars);
    Exponents lead(vars.size(), 0);
    lead[vi] = d;
    g.add_term(lead, random_rational(rng, /*allow_zero=*/false));

    std::uniform_int_distribution<int> pure(d + 1, bound);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars.size(), 0);
        if (vars.size() > 1 && kind(rng) != 0) {
            int budget = std::uniform_int_distribution<int>(1, bound)(rng);
            // at least one non-v exponent positive
            const std::size_t forced =
                std::uniform_int_distribution<std::size_t>(0, vars.size() - 2)(rng);
            e[forced] = std::uniform_int_distribution<int>(1, budget)(rng);
            budget -= e[forced];
            for (std::size_t v = 0; v < vars.size(); ++v) {
                if (v == forced) continue;
                std::uniform_int_distribution<int> part(0, budget);
                e[v] = part(rng);
                budget -= e[v];
            }
        } else {
            e[vi] = pure(rng);
        }
        g.add_term(e, random_rational(rng));
    }
    // No generated term can collide with c*v^d or land at a pure-v exponent
    // below d, so the regular order is exactly d.
    return TruncSeries::from_poly(g, bound);
}

// Random etale annihilator P = (t - p(x)) u(x,t) + perturbation, resampled
// until the simple-root-at-zero condition holds.
inline MultiPoly random_etale_annihilator(Rng& rng, const VarSet& vars) {
    const std::string tvar = vars.name(vars.size() - 1);
    const VarSet base = vars.without(vars.size() - 1);
    for (;;) {
        MultiPoly p = random_poly(rng, base, 3, 3);
        p.add_term(Exponents(base.size(), 0), -p.constant_term());  // p(0) = 0
        MultiPoly u = random_poly(rng, vars, 2, 3);
        u.add_term(Exponents(vars.size(), 0), Rational(1) - u.constant_term());  // u(0,0) = 1
        MultiPoly eps = random_poly(rng, vars, 3, 2);
        eps.add_term(Exponents(vars.size(), 0), -eps.constant_term());  // eps(0,0) = 0

        MultiPoly cand =
            (MultiPoly::variable(vars, tvar) - p.reindexed(vars)) * u + eps;
        if (cand.degree_in(vars.size() - 1) <= 0) continue;
        const algser::EtaleCheck check = algser::is_etale_algebraic(cand, tvar);
        if (check.etale) return cand;
    }
}

// The paper's catalog of one-variable etale specs with oracle series for
// their roots at the origin.
struct CatalogEntry {
    std::string name;
    std::string annihilator;
    std::vector<Rational> root_coeffs;  // h through the given order
};

inline std::vector<CatalogEntry> etale_catalog(int order) {
    namespace orc = algser::oracles;
    auto shifted = [](std::vector<Rational> v, const Rational& c) {
        v[0] += c;
        return v;
    };
    std::vector<CatalogEntry> out;
    out.push_back({"sqrt(1+x)-1", "t^2 + 2*t - x",
                   shifted(orc::binomial_series(Rational(1, 2), 1, order), Rational(-1))});
    out.push_back({"catalan", "t^2 - t + x", orc::catalan_shifted(order)});
    std::vector<Rational> linear(static_cast<std::size_t>(order) + 1, Rational(0));
    if (order >= 1) linear[1] = Rational(1);
    out.push_back({"x", "t - x", linear});
    out.push_back({"sqrt(1-x)-1", "t^2 + 2*t + x",
                   shifted(orc::binomial_series(Rational(1, 2), -1, order), Rational(-1))});
    return out;
}

}  // namespace testsupport
