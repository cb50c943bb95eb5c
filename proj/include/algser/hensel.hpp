#pragma once

#include <string>
#include <vector>

#include "algser/multipoly.hpp"
#include "algser/series.hpp"

namespace algser {

struct EtaleCheck {
    bool etale = false;
    std::string diagnostic;
};

// Etale-algebraicity of an annihilator: P(0,0) = 0 and dP/dt (0,0) != 0.
// The diagnostic names the failed condition.
EtaleCheck is_etale_algebraic(const MultiPoly& p, const std::string& series_var);

// An annihilating polynomial together with the designated series variable.
struct AlgebraicSeriesSpec {
    MultiPoly annihilator;
    std::string series_var;
    bool etale_flag = false;

    VarSet base_vars() const;  // annihilator vars without the series variable
};

// Validates that P is nonzero with positive degree in the series variable
// and records the etale check.
AlgebraicSeriesSpec make_spec(MultiPoly p, const std::string& series_var);

struct LiftedRoot {
    AlgebraicSeriesSpec spec;
    Rational root_at_origin;
    TruncSeries series;  // h with h(0) = root_at_origin and P(x,h) = 0 through bound
};

// Unique series root of P over lambda, a simple root of P(0,t). Newton
// iteration with precision doubling.
LiftedRoot lift_root(const MultiPoly& p, const std::string& series_var, const Rational& lambda,
                     int bound);

// Order-by-order linear lifting of the same root. Slower; kept as an
// independent cross-check of the Newton path.
LiftedRoot lift_root_order_by_order(const MultiPoly& p, const std::string& series_var,
                                    const Rational& lambda, int bound);

// Polynomial in the series variable with truncated-series coefficients,
// coeffs[k] multiplying t^k.
struct SeriesFactor {
    std::vector<TruncSeries> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct LiftedFactorization {
    SeriesFactor p;
    SeriesFactor q;
    int bound = 0;
};

// Lifts the coprime factorization f(0,t) = p0(t) q0(t) of a monic f to
// f = p*q with monic p, q congruent to the seeds at x = 0, coefficient
// series exact through total degree `bound`. Solves the Sylvester system of
// (p0, q0) degree by degree in x.
LiftedFactorization lift_factorization(const MultiPoly& f, const std::string& series_var,
                                       const MultiPoly& p0, const MultiPoly& q0, int bound);

// Coefficient list of the product of two series-coefficient polynomials.
std::vector<TruncSeries> factor_product_coeffs(const SeriesFactor& a, const SeriesFactor& b);

// P(x, t+c): annihilator of h - c whenever P annihilates h.
MultiPoly shift_annihilator(const MultiPoly& p, const std::string& series_var, const Rational& c);

}  // namespace algser
