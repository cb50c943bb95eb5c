#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algser/multipoly.hpp"
#include "algser/rational.hpp"
#include "algser/varset.hpp"

namespace algser {

// Order of a truncated series. Truncated data cannot certify an infinite
// order, so "all stored terms vanish" is reported as at-least(bound+1).
struct SeriesOrder {
    int value = 0;
    bool finite = true;

    static SeriesOrder exactly(int v) { return {v, true}; }
    static SeriesOrder at_least(int v) { return {v, false}; }

    friend bool operator==(const SeriesOrder& a, const SeriesOrder& b) {
        return a.value == b.value && a.finite == b.finite;
    }
    std::string str() const {
        return finite ? std::to_string(value) : "at-least(" + std::to_string(value) + ")";
    }
};

// Multivariate formal power series known exactly on all monomials of total
// degree <= bound. Every arithmetic result carries the tightest bound on
// which it is provably exact; mixing bounds truncates to the minimum.
class TruncSeries {
public:
    TruncSeries(VarSet vars, int bound);

    static TruncSeries from_poly(const MultiPoly& p, int bound);
    static TruncSeries constant(VarSet vars, Rational c, int bound);
    // 1/(1 - x^exp), the recurring Hadamard identity fixture.
    static TruncSeries geom(VarSet vars, const Exponents& exp, int bound);

    const VarSet& vars() const { return vars_; }
    int bound() const { return bound_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& exp) const;
    Rational constant_coeff() const { return coeff(Exponents(vars_.size(), 0)); }

    void add_term(const Exponents& exp, const Rational& c);

    TruncSeries truncated(int new_bound) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rational& c) const;
    TruncSeries pow(unsigned k) const;

    // Multiplication by a single monomial is exact, so the window grows.
    TruncSeries mul_monomial(const Exponents& exp, const Rational& c) const;

    // Inverse of a series with nonzero constant term, exact through bound().
    TruncSeries invert_unit() const;

    // x^a t^b -> x^a t^{|a|+b} with t the last variable. A degree-d monomial
    // may map up to degree 2d, so the result window is floor(bound/2); use
    // the MultiPoly overload for exact polynomial data.
    TruncSeries substitute_xt() const;

    SeriesOrder ord() const;
    // v-order of the series with every other variable set to zero; finite
    // exactly when the series is v-regular of visible order.
    SeriesOrder regular_order(std::size_t var) const;

    TruncSeries exact_divide_by_var(std::size_t var, int k) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.vars_ == b.vars_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same_vars(const TruncSeries& o) const;

    VarSet vars_;
    int bound_;
    TermMap terms_;
};

// Coefficient-wise product; bound is the minimum of the operand bounds.
TruncSeries hadamard(const TruncSeries& a, const TruncSeries& b);

// True when a and b agree on every monomial of total degree <= window.
// Requires both operands to be exact that far.
bool agree_through(const TruncSeries& a, const TruncSeries& b, int window);

// P with designated variables replaced by series. All substituted series
// share one VarSet, which is the result VarSet; every other variable of P
// must belong to it. Polynomial substitution, so no order restriction on the
// series' constant terms.
TruncSeries eval_poly_at_series(const MultiPoly& p,
                                const std::vector<std::pair<std::string, TruncSeries>>& subs);

// Single-variable convenience: P(x, t <- h).
TruncSeries eval_poly_at_series(const MultiPoly& p, const std::string& var, const TruncSeries& h);

}  // namespace algser
