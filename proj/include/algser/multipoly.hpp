#pragma once

#include <string>
#include <vector>

#include "algser/rational.hpp"
#include "algser/varset.hpp"

namespace algser {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in a grlex-sorted map with no zero coefficients stored.
class MultiPoly {
public:
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarSet vars, Rational c);
    static MultiPoly variable(VarSet vars, const std::string& name);
    static MultiPoly monomial(VarSet vars, Exponents exp, Rational c);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Exponents& exp) const;
    Rational constant_term() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;

    // Adds c * x^exp, dropping the term if the sum cancels.
    void add_term(const Exponents& exp, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(const std::string& var) const;

    // Coefficients with respect to one variable: result[k] is the coefficient
    // of var^k, a polynomial over the same VarSet with var-exponent zero.
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;

    // Replaces one variable by a polynomial over the same VarSet.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

    // P(..., v + c, ...): the annihilator shift h -> h - c.
    MultiPoly shift_var(const std::string& var, const Rational& c) const;

    // x^a t^b -> x^a t^{|a|+b} where t is the last variable. Exact.
    MultiPoly substitute_xt() const;

    Rational eval(const std::vector<Rational>& point) const;

    // Same terms re-indexed over a VarSet that contains all variables this
    // polynomial actually uses (missing ones get exponent zero).
    MultiPoly reindexed(const VarSet& target) const;

    // Parseable text form, grlex term order.
    std::string str() const;

private:
    void check_same_vars(const MultiPoly& o) const;

    VarSet vars_;
    TermMap terms_;
};

// Exact quotient p / d; throws NotDivisible when d does not divide p.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

// Sylvester-matrix determinant of p and q viewed as polynomials in var,
// computed by fraction-free (Bareiss) elimination over the polynomial ring.
// Zero exactly when p and q share a factor of positive var-degree.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Res_u(P1(x,u), P2(x,t-u)): vanishes at t = f+g whenever P1(x,f) = P2(x,g) = 0.
MultiPoly annihilator_sum(const MultiPoly& p1, const MultiPoly& p2, const std::string& tvar);

// Res_u(P1(x,u), u^{deg_t P2} P2(x,t/u)): vanishes at t = f*g.
MultiPoly annihilator_prod(const MultiPoly& p1, const MultiPoly& p2, const std::string& tvar);

}  // namespace algser
