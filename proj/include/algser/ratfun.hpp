#pragma once

#include <string>

#include "algser/multipoly.hpp"
#include "algser/series.hpp"

namespace algser {

// Quotient of two polynomials. No gcd reduction is performed; the pair is
// kept as built. Series expansion first cancels the largest common monomial
// factor, after which the denominator must be a unit.
class RationalFunction {
public:
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction from_poly(MultiPoly p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(unsigned k) const;

    // Both parts divided by the largest monomial dividing each of them.
    RationalFunction monomial_reduced() const;

    // True when the reduced denominator has a nonzero constant term.
    bool is_series_expandable() const;

    // Truncated expansion num/den, exact through `bound`. Throws
    // NotExpandable when the reduced denominator is not a unit.
    TruncSeries expand(int bound) const;

    std::string str() const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace algser
