#pragma once

#include <string>
#include <vector>

#include "algser/series.hpp"

namespace algser {

// f = quotient * g + sum_j remainder_coeffs[j] * v^j with deg_v(remainder) < d.
// Exact through `window` (= input bound minus the regularity order d);
// remainder coefficients live over the variables without v.
struct WeierstrassDivision {
    TruncSeries quotient;
    std::vector<TruncSeries> remainder_coeffs;
    int regularity_order = 0;
    int window = 0;
};

// g = unit * p where p = v^d + sum_i distinguished_coeffs[i] * v^i is a
// distinguished polynomial: each coefficient vanishes at the origin.
struct WeierstrassPreparation {
    TruncSeries unit;
    std::vector<TruncSeries> distinguished_coeffs;
    int degree = 0;
    int window = 0;
};

// Weierstrass division of f by a v-regular g. Solves for the quotient and
// remainder order-by-order in the degree of the remaining variables; the
// inner univariate divisions carry enough v-precision that the outputs are
// the true division of the stored data through the reported window.
WeierstrassDivision w_divide(const TruncSeries& f, const TruncSeries& g, const std::string& var);

// Weierstrass preparation of a v-regular g, implemented by dividing v^d by g:
// v^d = q*g + r gives p = v^d - r and unit = q^{-1}.
WeierstrassPreparation w_prepare(const TruncSeries& g, const std::string& var);

// The remainder (resp. distinguished polynomial) assembled back into a
// series over the full variable set, for reconstruction checks.
TruncSeries remainder_series(const WeierstrassDivision& division, const VarSet& vars,
                             const std::string& var);
TruncSeries distinguished_series(const WeierstrassPreparation& preparation, const VarSet& vars,
                                 const std::string& var);

}  // namespace algser
