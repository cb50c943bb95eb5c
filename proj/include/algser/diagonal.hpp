#pragma once

#include <string>

#include "algser/series.hpp"

namespace algser {

// Small diagonal: g in n variables -> sum_j g_{j,...,j} t^j, exact for all j
// with n*j <= bound(g), so the result bound is bound(g)/n.
TruncSeries small_diagonal(const TruncSeries& g, const std::string& out_var = "t");

// Big diagonal: f in (x_1..x_n, t) with t last -> keeps exactly the
// monomials x^a t^{|a|}, drops t. A surviving monomial has total degree
// 2|a|, so the result bound is bound(f)/2.
TruncSeries big_diagonal(const TruncSeries& f);

}  // namespace algser
