#pragma once

#include <vector>

#include "algser/rational.hpp"

namespace algser {
namespace oracles {

// Reference evaluators used to pin expected values in the corpus and the
// acceptance suite. Everything here is computed by direct combinatorial
// formulas or recurrences on plain coefficient vectors, independent of the
// series engine they are checked against.

// Generalized binomial coefficient r(r-1)...(r-k+1)/k!.
Rational binomial(const Rational& r, unsigned k);

// Integer binomial coefficient.
mpz_class binomial_uint(unsigned long n, unsigned long k);

// Central binomial numbers C(2n,n), n = 0..order.
std::vector<Rational> central_binomial(int order);

// Apery numbers a_n = sum_k C(n,k)^2 C(n+k,k)^2, n = 0..order.
std::vector<Rational> apery_numbers(int order);

// Coefficients of the shifted Catalan series x + x^2 + 2x^3 + 5x^4 + ...,
// the root of t^2 - t + x at the origin. Catalan numbers come from the
// convolution recurrence.
std::vector<Rational> catalan_shifted(int order);

// Coefficients of (1 + sign*x)^r, k = 0..order.
std::vector<Rational> binomial_series(const Rational& r, int sign, int order);

// Plain convolution of coefficient vectors (for squares of oracle series).
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               int order);

}  // namespace oracles
}  // namespace algser
