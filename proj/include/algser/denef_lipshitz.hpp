#pragma once

#include <string>
#include <vector>

#include "algser/hensel.hpp"
#include "algser/ratfun.hpp"
#include "algser/series.hpp"

namespace algser {

// f = (a_0 + a_1 h + ... + a_r h^r) / (b_0 + b_1 h + ... + b_s h^s) with
// coefficients over the base variables and b_0(0) != 0.
struct WRepresentation {
    std::vector<MultiPoly> a;
    std::vector<MultiPoly> b;

    // W = t, i.e. a = (0, 1), b = (1): represents h itself.
    static WRepresentation identity(const VarSet& base_vars);
};

struct VerificationRecord {
    int order = 0;
    TruncSeries expected;
    TruncSeries computed;
    bool pass = false;
};

// A rational function asserted to have the wanted big diagonal, with the
// truncated check that backs the assertion.
struct DLCertificate {
    AlgebraicSeriesSpec spec;
    WRepresentation representation;
    RationalFunction rational;
    VerificationRecord verification;
};

// Truncated expansion of F = t * dP/dt(xt,t) / P(xt,t), the power series of
// the diagonal lemma. Requires an etale spec whose series variable is listed
// last.
TruncSeries build_F(const AlgebraicSeriesSpec& spec, int bound);

// Checks D((xt)^i t^{j+1} dP/dt(xt,t) / P(xt,t)) = x^i h^j, with h obtained
// independently by root lifting.
VerificationRecord monomial_diagonal_certificate(const AlgebraicSeriesSpec& spec,
                                                 const Exponents& i, int j, int order);

// Builds R(x,t) = W(xt,t) t dP/dt(xt,t) / P(xt,t) and verifies that its big
// diagonal equals W(x,h) through `order`, where W(x,h) is computed on the
// independent lift-and-substitute route.
DLCertificate dl_rational(const AlgebraicSeriesSpec& spec, const WRepresentation& rep, int order);

// Expands R to twice the order (the big diagonal halves windows), applies
// the diagonal, and compares with the expected series.
VerificationRecord dl_verify(const RationalFunction& rational, const TruncSeries& expected,
                             int order);

// W(x, h) for a lifted root h, the verification target of dl_rational.
TruncSeries representation_at_series(const WRepresentation& rep, const TruncSeries& h);

}  // namespace algser
