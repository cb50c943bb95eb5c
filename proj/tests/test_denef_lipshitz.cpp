#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algser/denef_lipshitz.hpp"
#include "algser/diagonal.hpp"
#include "algser/errors.hpp"
#include "algser/oracles.hpp"
#include "algser/parser.hpp"
#include "support.hpp"

using namespace algser;
using namespace testsupport;

namespace {

AlgebraicSeriesSpec spec_of(const std::string& text, const VarSet& vars) {
    return make_spec(pp(text, vars), vars.name(vars.size() - 1));
}

}  // namespace

TEST_CASE("build_F produces the diagonal-lemma power series") {
    const VarSet xt = vs("x,t");
    const Exponents origin{0, 0};

    const TruncSeries f1 = build_F(spec_of("t^2 + 2*t - x", xt), 8);
    CHECK(f1.coeff(origin) == Rational(1));  // F(0,0) = dP/dt(0,0)/dP/dt(0,0)

    // P = t - x: F = 1/(1-x), no t dependence
    const TruncSeries f2 = build_F(spec_of("t - x", xt), 8);
    for (int k = 0; k <= 8; ++k) CHECK(f2.coeff({k, 0}) == Rational(1));
    CHECK(f2.coeff({0, 1}) == Rational(0));

    const TruncSeries f3 = build_F(spec_of("t^2 - t + x", xt), 8);
    CHECK(f3.coeff(origin) == Rational(1));
}

TEST_CASE("build_F times P(xt,t) equals t dP/dt(xt,t)") {
    const VarSet xt = vs("x,t");
    for (const auto& entry : etale_catalog(0)) {
        const AlgebraicSeriesSpec spec = spec_of(entry.annihilator, xt);
        const TruncSeries f = build_F(spec, 10);
        const MultiPoly pxt = spec.annihilator.substitute_xt();
        const MultiPoly want =
            pp("t", xt) * spec.annihilator.derivative("t").substitute_xt();
        const TruncSeries lhs = f * TruncSeries::from_poly(pxt, 10);
        CHECK(agree_through(lhs, TruncSeries::from_poly(want, 10), 10));
    }
}

TEST_CASE("build_F requires an etale spec") {
    const VarSet xt = vs("x,t");
    CHECK_THROWS_AS(build_F(spec_of("t^2 + x^3 - x^2", xt), 8), NotEtale);
}

TEST_CASE("monomial diagonal certificates") {
    const VarSet xt = vs("x,t");

    const VerificationRecord h_itself =
        monomial_diagonal_certificate(spec_of("t^2 + 2*t - x", xt), {0}, 1, 10);
    CHECK(h_itself.pass);
    auto want = oracles::binomial_series(Rational(1, 2), 1, 10);
    want[0] -= Rational(1);
    CHECK(h_itself.computed == from_coeffs(want, vs("x"), 10));

    const VerificationRecord trivial =
        monomial_diagonal_certificate(spec_of("t^2 + 2*t - x", xt), {0}, 0, 10);
    CHECK(trivial.pass);
    CHECK(trivial.computed == TruncSeries::constant(vs("x"), Rational(1), 10));

    const VerificationRecord cube =
        monomial_diagonal_certificate(spec_of("t^2 - t + x", xt), {2}, 3, 10);
    CHECK(cube.pass);
    const auto h = oracles::catalan_shifted(10);
    const auto h3 = oracles::convolve(oracles::convolve(h, h, 10), h, 10);
    TruncSeries x2h3(vs("x"), 10);
    for (int k = 0; k + 2 <= 10; ++k) x2h3.add_term({k + 2}, h3[static_cast<std::size_t>(k)]);
    CHECK(cube.computed == x2h3);
}

TEST_CASE("dl_rational certificates for the worked representations") {
    const VarSet xt = vs("x,t");

    // identity representation of the Catalan-shifted series
    const DLCertificate catalan = dl_rational(
        spec_of("t^2 - t + x", xt), WRepresentation::identity(vs("x")), 12);
    CHECK(catalan.verification.pass);
    CHECK(catalan.verification.computed ==
          from_coeffs(oracles::catalan_shifted(12), vs("x"), 12));

    // W = t^2: the square of sqrt(1+x) - 1
    WRepresentation square;
    square.a = {MultiPoly(vs("x")), MultiPoly(vs("x")),
                MultiPoly::constant(vs("x"), Rational(1))};
    square.b = {MultiPoly::constant(vs("x"), Rational(1))};
    const DLCertificate sq = dl_rational(spec_of("t^2 + 2*t - x", xt), square, 12);
    CHECK(sq.verification.pass);
    auto h = oracles::binomial_series(Rational(1, 2), 1, 12);
    h[0] -= Rational(1);
    CHECK(sq.verification.computed == from_coeffs(oracles::convolve(h, h, 12), vs("x"), 12));

    // node representation: f = x*sqrt(1+x)
    WRepresentation node;
    node.a = {pp("x", vs("x")), pp("x", vs("x"))};
    node.b = {pp("1", vs("x"))};
    const DLCertificate nd = dl_rational(spec_of("t^2 + 2*t - x", xt), node, 20);
    CHECK(nd.verification.pass);
    std::vector<Rational> want(21, Rational(0));
    const auto bin = oracles::binomial_series(Rational(1, 2), 1, 20);
    for (int k = 0; k + 1 <= 20; ++k) want[static_cast<std::size_t>(k + 1)] =
        bin[static_cast<std::size_t>(k)];
    CHECK(nd.verification.computed == from_coeffs(want, vs("x"), 20));
}

TEST_CASE("dl_rational rejects degenerate inputs") {
    const VarSet xt = vs("x,t");
    CHECK_THROWS_AS(
        dl_rational(spec_of("t^2 + x^3 - x^2", xt), WRepresentation::identity(vs("x")), 8),
        NotEtale);

    WRepresentation bad;
    bad.a = {pp("1", vs("x"))};
    bad.b = {pp("x", vs("x"))};  // b_0(0) = 0
    CHECK_THROWS_AS(dl_rational(spec_of("t^2 + 2*t - x", xt), bad, 8), DenominatorNotUnit);
}

TEST_CASE("dl_verify on explicit rational functions") {
    const VarSet xt = vs("x,t");
    const RationalFunction r = parse_ratfun("1/(1-x-t)", xt);

    const TruncSeries central = from_coeffs(oracles::central_binomial(10), vs("x"), 10);
    CHECK(dl_verify(r, central, 10).pass);

    const RationalFunction one = parse_ratfun("1", xt);
    CHECK(dl_verify(one, TruncSeries::constant(vs("x"), Rational(1), 10), 10).pass);

    // deliberate mismatch: 5 instead of 6 at x^2
    TruncSeries wrong(vs("x"), 2);
    wrong.add_term({0}, Rational(1));
    wrong.add_term({1}, Rational(2));
    wrong.add_term({2}, Rational(5));
    const VerificationRecord rec = dl_verify(r, wrong, 2);
    CHECK_FALSE(rec.pass);
    CHECK(rec.computed.coeff({2}) == Rational(6));
}

TEST_CASE("dl_verify requires an expandable rational function") {
    const VarSet xt = vs("x,t");
    const RationalFunction r(pp("1", xt), pp("x + t", xt));
    CHECK_FALSE(r.is_series_expandable());
    CHECK_THROWS_AS(dl_verify(r, TruncSeries(vs("x"), 5), 5), NotExpandable);

    // t/(t - zero constant term) style inputs become expandable after
    // cancelling the monomial factor
    const RationalFunction ok(pp("t^2", xt), pp("t - x*t", xt));
    CHECK(ok.is_series_expandable());
}

TEST_CASE("two-base-variable certificate") {
    const VarSet v = vs("x1,x2,t");
    const DLCertificate cert = dl_rational(
        spec_of("t^2 + 2*t - x1 - x2", v), WRepresentation::identity(vs("x1,x2")), 8);
    CHECK(cert.verification.pass);
    // spot-check against hand values of sqrt(1+u)-1 at u = x1+x2
    CHECK(cert.verification.computed.coeff({1, 0}) == Rational(1, 2));
    CHECK(cert.verification.computed.coeff({0, 1}) == Rational(1, 2));
    CHECK(cert.verification.computed.coeff({1, 1}) == Rational(-1, 4));
    CHECK(cert.verification.computed.coeff({2, 0}) == Rational(-1, 8));
}
