#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algser/errors.hpp"
#include "algser/hensel.hpp"
#include "algser/weierstrass.hpp"
#include "support.hpp"

using namespace algser;
using namespace testsupport;

namespace {

TruncSeries poly_series(const std::string& text, const VarSet& vars, int bound) {
    return TruncSeries::from_poly(pp(text, vars), bound);
}

void check_division(const TruncSeries& f, const TruncSeries& g, const std::string& var) {
    const WeierstrassDivision div = w_divide(f, g, var);
    const std::size_t vi = f.vars().index_of(var);
    CHECK(static_cast<int>(div.remainder_coeffs.size()) == div.regularity_order);
    const TruncSeries back =
        div.quotient * g.truncated(div.window) + remainder_series(div, f.vars(), var);
    CHECK(agree_through(back, f.truncated(div.window), div.window));
    // deg_v r < d by construction of remainder_coeffs; double-check the
    // reassembled remainder
    for (const auto& [e, c] : remainder_series(div, f.vars(), var).terms())
        CHECK(e[vi] < div.regularity_order);
}

void check_preparation(const TruncSeries& g, const std::string& var) {
    const WeierstrassPreparation prep = w_prepare(g, var);
    CHECK_FALSE(prep.unit.constant_coeff().is_zero());
    CHECK(static_cast<int>(prep.distinguished_coeffs.size()) == prep.degree);
    for (const auto& a : prep.distinguished_coeffs) CHECK(a.constant_coeff().is_zero());
    const TruncSeries back =
        prep.unit * distinguished_series(prep, g.vars(), var).truncated(prep.window);
    CHECK(agree_through(back, g.truncated(prep.window), prep.window));
}

}  // namespace

TEST_CASE("division examples") {
    const VarSet xy = vs("x,y");
    const TruncSeries g = poly_series("y^2 - x", xy, 12);

    const WeierstrassDivision cube = w_divide(poly_series("y^3", xy, 12), g, "y");
    CHECK(cube.regularity_order == 2);
    CHECK(cube.quotient == poly_series("y", xy, 10));
    CHECK(cube.remainder_coeffs[0].is_zero());
    CHECK(cube.remainder_coeffs[1] == poly_series("x", vs("x"), 10));  // r = x*y

    const WeierstrassDivision square = w_divide(poly_series("y^2", xy, 12), g, "y");
    CHECK(square.quotient == TruncSeries::constant(xy, Rational(1), 10));
    CHECK(square.remainder_coeffs[0] == poly_series("x", vs("x"), 10));
    CHECK(square.remainder_coeffs[1].is_zero());

    const WeierstrassDivision one = w_divide(poly_series("1", xy, 12), g, "y");
    CHECK(one.quotient.is_zero());
    CHECK(one.remainder_coeffs[0] == TruncSeries::constant(vs("x"), Rational(1), 10));
    CHECK(one.remainder_coeffs[1].is_zero());
}

TEST_CASE("dividing zero gives zero quotient and remainder") {
    const VarSet xy = vs("x,y");
    const WeierstrassDivision div =
        w_divide(TruncSeries(xy, 12), poly_series("y^3 - x*y + x^2", xy, 12), "y");
    CHECK(div.quotient.is_zero());
    for (const auto& b : div.remainder_coeffs) CHECK(b.is_zero());
}

TEST_CASE("preparation examples") {
    const VarSet xy = vs("x,y");

    const WeierstrassPreparation already = w_prepare(poly_series("y^2 - x", xy, 12), "y");
    CHECK(already.degree == 2);
    CHECK(already.unit == TruncSeries::constant(xy, Rational(1), 10));
    CHECK(already.distinguished_coeffs[0] == poly_series("-x", vs("x"), 10));
    CHECK(already.distinguished_coeffs[1].is_zero());

    // (1+x)y^2 - x = (1+x) * (y^2 - x/(1+x))
    const WeierstrassPreparation unit_node =
        w_prepare(poly_series("(1 + x)*y^2 - x", xy, 12), "y");
    CHECK(unit_node.degree == 2);
    CHECK(agree_through(unit_node.unit, poly_series("1 + x", xy, 10), 10));
    TruncSeries expected_a0(vs("x"), 10);
    for (int k = 1; k <= 10; ++k) expected_a0.add_term({k}, Rational((k % 2 == 0) ? 1 : -1));
    CHECK(unit_node.distinguished_coeffs[0] == expected_a0);  // -x/(1+x)
    CHECK(unit_node.distinguished_coeffs[1].is_zero());

    const WeierstrassPreparation linear = w_prepare(poly_series("(1 + x)*y", xy, 12), "y");
    CHECK(linear.degree == 1);
    CHECK(agree_through(linear.unit, poly_series("1 + x", xy, 11), 11));
    CHECK(linear.distinguished_coeffs[0].is_zero());  // p = y
}

TEST_CASE("regularity is required") {
    const VarSet xy = vs("x,y");
    CHECK_THROWS_AS(w_prepare(poly_series("x", xy, 12), "y"), NotRegular);
    CHECK_THROWS_AS(
        w_divide(poly_series("y", xy, 12), poly_series("x*y + x", xy, 12), "y"), NotRegular);
}

TEST_CASE("unit divisor behaves like plain series division") {
    const VarSet xy = vs("x,y");
    const TruncSeries f = poly_series("y^2 + x", xy, 12);
    const TruncSeries g = poly_series("1 + x + y", xy, 12);
    const WeierstrassDivision div = w_divide(f, g, "y");
    CHECK(div.regularity_order == 0);
    CHECK(div.remainder_coeffs.empty());
    CHECK(agree_through(div.quotient * g.truncated(div.window), f.truncated(div.window),
                        div.window));
}

TEST_CASE("random reconstruction suite") {
    Rng rng(424242);
    const std::vector<VarSet> var_choices = {vs("x,v"), vs("x,y,v"), vs("v")};
    for (int trial = 0; trial < 100; ++trial) {
        const VarSet& vars = var_choices[static_cast<std::size_t>(trial) % var_choices.size()];
        const int d = std::uniform_int_distribution<int>(1, 4)(rng);
        const TruncSeries g = random_regular(rng, vars, d, 12, 8);
        const TruncSeries f = random_series(rng, vars, 12, 8);
        check_division(f, g, "v");
        check_preparation(g, "v");
    }
}

TEST_CASE("preparation agrees with factorization lifting on monic polynomials") {
    Rng rng(777);
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    int used = 0;
    for (int trial = 0; trial < 40 && used < 15; ++trial) {
        // monic g with t-regular order d < deg
        const int d = std::uniform_int_distribution<int>(1, 2)(rng);
        const int extra = std::uniform_int_distribution<int>(1, 2)(rng);
        MultiPoly g = pp("t", xt).pow(static_cast<unsigned>(d + extra));
        for (int k = d; k < d + extra; ++k) {
            MultiPoly c = MultiPoly::constant(
                xt, random_rational(rng, /*allow_zero=*/false));
            g += c * pp("t", xt).pow(static_cast<unsigned>(k));
        }
        // mixed lower terms divisible by x keep the regular order at d
        for (int k = 0; k < d; ++k)
            g += random_poly(rng, xv, 3, 2).reindexed(xt) * pp("x", xt) *
                 pp("t", xt).pow(static_cast<unsigned>(k));

        const TruncSeries gs = TruncSeries::from_poly(g, 12);
        const SeriesOrder reg = gs.regular_order(1);
        if (!reg.finite || reg.value != d) continue;

        // seeds t^d and g(0,t)/t^d
        MultiPoly p0(xt), q0(xt);
        p0.add_term({0, d}, Rational(1));
        for (const auto& [e, c] : g.terms()) {
            if (e[0] == 0) q0.add_term({0, e[1] - d}, c);
        }
        if (resultant(p0, q0, "t").is_zero()) continue;
        ++used;

        const LiftedFactorization lf = lift_factorization(g, "t", p0, q0, 12);
        const WeierstrassPreparation prep = w_prepare(gs, "t");
        REQUIRE(prep.degree == d);
        REQUIRE(lf.p.degree() == d);
        for (int k = 0; k < d; ++k)
            CHECK(agree_through(prep.distinguished_coeffs[static_cast<std::size_t>(k)],
                                lf.p.coeffs[static_cast<std::size_t>(k)].truncated(prep.window),
                                prep.window));
    }
    CHECK(used >= 10);
}
