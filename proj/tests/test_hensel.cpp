#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algser/errors.hpp"
#include "algser/hensel.hpp"
#include "algser/oracles.hpp"
#include "support.hpp"

using namespace algser;
using namespace testsupport;

TEST_CASE("etale-algebraicity check") {
    const VarSet xt = vs("x,t");
    CHECK_FALSE(is_etale_algebraic(pp("t^2 + x^3 - x^2", xt), "t").etale);
    CHECK(is_etale_algebraic(pp("t^2 + 2*t + x", xt), "t").etale);
    CHECK(is_etale_algebraic(pp("t - x", xt), "t").etale);
    CHECK_FALSE(is_etale_algebraic(pp("t^2 - x + 1", xt), "t").etale);
    CHECK(is_etale_algebraic(pp("t^2 + x^3 - x^2", xt), "t").diagnostic.find("vanishes") !=
          std::string::npos);
}

TEST_CASE("root lifting examples") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");

    const LiftedRoot bin = lift_root(pp("t^2 + 2*t - x", xt), "t", Rational(0), 4);
    CHECK(bin.series ==
          TruncSeries::from_poly(pp("1/2*x - 1/8*x^2 + 1/16*x^3 - 5/128*x^4", xv), 4));

    const MultiPoly p = pp("x^2 - 3*x", xv).reindexed(xt);
    const LiftedRoot poly_root = lift_root(pp("t", xt) - p, "t", Rational(0), 9);
    CHECK(poly_root.series == TruncSeries::from_poly(pp("x^2 - 3*x", xv), 9));

    const LiftedRoot catalan = lift_root(pp("t^2 - t + x", xt), "t", Rational(0), 5);
    CHECK(catalan.series ==
          TruncSeries::from_poly(pp("x + x^2 + 2*x^3 + 5*x^4 + 14*x^5", xv), 5));
}

TEST_CASE("root lifting rejects bad data") {
    const VarSet xt = vs("x,t");
    CHECK_THROWS_AS(lift_root(pp("t^2 + 2*t - x", xt), "t", Rational(1), 4), NotARoot);
    CHECK_THROWS_AS(lift_root(pp("t^2 - x", xt), "t", Rational(0), 4), MultipleRoot);
    CHECK_THROWS_AS(lift_root(pp("x", xt), "t", Rational(0), 4), UsageError);
}

TEST_CASE("nonzero simple roots lift too") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    // t^2 - (1+x) at lambda = 1 lifts to sqrt(1+x)
    const LiftedRoot r = lift_root(pp("t^2 - (1 + x)", xt), "t", Rational(1), 12);
    CHECK(r.series == from_coeffs(oracles::binomial_series(Rational(1, 2), 1, 12), xv, 12));
}

TEST_CASE("factorization lifting: sqrt(1+x)") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const LiftedFactorization lf = lift_factorization(
        pp("t^2 - (1 + x)", xt), "t", pp("t - 1", xt), pp("t + 1", xt), 30);

    REQUIRE(lf.p.degree() == 1);
    REQUIRE(lf.q.degree() == 1);
    CHECK(lf.p.coeffs[1] == TruncSeries::constant(xv, Rational(1), 30));

    // p = t - sqrt(1+x): its root is the binomial series with constant 1
    const TruncSeries root = -lf.p.coeffs[0];
    CHECK(root == from_coeffs(oracles::binomial_series(Rational(1, 2), 1, 30), xv, 30));

    const auto prod = factor_product_coeffs(lf.p, lf.q);
    const auto fc = pp("t^2 - (1 + x)", xt).coefficients_in("t");
    for (std::size_t k = 0; k < prod.size(); ++k)
        CHECK(prod[k] == TruncSeries::from_poly(fc[k].reindexed(xv), 30));
}

TEST_CASE("factorization lifting recovers exact polynomial factors") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const MultiPoly f = pp("(t - x)*(t - 1 - x)", xt);
    const LiftedFactorization lf =
        lift_factorization(f, "t", pp("t", xt), pp("t - 1", xt), 12);
    CHECK(lf.p.coeffs[0] == TruncSeries::from_poly(pp("-x", xv), 12));
    CHECK(lf.q.coeffs[0] == TruncSeries::from_poly(pp("-1 - x", xv), 12));
}

TEST_CASE("factorization lifting with a quadratic cofactor") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const MultiPoly f = pp("t^3 - (1 + x)*t", xt);
    const LiftedFactorization lf =
        lift_factorization(f, "t", pp("t", xt), pp("t^2 - 1", xt), 12);
    CHECK(lf.p.coeffs[0].is_zero());
    CHECK(lf.q.coeffs[0] == TruncSeries::from_poly(pp("-1 - x", xv), 12));
    CHECK(lf.q.coeffs[1].is_zero());
}

TEST_CASE("factorization lifting rejects bad seeds") {
    const VarSet xt = vs("x,t");
    CHECK_THROWS_AS(
        lift_factorization(pp("t^2 - (1 + x)", xt), "t", pp("t - 2", xt), pp("t + 1", xt), 5),
        BadSeed);
    CHECK_THROWS_AS(lift_factorization(pp("t^2 - x", xt), "t", pp("t", xt), pp("t", xt), 5),
                    NotCoprime);
    CHECK_THROWS_AS(
        lift_factorization(pp("x*t^2 - 1", xt), "t", pp("t - 1", xt), pp("t + 1", xt), 5),
        UsageError);  // not monic
}

TEST_CASE("lifted roots annihilate and are window-stable") {
    Rng rng(808);
    const VarSet xt = vs("x,t");
    for (const auto& entry : etale_catalog(10)) {
        const MultiPoly p = pp(entry.annihilator, xt);
        const LiftedRoot r = lift_root(p, "t", Rational(0), 10);
        CHECK(eval_poly_at_series(p, "t", r.series).is_zero());
        CHECK(r.series == from_coeffs(entry.root_coeffs, vs("x"), 10));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const MultiPoly p = random_etale_annihilator(rng, xt);
        const LiftedRoot r = lift_root(p, "t", Rational(0), 8);
        CHECK(eval_poly_at_series(p, "t", r.series).is_zero());

        // uniqueness: windows agree across bounds
        const LiftedRoot wide = lift_root(p, "t", Rational(0), 12);
        CHECK(agree_through(r.series, wide.series.truncated(8), 8));
    }
}

TEST_CASE("Newton lifting agrees with order-by-order lifting") {
    Rng rng(1234);
    const VarSet xt = vs("x,t");
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_etale_annihilator(rng, xt);
        const LiftedRoot newton = lift_root(p, "t", Rational(0), 10);
        const LiftedRoot linear = lift_root_order_by_order(p, "t", Rational(0), 10);
        CHECK(newton.series == linear.series);
    }
}

TEST_CASE("random factorizations reconstruct the product") {
    Rng rng(555);
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    for (int trial = 0; trial < 25; ++trial) {
        // f = (t^2 + a(x) t + b(x))(t + c(x)) with controlled seed values
        const MultiPoly a = random_poly(rng, xv, 2, 2);
        const MultiPoly b = random_poly(rng, xv, 2, 2);
        const MultiPoly c = random_poly(rng, xv, 2, 2);
        const MultiPoly t = pp("t", xt);
        const MultiPoly f =
            (t * t + a.reindexed(xt) * t + b.reindexed(xt)) * (t + c.reindexed(xt));

        // seeds from the constant terms
        const Rational a0 = a.constant_term(), b0 = b.constant_term(), c0 = c.constant_term();
        const MultiPoly p0 =
            t * t + MultiPoly::constant(xt, a0) * t + MultiPoly::constant(xt, b0);
        const MultiPoly q0 = t + MultiPoly::constant(xt, c0);
        if (resultant(p0, q0, "t").is_zero()) continue;

        const LiftedFactorization lf = lift_factorization(f, "t", p0, q0, 10);
        CHECK(lf.p.coeffs.back() == TruncSeries::constant(xv, Rational(1), 10));
        CHECK(lf.q.coeffs.back() == TruncSeries::constant(xv, Rational(1), 10));
        const auto prod = factor_product_coeffs(lf.p, lf.q);
        const auto fc = f.coefficients_in("t");
        REQUIRE(prod.size() == fc.size());
        for (std::size_t k = 0; k < prod.size(); ++k)
            CHECK(prod[k] == TruncSeries::from_poly(fc[k].reindexed(xv), 10));
    }
}

TEST_CASE("annihilator shifting") {
    const VarSet xt = vs("x,t");
    CHECK(shift_annihilator(pp("t^2 - (1 - x)", xt), "t", Rational(1)) ==
          pp("t^2 + 2*t + x", xt));
    const MultiPoly p = pp("t^3 - x*t + 7", xt);
    CHECK(shift_annihilator(p, "t", Rational(0)) == p);
    CHECK(shift_annihilator(pp("t - x", xt), "t", Rational(5)) == pp("t + 5 - x", xt));
}
