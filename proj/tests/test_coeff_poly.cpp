#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algser/errors.hpp"
#include "algser/multipoly.hpp"
#include "algser/oracles.hpp"
#include "algser/series.hpp"
#include "support.hpp"

using namespace algser;
using namespace testsupport;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(0, 7).den_string() == "1");
    CHECK(Rational::from_string("-10/15") == Rational(-2, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), MathError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), MathError);
    CHECK_THROWS_AS(Rational::from_string("abc"), UsageError);
}

TEST_CASE("polynomial ring operations") {
    const VarSet xv = vs("x");
    CHECK(pp("x + 1", xv) * pp("x - 1", xv) == pp("x^2 - 1", xv));

    const VarSet xt = vs("x,t");
    const MultiPoly p = pp("t^2 + 2*t - x", xt);
    CHECK(p + MultiPoly(xt) == p);
    CHECK(p * MultiPoly::constant(xt, Rational(1)) == p);
    CHECK((p - p).is_zero());
    CHECK(p.pow(0) == MultiPoly::constant(xt, Rational(1)));
    CHECK(p.pow(2) == p * p);
}

TEST_CASE("mismatched variable sets are usage errors") {
    const MultiPoly a = pp("x", vs("x"));
    const MultiPoly b = pp("y", vs("y"));
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(a * b, UsageError);
}

TEST_CASE("partial derivatives") {
    const VarSet xt = vs("x,t");
    CHECK(pp("t^2 + 2*t - x", xt).derivative("t") == pp("2*t + 2", xt));
    CHECK(pp("x^3", xt).derivative("t").is_zero());
    CHECK(pp("(1 - 4*x)*t^2 - 1", xt).derivative("t") == pp("2*(1 - 4*x)*t", xt));
    CHECK_THROWS_AS(pp("x", xt).derivative("z"), UsageError);
}

TEST_CASE("resultants") {
    const VarSet xt = vs("x,t");
    CHECK(resultant(pp("t^2 - x", xt), pp("t - 1", xt), "t") == pp("1 - x", xt));
    CHECK(resultant(pp("t - 1", xt), pp("t + 1", xt), "t") ==
          MultiPoly::constant(xt, Rational(2)));

    // Res_t(t - a, t - b) = a - b as a polynomial identity.
    const VarSet abt = vs("a,b,t");
    CHECK(resultant(pp("t - a", abt), pp("t - b", abt), "t") == pp("a - b", abt));

    CHECK_THROWS_AS(resultant(pp("x", xt), pp("t", xt), "t"), UsageError);
    CHECK_THROWS_AS(resultant(pp("t", xt), pp("1", xt), "t"), UsageError);
}

TEST_CASE("resultant vanishes exactly on shared factors") {
    Rng rng(20240811);
    const VarSet xv = vs("x,v");
    int coprime_cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // p and q built from linear factors v - r(x) with known root sets.
        std::uniform_int_distribution<int> count(1, 3);
        const bool shared = std::uniform_int_distribution<int>(0, 1)(rng) == 1;

        std::vector<MultiPoly> proots, qroots;
        const int np = count(rng), nq = count(rng);
        for (int i = 0; i < np; ++i) proots.push_back(random_poly(rng, xv, 1, 2));
        for (int i = 0; i < nq; ++i) qroots.push_back(random_poly(rng, xv, 1, 2));
        if (shared) qroots[0] = proots[0];

        auto product = [&](const std::vector<MultiPoly>& roots) {
            MultiPoly acc = MultiPoly::constant(xv, Rational(1));
            for (const auto& r : roots) acc *= (pp("v", xv) - r);
            return acc;
        };
        const MultiPoly res = resultant(product(proots), product(qroots), "v");

        bool have_common = false;
        for (const auto& a : proots)
            for (const auto& b : qroots)
                if (a == b) have_common = true;
        if (have_common) {
            CHECK(res.is_zero());
        } else {
            // All pairwise root differences are nonzero polynomials; the
            // resultant is their product up to sign, hence nonzero.
            bool pairwise_distinct = true;
            for (const auto& a : proots)
                for (const auto& b : qroots) pairwise_distinct &= !(a == b);
            REQUIRE(pairwise_distinct);
            CHECK_FALSE(res.is_zero());
            ++coprime_cases;
        }
    }
    CHECK(coprime_cases > 0);
}

TEST_CASE("resultant commutes with specialization at rational points") {
    Rng rng(7);
    const VarSet xv = vs("x,v");
    const VarSet vv = vs("v");
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_poly(rng, xv, 3, 4) + pp("v^3", xv);
        const MultiPoly q = random_poly(rng, xv, 2, 3) + pp("v^2", xv);
        const MultiPoly res = resultant(p, q, "v");
        for (int s = 0; s < 5; ++s) {
            const Rational x0 = random_rational(rng);
            auto specialize = [&](const MultiPoly& f) {
                MultiPoly out(vv);
                for (const auto& [e, c] : f.terms()) {
                    Rational scale = c;
                    for (int k = 0; k < e[0]; ++k) scale *= x0;
                    out.add_term({e[1]}, scale);
                }
                return out;
            };
            const MultiPoly ps = specialize(p);
            const MultiPoly qs = specialize(q);
            if (ps.degree_in(0) <= 0 || qs.degree_in(0) <= 0) continue;
            // Monic in v, so specializing first gives the same determinant.
            CHECK(specialize(res) == resultant(ps, qs, "v"));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    const VarSet v3 = vs("x,y,z");
    for (int trial = 0; trial < 200; ++trial) {
        const MultiPoly a = random_poly(rng, v3, 6, 4);
        const MultiPoly b = random_poly(rng, v3, 6, 4);
        const MultiPoly c = random_poly(rng, v3, 6, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("annihilator of a sum vanishes on the sum of the roots") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const MultiPoly ann =
        annihilator_sum(pp("t^2 - (1 + x)", xt), pp("t^3 - (1 + x)", xt), "t");
    REQUIRE_FALSE(ann.is_zero());
    CHECK(ann.degree_in(1) == 6);

    const int order = 12;
    const TruncSeries sum =
        from_coeffs(oracles::binomial_series(Rational(1, 2), 1, order), xv, order) +
        from_coeffs(oracles::binomial_series(Rational(1, 3), 1, order), xv, order);
    CHECK(eval_poly_at_series(ann, "t", sum).is_zero());
}

TEST_CASE("annihilator of a sum on linear instances") {
    const VarSet xt = vs("x,t");
    const MultiPoly ann = annihilator_sum(pp("t - 3", xt), pp("t - 5", xt), "t");
    REQUIRE_FALSE(ann.is_zero());
    CHECK(ann.eval({Rational(17), Rational(8)}).is_zero());   // vanishes at t = 3 + 5
    CHECK_FALSE(ann.eval({Rational(17), Rational(7)}).is_zero());
}

TEST_CASE("annihilator of a product vanishes on the product of the roots") {
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const MultiPoly ann = annihilator_prod(pp("t^2 - (1 + x)", xt), pp("t - 2", xt), "t");
    REQUIRE_FALSE(ann.is_zero());
    const int order = 12;
    std::vector<Rational> twice;
    for (const auto& c : oracles::binomial_series(Rational(1, 2), 1, order))
        twice.push_back(c * Rational(2));
    CHECK(eval_poly_at_series(ann, "t", from_coeffs(twice, xv, order)).is_zero());

    CHECK_THROWS_AS(annihilator_sum(MultiPoly(xt), pp("t", xt), "t"), UsageError);
}

TEST_CASE("annihilator combinations across the catalog") {
    // The resultant construction must annihilate the truncated sum and
    // product of any two catalog roots.
    const VarSet xt = vs("x,t");
    const VarSet xv = vs("x");
    const int order = 10;

    struct Item {
        MultiPoly ann;
        TruncSeries root;
    };
    std::vector<Item> items;
    items.push_back({pp("t^2 - (1 + x)", xt),
                     from_coeffs(oracles::binomial_series(Rational(1, 2), 1, order), xv, order)});
    items.push_back({pp("t^3 - (1 + x)", xt),
                     from_coeffs(oracles::binomial_series(Rational(1, 3), 1, order), xv, order)});
    {
        auto h = oracles::binomial_series(Rational(1, 2), 1, order);
        h[0] -= Rational(1);
        items.push_back({pp("t^2 + 2*t - x", xt), from_coeffs(h, xv, order)});
    }
    items.push_back(
        {pp("t^2 - t + x", xt), from_coeffs(oracles::catalan_shifted(order), xv, order)});

    for (const auto& lhs : items) {
        for (const auto& rhs : items) {
            const MultiPoly s = annihilator_sum(lhs.ann, rhs.ann, "t");
            REQUIRE_FALSE(s.is_zero());
            CHECK(eval_poly_at_series(s, "t", lhs.root + rhs.root).is_zero());

            const MultiPoly m = annihilator_prod(lhs.ann, rhs.ann, "t");
            REQUIRE_FALSE(m.is_zero());
            CHECK(eval_poly_at_series(m, "t", lhs.root * rhs.root).is_zero());
        }
    }
}

TEST_CASE("exact division") {
    const VarSet xt = vs("x,t");
    const MultiPoly a = pp("t^2 + 2*t - x", xt);
    const MultiPoly b = pp("x*t - 1", xt);
    CHECK(exact_divide(a * b, b) == a);
    CHECK_THROWS_AS(exact_divide(pp("t + 1", xt), pp("t", xt)), NotDivisible);
}
