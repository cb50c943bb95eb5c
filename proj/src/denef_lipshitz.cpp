#include "algser/denef_lipshitz.hpp"

#include <algorithm>

#include "algser/diagonal.hpp"
#include "algser/errors.hpp"

namespace algser {

WRepresentation WRepresentation::identity(const VarSet& base_vars) {
    WRepresentation rep;
    rep.a.push_back(MultiPoly(base_vars));
    rep.a.push_back(MultiPoly::constant(base_vars, Rational(1)));
    rep.b.push_back(MultiPoly::constant(base_vars, Rational(1)));
    return rep;
}

namespace {

void require_etale_with_trailing_t(const AlgebraicSeriesSpec& spec) {
    if (!spec.etale_flag)
        throw NotEtale("annihilator is not etale-algebraic: " +
                       is_etale_algebraic(spec.annihilator, spec.series_var).diagnostic);
    const VarSet& vars = spec.annihilator.vars();
    if (vars.name(vars.size() - 1) != spec.series_var)
        throw UsageError("the series variable must be listed last for diagonal constructions");
}

// W as a polynomial in (x..., t) from coefficient lists over the base vars.
MultiPoly assemble_w(const std::vector<MultiPoly>& coeffs, const VarSet& full,
                     const std::string& tvar) {
    MultiPoly w(full);
    const MultiPoly t = MultiPoly::variable(full, tvar);
    for (std::size_t i = coeffs.size(); i-- > 0;) w = w * t + coeffs[i].reindexed(full);
    return w;
}

}  // namespace

TruncSeries build_F(const AlgebraicSeriesSpec& spec, int bound) {
    require_etale_with_trailing_t(spec);
    const MultiPoly& p = spec.annihilator;
    const VarSet& vars = p.vars();
    const MultiPoly pxt = p.substitute_xt();
    const MultiPoly dpxt = p.derivative(spec.series_var).substitute_xt();
    // P(0,0) = 0 makes every term of P(xt,t) divisible by t.
    const MultiPoly v = exact_divide(pxt, MultiPoly::variable(vars, spec.series_var));
    const TruncSeries v_inv = TruncSeries::from_poly(v, bound).invert_unit();
    return TruncSeries::from_poly(dpxt, bound) * v_inv;
}

VerificationRecord monomial_diagonal_certificate(const AlgebraicSeriesSpec& spec,
                                                 const Exponents& i, int j, int order) {
    require_etale_with_trailing_t(spec);
    const VarSet& vars = spec.annihilator.vars();
    const std::size_t nx = vars.size() - 1;
    if (i.size() != nx) throw UsageError("monomial index length must match the x variables");
    if (j < 0) throw UsageError("negative series power");

    const TruncSeries f = build_F(spec, 2 * order);
    Exponents shift(vars.size(), 0);
    for (std::size_t k = 0; k < nx; ++k) shift[k] = i[k];
    shift[nx] = total_degree(i) + j;  // (xt)^i t^j contributes |i|+j to the t exponent
    const TruncSeries computed =
        big_diagonal(f.mul_monomial(shift, Rational(1))).truncated(order);

    const TruncSeries h = lift_root(spec.annihilator, spec.series_var, Rational(0), order).series;
    const TruncSeries expected =
        h.pow(static_cast<unsigned>(j)).mul_monomial(i, Rational(1)).truncated(order);

    VerificationRecord rec{order, expected, computed, false};
    rec.pass = agree_through(rec.expected, rec.computed, order);
    return rec;
}

TruncSeries representation_at_series(const WRepresentation& rep, const TruncSeries& h) {
    if (rep.a.empty() || rep.b.empty())
        throw UsageError("representation needs nonempty coefficient lists");
    const int bound = h.bound();
    auto combine = [&](const std::vector<MultiPoly>& coeffs) {
        TruncSeries acc(h.vars(), bound);
        for (std::size_t k = coeffs.size(); k-- > 0;)
            acc = acc * h + TruncSeries::from_poly(coeffs[k], bound);
        return acc;
    };
    const TruncSeries num = combine(rep.a);
    const TruncSeries den = combine(rep.b);
    if (den.constant_coeff().is_zero())
        throw DenominatorNotUnit("representation denominator vanishes at the origin");
    return num * den.invert_unit();
}

DLCertificate dl_rational(const AlgebraicSeriesSpec& spec, const WRepresentation& rep,
                          int order) {
    require_etale_with_trailing_t(spec);
    if (rep.a.empty() || rep.b.empty())
        throw UsageError("representation needs nonempty coefficient lists");
    if (rep.b.front().constant_term().is_zero())
        throw DenominatorNotUnit("representation denominator b_0 vanishes at the origin");

    const MultiPoly& p = spec.annihilator;
    const VarSet& vars = p.vars();
    const MultiPoly t = MultiPoly::variable(vars, spec.series_var);

    const MultiPoly w_num = assemble_w(rep.a, vars, spec.series_var);
    const MultiPoly w_den = assemble_w(rep.b, vars, spec.series_var);
    RationalFunction rational(w_num.substitute_xt() * t * p.derivative(spec.series_var).substitute_xt(),
                              w_den.substitute_xt() * p.substitute_xt());

    const TruncSeries computed = big_diagonal(rational.expand(2 * order));
    const TruncSeries h = lift_root(p, spec.series_var, Rational(0), order).series;
    const TruncSeries expected = representation_at_series(rep, h);

    VerificationRecord rec{order, expected, computed.truncated(order), false};
    rec.pass = agree_through(rec.expected, rec.computed, order);
    return DLCertificate{spec, rep, std::move(rational), std::move(rec)};
}

VerificationRecord dl_verify(const RationalFunction& rational, const TruncSeries& expected,
                             int order) {
    if (expected.bound() < order)
        throw UsageError("expected series is not exact through the requested order");
    const TruncSeries computed = big_diagonal(rational.expand(2 * order)).truncated(order);
    VerificationRecord rec{order, expected.truncated(order), computed, false};
    rec.pass = agree_through(rec.expected, rec.computed, order);
    return rec;
}

}  // namespace algser
