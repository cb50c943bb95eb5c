#include "algser/artin_mazur.hpp"

#include "algser/errors.hpp"
#include "algser/hensel.hpp"

namespace algser {

namespace {

Rational origin_coeff(const MultiPoly& p) { return p.constant_term(); }

std::array<std::array<Rational, 2>, 2> jacobian_at_origin(const MultiPoly& p1,
                                                          const MultiPoly& p2,
                                                          const std::string& y1,
                                                          const std::string& y2) {
    return {{{origin_coeff(p1.derivative(y1)), origin_coeff(p1.derivative(y2))},
             {origin_coeff(p2.derivative(y1)), origin_coeff(p2.derivative(y2))}}};
}

}  // namespace

AMCode am_code_simple(const MultiPoly& q, const std::string& y1, const std::string& y2) {
    q.vars().index_of(y1);
    if (q.vars().contains(y2)) throw UsageError("the second code variable is already in use");
    if (!q.constant_term().is_zero())
        throw UseRepresentationBranch("Q(0,0) is nonzero; 0 is not a root");
    if (origin_coeff(q.derivative(y1)).is_zero())
        throw UseRepresentationBranch("dQ/d" + y1 +
                                      "(0,0) vanishes; use the representation branch");

    const VarSet full = q.vars().with_appended(y2);
    AMCode code{q.reindexed(full), MultiPoly::variable(full, y2), {}, AMCode::Branch::simple, y1,
                y2};
    code.jacobian_at_origin = jacobian_at_origin(code.p1, code.p2, y1, y2);
    return code;
}

AMCode am_code_from_representation(const WRepresentation& rep, const MultiPoly& s,
                                   const std::string& y1, const std::string& y2) {
    const EtaleCheck check = is_etale_algebraic(s, y2);
    if (!check.etale) throw NotEtale("S is not etale-algebraic in " + y2 + ": " + check.diagnostic);
    if (rep.a.empty() || rep.b.empty())
        throw UsageError("representation needs nonempty coefficient lists");
    if (rep.b.front().constant_term().is_zero())
        throw DenominatorNotUnit("representation denominator b_0 vanishes at the origin");
    if (s.vars().contains(y1)) throw UsageError("the first code variable is already in use");

    // Full variable order (x..., y1, y2).
    const std::size_t y2i = s.vars().index_of(y2);
    const VarSet full = s.vars().without(y2i).with_appended(y1).with_appended(y2);

    const MultiPoly y2p = MultiPoly::variable(full, y2);
    MultiPoly t1(full);
    for (std::size_t i = rep.a.size(); i-- > 0;) t1 = t1 * y2p + rep.a[i].reindexed(full);
    MultiPoly t2(full);
    for (std::size_t j = rep.b.size(); j-- > 0;) t2 = t2 * y2p + rep.b[j].reindexed(full);

    AMCode code{MultiPoly::variable(full, y1) * t2 - t1, s.reindexed(full), {},
                AMCode::Branch::representation, y1, y2};
    code.jacobian_at_origin = jacobian_at_origin(code.p1, code.p2, y1, y2);
    return code;
}

AMVerification am_verify(const AMCode& code, const TruncSeries& f, const TruncSeries& h,
                         int order) {
    if (f.bound() < order || h.bound() < order)
        throw UsageError("verification order exceeds a series bound");
    const std::vector<std::pair<std::string, TruncSeries>> subs = {{code.y1, f}, {code.y2, h}};
    const TruncSeries r1 = eval_poly_at_series(code.p1, subs).truncated(order);
    const TruncSeries r2 = eval_poly_at_series(code.p2, subs).truncated(order);

    AMVerification v;
    v.order = order;
    v.first_vanishes = r1.is_zero();
    v.second_vanishes = r2.is_zero();
    v.jacobian_invertible = !code.jacobian_det().is_zero();
    v.pass = v.first_vanishes && v.second_vanishes && v.jacobian_invertible;
    return v;
}

}  // namespace algser
