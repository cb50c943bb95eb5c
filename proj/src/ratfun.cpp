#include "algser/ratfun.hpp"

#include <algorithm>

#include "algser/errors.hpp"

namespace algser {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars())
        throw UsageError("numerator and denominator have different variable sets");
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.vars(), Rational(1));
    return RationalFunction(std::move(p), std::move(one));
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw MathError("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(unsigned k) const {
    return {num_.pow(k), den_.pow(k)};
}

namespace {

Exponents common_monomial(const MultiPoly& p) {
    Exponents g;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            g = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
        }
    }
    if (first) g.assign(p.vars().size(), 0);
    return g;
}

MultiPoly shift_down(const MultiPoly& p, const Exponents& g) {
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents n = e;
        for (std::size_t i = 0; i < n.size(); ++i) n[i] -= g[i];
        r.add_term(n, c);
    }
    return r;
}

}  // namespace

RationalFunction RationalFunction::monomial_reduced() const {
    const Exponents gn = common_monomial(num_);
    const Exponents gd = common_monomial(den_);
    Exponents g(gn.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(gn[i], gd[i]);
    if (total_degree(g) == 0) return *this;
    return {shift_down(num_, g), shift_down(den_, g)};
}

bool RationalFunction::is_series_expandable() const {
    return !monomial_reduced().den().constant_term().is_zero();
}

TruncSeries RationalFunction::expand(int bound) const {
    const RationalFunction reduced = monomial_reduced();
    if (reduced.den().constant_term().is_zero())
        throw NotExpandable(
            "denominator is not a unit after cancelling the common monomial factor");
    const TruncSeries den_inv = TruncSeries::from_poly(reduced.den(), bound).invert_unit();
    if (reduced.num().term_count() == 1) {
        const auto& [e, c] = *reduced.num().terms().begin();
        return den_inv.mul_monomial(e, c).truncated(bound);
    }
    return TruncSeries::from_poly(reduced.num(), bound) * den_inv;
}

std::string RationalFunction::str() const {
    if (den_ == MultiPoly::constant(den_.vars(), Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace algser
