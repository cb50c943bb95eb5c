#include "algser/hensel.hpp"

#include <algorithm>

#include "algser/errors.hpp"

namespace algser {

namespace {

// Re-declares the stated window of a series. Only valid when the caller has
// proved exactness through the new bound (Newton doubling does).
TruncSeries with_bound(const TruncSeries& s, int bound) {
    TruncSeries r(s.vars(), bound);
    for (const auto& [e, c] : s.terms()) r.add_term(e, c);
    return r;
}

Rational origin_value(const MultiPoly& p, const std::string& series_var, const Rational& lambda) {
    std::vector<Rational> point(p.vars().size(), Rational(0));
    point[p.vars().index_of(series_var)] = lambda;
    return p.eval(point);
}

}  // namespace

EtaleCheck is_etale_algebraic(const MultiPoly& p, const std::string& series_var) {
    if (p.is_zero()) throw UsageError("etale check on the zero polynomial");
    p.vars().index_of(series_var);
    if (!p.constant_term().is_zero()) return {false, "P(0,0) is nonzero"};
    const Rational d = origin_value(p.derivative(series_var), series_var, Rational(0));
    if (d.is_zero()) return {false, "dP/d" + series_var + "(0,0) vanishes"};
    return {true, "ok"};
}

VarSet AlgebraicSeriesSpec::base_vars() const {
    return annihilator.vars().without(annihilator.vars().index_of(series_var));
}

AlgebraicSeriesSpec make_spec(MultiPoly p, const std::string& series_var) {
    if (p.is_zero()) throw UsageError("annihilator must be nonzero");
    const std::size_t ti = p.vars().index_of(series_var);
    if (p.degree_in(ti) <= 0)
        throw UsageError("annihilator needs positive degree in '" + series_var + "'");
    const EtaleCheck check = is_etale_algebraic(p, series_var);
    return AlgebraicSeriesSpec{std::move(p), series_var, check.etale};
}

LiftedRoot lift_root(const MultiPoly& p, const std::string& series_var, const Rational& lambda,
                     int bound) {
    AlgebraicSeriesSpec spec = make_spec(p, series_var);
    if (!origin_value(p, series_var, lambda).is_zero())
        throw NotARoot(lambda.str() + " is not a root of P(0,t)");
    const MultiPoly dp = p.derivative(series_var);
    if (origin_value(dp, series_var, lambda).is_zero())
        throw MultipleRoot(lambda.str() + " is a multiple root of P(0,t); lifting refused");

    const VarSet xvars = spec.base_vars();
    TruncSeries h = TruncSeries::constant(xvars, lambda, 0);
    int w = 0;
    while (w < bound) {
        const int next = std::min(2 * w + 1, bound);
        const TruncSeries hw = with_bound(h, next);
        const TruncSeries value = eval_poly_at_series(p, series_var, hw);
        const TruncSeries slope = eval_poly_at_series(dp, series_var, hw);
        h = hw - value * slope.invert_unit();
        w = next;
    }
    return LiftedRoot{std::move(spec), lambda, std::move(h)};
}

LiftedRoot lift_root_order_by_order(const MultiPoly& p, const std::string& series_var,
                                    const Rational& lambda, int bound) {
    AlgebraicSeriesSpec spec = make_spec(p, series_var);
    if (!origin_value(p, series_var, lambda).is_zero())
        throw NotARoot(lambda.str() + " is not a root of P(0,t)");
    const MultiPoly dp = p.derivative(series_var);
    const Rational slope0 = origin_value(dp, series_var, lambda);
    if (slope0.is_zero())
        throw MultipleRoot(lambda.str() + " is a multiple root of P(0,t); lifting refused");
    const Rational step = -slope0.reciprocal();

    const VarSet xvars = spec.base_vars();
    TruncSeries h = TruncSeries::constant(xvars, lambda, 0);
    for (int w = 1; w <= bound; ++w) {
        const TruncSeries hw = with_bound(h, w);
        const TruncSeries residue = eval_poly_at_series(p, series_var, hw);
        TruncSeries next = hw;
        for (const auto& [e, c] : residue.terms()) {
            if (total_degree(e) == w) next.add_term(e, c * step);
        }
        h = std::move(next);
    }
    return LiftedRoot{std::move(spec), lambda, std::move(h)};
}

namespace {

// Dense LU with partial pivoting over the rationals.
class RationalLU {
public:
    explicit RationalLU(std::vector<std::vector<Rational>> m) : lu_(std::move(m)) {
        const std::size_t n = lu_.size();
        perm_.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            while (pivot < n && lu_[pivot][k].is_zero()) ++pivot;
            if (pivot == n) throw NotCoprime("Sylvester system is singular");
            std::swap(lu_[k], lu_[pivot]);
            std::swap(perm_[k], perm_[pivot]);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (lu_[i][k].is_zero()) continue;
                const Rational factor = lu_[i][k] / lu_[k][k];
                lu_[i][k] = factor;
                for (std::size_t j = k + 1; j < n; ++j) lu_[i][j] -= factor * lu_[k][j];
            }
        }
    }

    std::vector<Rational> solve(const std::vector<Rational>& rhs) const {
        const std::size_t n = lu_.size();
        std::vector<Rational> y(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc = rhs[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) acc -= lu_[i][j] * y[j];
            y[i] = acc;
        }
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) acc -= lu_[ii][j] * x[j];
            x[ii] = acc / lu_[ii][ii];
        }
        return x;
    }

private:
    std::vector<std::vector<Rational>> lu_;
    std::vector<std::size_t> perm_;
};

std::vector<Rational> univariate_coeffs(const MultiPoly& p, std::size_t ti, int expect_deg) {
    std::vector<Rational> out(static_cast<std::size_t>(expect_deg) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != ti && e[i] != 0)
                throw UsageError("factorization seed must involve only the series variable");
        }
        out[static_cast<std::size_t>(e[ti])] = c;
    }
    return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, int degree) {
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) == degree) r.add_term(e, c);
    }
    return r;
}

}  // namespace

LiftedFactorization lift_factorization(const MultiPoly& f, const std::string& series_var,
                                       const MultiPoly& p0, const MultiPoly& q0, int bound) {
    if (f.vars() != p0.vars() || f.vars() != q0.vars())
        throw UsageError("factorization inputs must share one variable set");
    const std::size_t ti = f.vars().index_of(series_var);
    const int n = f.degree_in(ti);
    if (n <= 0) throw UsageError("f needs positive degree in '" + series_var + "'");

    const auto f_coeffs_full = f.coefficients_in(series_var);
    if (f_coeffs_full.back() != MultiPoly::constant(f.vars(), Rational(1)))
        throw UsageError("f must be monic in '" + series_var + "'");

    const int d = std::max(p0.degree_in(ti), 0);
    const int e = std::max(q0.degree_in(ti), 0);
    const auto pc = univariate_coeffs(p0, ti, d);
    const auto qc = univariate_coeffs(q0, ti, e);
    if (!pc.back().is_one() || !qc.back().is_one())
        throw UsageError("factorization seeds must be monic");

    // f(0,t) must equal p0*q0.
    {
        if (d + e != n) throw BadSeed("seed degrees do not add up to deg f");
        std::vector<Rational> f0(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int j = 0; j <= n; ++j) f0[static_cast<std::size_t>(j)] =
            f_coeffs_full[static_cast<std::size_t>(j)].constant_term();
        for (int j = 0; j <= n; ++j) {
            Rational conv(0);
            for (int a = std::max(0, j - e); a <= std::min(j, d); ++a)
                conv += pc[static_cast<std::size_t>(a)] * qc[static_cast<std::size_t>(j - a)];
            if (conv != f0[static_cast<std::size_t>(j)])
                throw BadSeed("f(0,t) differs from p0*q0");
        }
    }

    const VarSet xvars = f.vars().without(ti);

    // Degree-zero seeds make one factor trivial.
    auto lift_trivial = [&](bool p_trivial) {
        SeriesFactor one{{TruncSeries::constant(xvars, Rational(1), bound)}};
        SeriesFactor whole;
        for (const auto& cf : f_coeffs_full)
            whole.coeffs.push_back(TruncSeries::from_poly(cf.reindexed(xvars), bound));
        LiftedFactorization out;
        out.p = p_trivial ? one : whole;
        out.q = p_trivial ? whole : one;
        out.bound = bound;
        return out;
    };
    if (d == 0) return lift_trivial(true);
    if (e == 0) return lift_trivial(false);

    if (resultant(p0, q0, series_var).is_zero())
        throw NotCoprime("seed polynomials share a common root");

    // Linear map (a, b) -> a*q0 + p0*b on coefficient vectors; its matrix is
    // the transposed Sylvester structure of (q0, p0).
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n),
                                                               Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < d; ++j) {
            const int k = r - j;
            if (k >= 0 && k <= e) m[r][j] = qc[static_cast<std::size_t>(k)];
        }
        for (int j = 0; j < e; ++j) {
            const int k = r - j;
            if (k >= 0 && k <= d) m[r][static_cast<std::size_t>(d + j)] =
                pc[static_cast<std::size_t>(k)];
        }
    }
    const RationalLU lu(std::move(m));

    std::vector<MultiPoly> p_cur(static_cast<std::size_t>(d) + 1, MultiPoly(xvars));
    std::vector<MultiPoly> q_cur(static_cast<std::size_t>(e) + 1, MultiPoly(xvars));
    for (int j = 0; j <= d; ++j)
        p_cur[static_cast<std::size_t>(j)] =
            MultiPoly::constant(xvars, pc[static_cast<std::size_t>(j)]);
    for (int j = 0; j <= e; ++j)
        q_cur[static_cast<std::size_t>(j)] =
            MultiPoly::constant(xvars, qc[static_cast<std::size_t>(j)]);

    std::vector<MultiPoly> f_x;
    f_x.reserve(f_coeffs_full.size());
    for (const auto& cf : f_coeffs_full) f_x.push_back(cf.reindexed(xvars));

    for (int k = 1; k <= bound; ++k) {
        // Residual at x-degree k with the corrections found so far.
        std::vector<MultiPoly> rhs(static_cast<std::size_t>(n), MultiPoly(xvars));
        for (int j = 0; j < n; ++j) {
            MultiPoly conv(xvars);
            for (int a = std::max(0, j - e); a <= std::min(j, d); ++a)
                conv += p_cur[static_cast<std::size_t>(a)] * q_cur[static_cast<std::size_t>(j - a)];
            rhs[static_cast<std::size_t>(j)] =
                homogeneous_part(f_x[static_cast<std::size_t>(j)] - conv, k);
        }

        std::map<Exponents, std::vector<Rational>, GrlexLess> columns;
        for (int j = 0; j < n; ++j) {
            for (const auto& [exp, c] : rhs[static_cast<std::size_t>(j)].terms()) {
                auto [it, unused] =
                    columns.emplace(exp, std::vector<Rational>(static_cast<std::size_t>(n),
                                                               Rational(0)));
                it->second[static_cast<std::size_t>(j)] = c;
            }
        }

        for (const auto& [exp, v] : columns) {
            const std::vector<Rational> z = lu.solve(v);
            for (int j = 0; j < d; ++j)
                p_cur[static_cast<std::size_t>(j)].add_term(exp, z[static_cast<std::size_t>(j)]);
            for (int j = 0; j < e; ++j)
                q_cur[static_cast<std::size_t>(j)].add_term(exp,
                                                            z[static_cast<std::size_t>(d + j)]);
        }
    }

    LiftedFactorization out;
    for (const auto& cp : p_cur) out.p.coeffs.push_back(TruncSeries::from_poly(cp, bound));
    for (const auto& cq : q_cur) out.q.coeffs.push_back(TruncSeries::from_poly(cq, bound));
    out.bound = bound;
    return out;
}

std::vector<TruncSeries> factor_product_coeffs(const SeriesFactor& a, const SeriesFactor& b) {
    if (a.coeffs.empty() || b.coeffs.empty())
        throw UsageError("factor product needs nonempty coefficient lists");
    const VarSet& vars = a.coeffs.front().vars();
    int bound = a.coeffs.front().bound();
    for (const auto& s : a.coeffs) bound = std::min(bound, s.bound());
    for (const auto& s : b.coeffs) bound = std::min(bound, s.bound());
    const std::size_t n = a.coeffs.size() + b.coeffs.size() - 1;
    std::vector<TruncSeries> out(n, TruncSeries(vars, bound));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] = out[i + j] + a.coeffs[i] * b.coeffs[j];
    return out;
}

MultiPoly shift_annihilator(const MultiPoly& p, const std::string& series_var, const Rational& c) {
    p.vars().index_of(series_var);
    return p.shift_var(series_var, c);
}

}  // namespace algser
