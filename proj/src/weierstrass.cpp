#include "algser/weierstrass.hpp"

#include <algorithm>
#include <map>

#include "algser/errors.hpp"

namespace algser {

namespace {

// Dense univariate polynomial in the distinguished variable, index = exponent.
using UniPoly = std::vector<Rational>;

void uni_resize(UniPoly& p, std::size_t n) {
    if (p.size() < n) p.resize(n, Rational(0));
}

// dst -= a * b, keeping exponents <= cap.
void uni_mul_sub(UniPoly& dst, const UniPoly& a, const UniPoly& b, int cap) {
    uni_resize(dst, static_cast<std::size_t>(cap) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        const std::size_t jmax =
            std::min(b.size(), static_cast<std::size_t>(cap) + 1 - std::min<std::size_t>(i, cap));
        for (std::size_t j = 0; j < jmax && i + j <= static_cast<std::size_t>(cap); ++j) {
            if (b[j].is_zero()) continue;
            dst[i + j] -= a[i] * b[j];
        }
    }
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, int cap) {
    UniPoly r(static_cast<std::size_t>(cap) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(cap); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(cap); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

UniPoly uni_invert(const UniPoly& u, int cap) {
    UniPoly r(static_cast<std::size_t>(cap) + 1, Rational(0));
    const Rational c0inv = u[0].reciprocal();
    r[0] = c0inv;
    for (int k = 1; k <= cap; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j)
            acc += u[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        if (!acc.is_zero()) r[static_cast<std::size_t>(k)] = -(acc * c0inv);
    }
    return r;
}

// Series regrouped as map from exponents-without-v to univariate data in v.
using Grouped = std::map<Exponents, UniPoly, GrlexLess>;

Grouped group_by_rest(const TruncSeries& s, std::size_t vi) {
    Grouped out;
    for (const auto& [e, c] : s.terms()) {
        Exponents rest;
        rest.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != vi) rest.push_back(e[i]);
        UniPoly& u = out[rest];
        uni_resize(u, static_cast<std::size_t>(e[vi]) + 1);
        u[static_cast<std::size_t>(e[vi])] = c;
    }
    return out;
}

struct DivisionCore {
    Grouped quotient;           // q components by x'-exponent
    Grouped remainder;          // r components (v-degree < d)
    int d = 0;
    int window = 0;
};

// Weierstrass division of grouped data. Treats the stored coefficients of f
// and g as exact; the v-precision carried at x'-level L is (W - L + 1) * d,
// which is what level-(L+1) consumers need, so the result is the true
// division of the stored data through joint degree W.
DivisionCore divide_core(const Grouped& fg, const Grouped& gg, std::size_t nrest, int d,
                         int window) {
    const int W = window;
    const int dd = std::max(d, 1);
    auto req_q = [&](int level) { return (W - level) * dd; };

    const Exponents origin(nrest, 0);
    const UniPoly& g0 = gg.at(origin);
    UniPoly u0(g0.begin() + d, g0.end());
    const UniPoly u0inv = uni_invert(u0, dd * (W + 1));

    DivisionCore core;
    core.d = d;
    core.window = W;

    for (const Exponents& beta : exponents_up_to(nrest, W)) {
        const int level = total_degree(beta);
        const int cap_s = req_q(level) + d;

        UniPoly s(static_cast<std::size_t>(cap_s) + 1, Rational(0));
        if (auto it = fg.find(beta); it != fg.end()) {
            for (std::size_t k = 0; k < it->second.size() && k <= static_cast<std::size_t>(cap_s);
                 ++k)
                s[k] = it->second[k];
        }
        Exponents gamma(nrest);
        for (const auto& [delta, gdelta] : gg) {
            if (total_degree(delta) == 0) continue;
            bool ok = true;
            for (std::size_t i = 0; i < nrest; ++i) {
                gamma[i] = beta[i] - delta[i];
                if (gamma[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto qit = core.quotient.find(gamma);
            if (qit == core.quotient.end()) continue;
            uni_mul_sub(s, qit->second, gdelta, cap_s);
        }

        UniPoly r_part(static_cast<std::size_t>(std::max(d, 0)), Rational(0));
        bool r_nonzero = false;
        for (int j = 0; j < d; ++j) {
            r_part[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j)];
            r_nonzero = r_nonzero || !s[static_cast<std::size_t>(j)].is_zero();
        }
        UniPoly shifted(s.begin() + d, s.end());
        UniPoly q_part = uni_mul(shifted, u0inv, req_q(level));

        bool q_nonzero = false;
        for (const auto& c : q_part) q_nonzero = q_nonzero || !c.is_zero();
        if (q_nonzero) core.quotient.emplace(beta, std::move(q_part));
        if (r_nonzero) core.remainder.emplace(beta, std::move(r_part));
    }
    return core;
}

Exponents insert_at(const Exponents& rest, std::size_t vi, int ve) {
    Exponents e;
    e.reserve(rest.size() + 1);
    for (std::size_t i = 0; i <= rest.size(); ++i) {
        if (i == vi)
            e.push_back(ve);
        if (i < rest.size()) e.push_back(rest[i]);
    }
    return e;
}

TruncSeries quotient_to_series(const Grouped& q, const VarSet& vars, std::size_t vi, int window) {
    TruncSeries out(vars, window);
    for (const auto& [beta, u] : q) {
        const int level = total_degree(beta);
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u[k].is_zero()) continue;
            if (level + static_cast<int>(k) > window) break;
            out.add_term(insert_at(beta, vi, static_cast<int>(k)), u[k]);
        }
    }
    return out;
}

std::vector<TruncSeries> remainder_to_series(const Grouped& r, const VarSet& rest_vars, int d,
                                             int window) {
    std::vector<TruncSeries> out(static_cast<std::size_t>(d), TruncSeries(rest_vars, window));
    for (const auto& [beta, u] : r) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (!u[j].is_zero()) out[j].add_term(beta, u[j]);
        }
    }
    return out;
}

int detect_regular_order(const TruncSeries& g, std::size_t vi) {
    const SeriesOrder d = g.regular_order(vi);
    if (!d.finite)
        throw NotRegular("series is not " + g.vars().name(vi) +
                         "-regular within the truncation window");
    return d.value;
}

}  // namespace

WeierstrassDivision w_divide(const TruncSeries& f, const TruncSeries& g, const std::string& var) {
    if (f.vars() != g.vars()) throw UsageError("division operands have different variable sets");
    const std::size_t vi = f.vars().index_of(var);
    const int d = detect_regular_order(g, vi);
    const int window = std::min(f.bound(), g.bound()) - d;
    if (window < 0) throw UsageError("truncation window is smaller than the regularity order");

    const std::size_t nrest = f.vars().size() - 1;
    const DivisionCore core =
        divide_core(group_by_rest(f, vi), group_by_rest(g, vi), nrest, d, window);

    WeierstrassDivision out{TruncSeries(f.vars(), window), {}, d, window};
    out.quotient = quotient_to_series(core.quotient, f.vars(), vi, window);
    out.remainder_coeffs = remainder_to_series(core.remainder, f.vars().without(vi), d, window);
    return out;
}

WeierstrassPreparation w_prepare(const TruncSeries& g, const std::string& var) {
    const std::size_t vi = g.vars().index_of(var);
    const int d = detect_regular_order(g, vi);
    const int window = g.bound() - d;
    if (window < 0) throw UsageError("truncation window is smaller than the regularity order");

    // v^d = q*g + r, then p = v^d - r and unit = 1/q.
    Exponents vd(g.vars().size(), 0);
    vd[vi] = d;
    TruncSeries f(g.vars(), g.bound());
    f.add_term(vd, Rational(1));

    const std::size_t nrest = g.vars().size() - 1;
    const DivisionCore core =
        divide_core(group_by_rest(f, vi), group_by_rest(g, vi), nrest, d, window);

    const TruncSeries q = quotient_to_series(core.quotient, g.vars(), vi, window);
    WeierstrassPreparation out{q.invert_unit(), {}, d, window};
    auto r_coeffs = remainder_to_series(core.remainder, g.vars().without(vi), d, window);
    out.distinguished_coeffs.reserve(r_coeffs.size());
    for (auto& b : r_coeffs) out.distinguished_coeffs.push_back(-b);
    return out;
}

TruncSeries remainder_series(const WeierstrassDivision& division, const VarSet& vars,
                             const std::string& var) {
    const std::size_t vi = vars.index_of(var);
    TruncSeries out(vars, division.window);
    for (std::size_t j = 0; j < division.remainder_coeffs.size(); ++j) {
        for (const auto& [beta, c] : division.remainder_coeffs[j].terms())
            out.add_term(insert_at(beta, vi, static_cast<int>(j)), c);
    }
    return out;
}

TruncSeries distinguished_series(const WeierstrassPreparation& preparation, const VarSet& vars,
                                 const std::string& var) {
    const std::size_t vi = vars.index_of(var);
    TruncSeries out(vars, std::max(preparation.window, preparation.degree));
    Exponents vd(vars.size(), 0);
    vd[vi] = preparation.degree;
    out.add_term(vd, Rational(1));
    for (std::size_t j = 0; j < preparation.distinguished_coeffs.size(); ++j) {
        for (const auto& [beta, c] : preparation.distinguished_coeffs[j].terms())
            out.add_term(insert_at(beta, vi, static_cast<int>(j)), c);
    }
    return out;
}

}  // namespace algser
