#include "algser/series.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "algser/errors.hpp"

namespace algser {

TruncSeries::TruncSeries(VarSet vars, int bound) : vars_(std::move(vars)), bound_(bound) {
    if (bound < 0) throw UsageError("series truncation bound must be nonnegative");
}

TruncSeries TruncSeries::from_poly(const MultiPoly& p, int bound) {
    TruncSeries s(p.vars(), bound);
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) > bound) break;  // grlex order: the rest is higher degree
        s.terms_.emplace_hint(s.terms_.end(), e, c);
    }
    return s;
}

TruncSeries TruncSeries::constant(VarSet vars, Rational c, int bound) {
    TruncSeries s(std::move(vars), bound);
    s.add_term(Exponents(s.vars_.size(), 0), c);
    return s;
}

TruncSeries TruncSeries::geom(VarSet vars, const Exponents& exp, int bound) {
    TruncSeries s(std::move(vars), bound);
    if (exp.size() != s.vars_.size()) throw UsageError("exponent vector length mismatch");
    const int d = total_degree(exp);
    if (d == 0) throw UsageError("geom needs a monomial of positive degree");
    Exponents e(s.vars_.size(), 0);
    for (int k = 0; k * d <= bound; ++k) {
        s.terms_.emplace(e, Rational(1));
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += exp[i];
    }
    return s;
}

Rational TruncSeries::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(const Exponents& exp, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<std::size_t>(exp.size()) != vars_.size())
        throw UsageError("exponent vector length mismatch");
    if (total_degree(exp) > bound_) return;  // outside the window
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::truncated(int new_bound) const {
    if (new_bound > bound_)
        throw UsageError("cannot raise a series bound: higher coefficients are unknown");
    TruncSeries s(vars_, new_bound);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > new_bound) break;
        s.terms_.emplace_hint(s.terms_.end(), e, c);
    }
    return s;
}

void TruncSeries::check_same_vars(const TruncSeries& o) const {
    if (vars_ != o.vars_) throw UsageError("series operands have different variable sets");
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(vars_, bound_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check_same_vars(b);
    TruncSeries r = a.truncated(std::min(a.bound_, b.bound_));
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.check_same_vars(b);
    TruncSeries r = a.truncated(std::min(a.bound_, b.bound_));
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_same_vars(b);
    const int bound = std::min(a.bound_, b.bound_);
    TruncSeries r(a.vars_, bound);
    const TruncSeries& small = (a.terms_.size() <= b.terms_.size()) ? a : b;
    const TruncSeries& big = (a.terms_.size() <= b.terms_.size()) ? b : a;
    Exponents e(a.vars_.size());
    for (const auto& [es, cs] : small.terms_) {
        const int limit = bound - total_degree(es);
        if (limit < 0) continue;
        for (const auto& [eb, cb] : big.terms_) {
            if (total_degree(eb) > limit) break;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = es[i] + eb[i];
            r.add_term(e, cs * cb);
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries r(vars_, bound_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
}

TruncSeries TruncSeries::pow(unsigned k) const {
    TruncSeries r = constant(vars_, Rational(1), bound_);
    TruncSeries base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

TruncSeries TruncSeries::mul_monomial(const Exponents& exp, const Rational& c) const {
    if (exp.size() != vars_.size()) throw UsageError("exponent vector length mismatch");
    TruncSeries r(vars_, bound_ + total_degree(exp));
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) {
        Exponents n = e;
        for (std::size_t i = 0; i < n.size(); ++i) n[i] += exp[i];
        r.terms_.emplace_hint(r.terms_.end(), n, v * c);
    }
    return r;
}

TruncSeries TruncSeries::invert_unit() const {
    const Rational c0 = constant_coeff();
    if (c0.is_zero()) throw NotAUnit("cannot invert a series with zero constant term");
    const Rational c0inv = c0.reciprocal();

    // Nonconstant terms of the divisor drive the convolution recurrence
    // g(e) = -c0inv * sum f(m) g(e-m).
    struct Term {
        Exponents exp;
        int degree;
        Rational coeff;
    };
    std::vector<Term> support;
    support.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == 0) continue;
        support.push_back({e, total_degree(e), c});
    }

    TruncSeries r(vars_, bound_);
    if (support.empty()) {
        r.add_term(Exponents(vars_.size(), 0), c0inv);
        return r;
    }

    std::unordered_map<Exponents, Rational, ExponentsHash> known;
    known.reserve(1024);
    std::vector<std::pair<Exponents, Rational>> ordered;

    Exponents prev(vars_.size());
    for (const Exponents& e : exponents_up_to(vars_.size(), bound_)) {
        const int deg = total_degree(e);
        Rational acc(0);
        if (deg == 0) {
            acc = c0inv;
        } else {
            for (const Term& t : support) {
                if (t.degree > deg) continue;
                bool ok = true;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    prev[i] = e[i] - t.exp[i];
                    if (prev[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                auto it = known.find(prev);
                if (it == known.end()) continue;
                acc += t.coeff * it->second;
            }
            if (acc.is_zero()) continue;
            acc = -(acc * c0inv);
        }
        known.emplace(e, acc);
        ordered.emplace_back(e, std::move(acc));
    }

    // `ordered` was produced in grlex order, so the map can be built linearly.
    for (auto& [e, c] : ordered) r.terms_.emplace_hint(r.terms_.end(), std::move(e), std::move(c));
    return r;
}

TruncSeries TruncSeries::substitute_xt() const {
    if (vars_.size() == 0) throw UsageError("substitute_xt needs at least the t variable");
    const std::size_t t = vars_.size() - 1;
    TruncSeries r(vars_, bound_ / 2);
    for (const auto& [e, c] : terms_) {
        int xdeg = 0;
        for (std::size_t i = 0; i < t; ++i) xdeg += e[i];
        Exponents n = e;
        n[t] += xdeg;
        r.add_term(n, c);
    }
    return r;
}

SeriesOrder TruncSeries::ord() const {
    if (terms_.empty()) return SeriesOrder::at_least(bound_ + 1);
    return SeriesOrder::exactly(total_degree(terms_.begin()->first));
}

SeriesOrder TruncSeries::regular_order(std::size_t var) const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        bool pure = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var && e[i] != 0) {
                pure = false;
                break;
            }
        }
        if (!pure) continue;
        if (best < 0 || e[var] < best) best = e[var];
    }
    if (best < 0) return SeriesOrder::at_least(bound_ + 1);
    return SeriesOrder::exactly(best);
}

TruncSeries TruncSeries::exact_divide_by_var(std::size_t var, int k) const {
    if (k <= 0) throw UsageError("exact_divide_by_var needs a positive power");
    for (const auto& [e, c] : terms_) {
        if (e[var] < k)
            throw NotDivisible("series term with " + vars_.name(var) + "-exponent below " +
                               std::to_string(k));
    }
    TruncSeries r(vars_, std::max(bound_ - k, 0));
    for (const auto& [e, c] : terms_) {
        Exponents n = e;
        n[var] -= k;
        r.add_term(n, c);
    }
    return r;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational a = (c.sign() < 0) ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_.name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

TruncSeries hadamard(const TruncSeries& a, const TruncSeries& b) {
    if (a.vars() != b.vars()) throw UsageError("hadamard operands have different variable sets");
    TruncSeries r(a.vars(), std::min(a.bound(), b.bound()));
    const auto& small = (a.terms().size() <= b.terms().size()) ? a : b;
    const auto& big = (a.terms().size() <= b.terms().size()) ? b : a;
    for (const auto& [e, c] : small.terms()) {
        auto it = big.terms().find(e);
        if (it != big.terms().end()) r.add_term(e, c * it->second);
    }
    return r;
}

bool agree_through(const TruncSeries& a, const TruncSeries& b, int window) {
    if (a.vars() != b.vars()) throw UsageError("cannot compare series over different variable sets");
    if (window > a.bound() || window > b.bound())
        throw UsageError("comparison window exceeds a series bound");
    for (const auto& [e, c] : a.terms()) {
        if (total_degree(e) > window) break;
        if (b.coeff(e) != c) return false;
    }
    for (const auto& [e, c] : b.terms()) {
        if (total_degree(e) > window) break;
        if (a.coeff(e) != c) return false;
    }
    return true;
}

TruncSeries eval_poly_at_series(const MultiPoly& p,
                                const std::vector<std::pair<std::string, TruncSeries>>& subs) {
    if (subs.empty()) throw UsageError("eval_poly_at_series needs at least one substitution");
    const VarSet& target = subs.front().second.vars();
    int bound = subs.front().second.bound();
    for (const auto& [name, s] : subs) {
        if (s.vars() != target)
            throw UsageError("substituted series must share one variable set");
        bound = std::min(bound, s.bound());
    }

    // Split P's variables into substituted ones and pass-through ones.
    std::vector<std::size_t> sub_index(p.vars().size(), subs.size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        for (std::size_t j = 0; j < subs.size(); ++j) {
            if (p.vars().name(i) == subs[j].first) sub_index[i] = j;
        }
    }
    std::vector<std::size_t> pass_target(p.vars().size(), 0);
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (sub_index[i] == subs.size()) pass_target[i] = target.index_of(p.vars().name(i));
    }

    // Cache powers of each substituted series.
    std::vector<std::vector<TruncSeries>> powers(subs.size());
    for (std::size_t j = 0; j < subs.size(); ++j)
        powers[j].push_back(TruncSeries::constant(target, Rational(1), bound));

    auto power_of = [&](std::size_t j, int k) -> const TruncSeries& {
        auto& cache = powers[j];
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * subs[j].second.truncated(bound));
        return cache[static_cast<std::size_t>(k)];
    };

    TruncSeries acc(target, bound);
    for (const auto& [e, c] : p.terms()) {
        Exponents mono(target.size(), 0);
        TruncSeries term = TruncSeries::constant(target, Rational(1), bound);
        bool have_series = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (sub_index[i] < subs.size()) {
                term = term * power_of(sub_index[i], e[i]);
                have_series = true;
            } else {
                mono[pass_target[i]] += e[i];
            }
        }
        if (!have_series) {
            acc.add_term(mono, c);
        } else {
            TruncSeries shifted = term.mul_monomial(mono, c).truncated(bound);
            acc = acc + shifted;
        }
    }
    return acc;
}

TruncSeries eval_poly_at_series(const MultiPoly& p, const std::string& var,
                                const TruncSeries& h) {
    return eval_poly_at_series(p, {{var, h}});
}

}  // namespace algser
