#include "algser/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "algser/errors.hpp"

namespace algser {

MultiPoly MultiPoly::constant(VarSet vars, Rational c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSet vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.vars_.index_of(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarSet vars, Exponents exp, Rational c) {
    MultiPoly p(std::move(vars));
    if (exp.size() != p.vars_.size()) throw UsageError("exponent vector length mismatch");
    for (int v : exp)
        if (v < 0) throw UsageError("negative exponent in monomial");
    p.add_term(exp, c);
    return p;
}

Rational MultiPoly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return algser::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::add_term(const Exponents& exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw UsageError("polynomial operands have different variable sets");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    const std::size_t i = vars_.index_of(var);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    const std::size_t i = vars_.index_of(var);
    const int deg = std::max(degree_in(i), 0);
    std::vector<MultiPoly> out(static_cast<std::size_t>(deg) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const int k = rest[i];
        rest[i] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    check_same_vars(value);
    const auto coeffs = coefficients_in(var);
    // Horner in the replaced variable.
    MultiPoly r(vars_);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
    return r;
}

MultiPoly MultiPoly::shift_var(const std::string& var, const Rational& c) const {
    if (c.is_zero()) return *this;
    MultiPoly v = variable(vars_, var) + constant(vars_, c);
    return substitute(var, v);
}

MultiPoly MultiPoly::substitute_xt() const {
    if (vars_.size() == 0) throw UsageError("substitute_xt needs at least the t variable");
    const std::size_t t = vars_.size() - 1;
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int xdeg = 0;
        for (std::size_t i = 0; i < t; ++i) xdeg += e[i];
        Exponents n = e;
        n[t] += xdeg;
        r.add_term(n, c);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw UsageError("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::reindexed(const VarSet& target) const {
    std::vector<std::optional<std::size_t>> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = target.find(vars_.name(i));
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents n(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!where[i])
                throw UsageError("variable '" + vars_.name(i) +
                                 "' is used but absent from the target variable set");
            n[*where[i]] = e[i];
        }
        r.add_term(n, c);
    }
    return r;
}

namespace {

void append_term_text(std::ostream& os, bool first, const Rational& c, const Exponents& e,
                      const VarSet& vars) {
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
        mono += vars.name(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
        os << a.str();
    } else if (a.is_one()) {
        os << mono;
    } else {
        os << a.str() << "*" << mono;
    }
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term_text(os, first, c, e, vars_);
        first = false;
    }
    return os.str();
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (p.vars() != d.vars()) throw UsageError("exact_divide operands have different variable sets");
    if (d.is_zero()) throw NotDivisible("exact division by the zero polynomial");
    MultiPoly quotient(p.vars());
    MultiPoly rest = p;
    const auto& lead = *d.terms().rbegin();  // greatest term in grlex order
    Exponents e(p.vars().size());
    while (!rest.is_zero()) {
        const auto& top = *rest.terms().rbegin();
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = top.first[i] - lead.first[i];
            if (e[i] < 0) ok = false;
        }
        if (!ok) throw NotDivisible("polynomial division is not exact");
        MultiPoly t = MultiPoly::monomial(p.vars(), e, top.second / lead.second);
        quotient += t;
        rest -= t * d;
    }
    return quotient;
}

namespace {

// Fraction-free Bareiss determinant over the polynomial ring. All divisions
// are exact by construction.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const VarSet& vars) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(vars, Rational(1));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(vars, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(vars);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
        if (prev.is_zero()) return MultiPoly(vars);
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::vector<std::vector<MultiPoly>> sylvester_matrix(const std::vector<MultiPoly>& a,
                                                     const std::vector<MultiPoly>& b,
                                                     const VarSet& vars) {
    const std::size_t m = a.size() - 1;  // deg of first polynomial
    const std::size_t n = b.size() - 1;
    const std::size_t dim = m + n;
    std::vector<std::vector<MultiPoly>> s(dim, std::vector<MultiPoly>(dim, MultiPoly(vars)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = a[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = b[n - j];
    return s;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    if (p.vars() != q.vars()) throw UsageError("resultant operands have different variable sets");
    const std::size_t vi = p.vars().index_of(var);
    if (p.degree_in(vi) <= 0 || q.degree_in(vi) <= 0)
        throw UsageError("resultant needs positive degree in '" + var + "' for both inputs");
    auto a = p.coefficients_in(var);
    auto b = q.coefficients_in(var);
    return bareiss_determinant(sylvester_matrix(a, b, p.vars()), p.vars());
}

namespace {

std::string fresh_var_name(const VarSet& vars) {
    std::string name = "_u";
    while (vars.contains(name)) name += "_";
    return name;
}

}  // namespace

MultiPoly annihilator_sum(const MultiPoly& p1, const MultiPoly& p2, const std::string& tvar) {
    if (p1.vars() != p2.vars()) throw UsageError("annihilator operands have different variable sets");
    if (p1.is_zero() || p2.is_zero()) throw UsageError("annihilator of the zero polynomial");
    const std::size_t ti = p1.vars().index_of(tvar);
    if (p1.degree_in(ti) <= 0 || p2.degree_in(ti) <= 0)
        throw UsageError("annihilator inputs need positive degree in '" + tvar + "'");

    const std::string uname = fresh_var_name(p1.vars());
    const VarSet ext = p1.vars().with_appended(uname);
    const MultiPoly u = MultiPoly::variable(ext, uname);
    const MultiPoly t_minus_u = MultiPoly::variable(ext, tvar) - u;

    const MultiPoly a = p1.reindexed(ext).substitute(tvar, u);
    const MultiPoly b = p2.reindexed(ext).substitute(tvar, t_minus_u);
    const MultiPoly res = resultant(a, b, uname);

    // u is eliminated; drop the helper variable.
    MultiPoly out(p1.vars());
    for (const auto& [e, c] : res.terms()) {
        Exponents n(e.begin(), e.end() - 1);
        out.add_term(n, c);
    }
    return out;
}

MultiPoly annihilator_prod(const MultiPoly& p1, const MultiPoly& p2, const std::string& tvar) {
    if (p1.vars() != p2.vars()) throw UsageError("annihilator operands have different variable sets");
    if (p1.is_zero() || p2.is_zero()) throw UsageError("annihilator of the zero polynomial");
    const std::size_t ti = p1.vars().index_of(tvar);
    const int d2 = p2.degree_in(ti);
    if (p1.degree_in(ti) <= 0 || d2 <= 0)
        throw UsageError("annihilator inputs need positive degree in '" + tvar + "'");

    const std::string uname = fresh_var_name(p1.vars());
    const VarSet ext = p1.vars().with_appended(uname);
    const std::size_t ui = ext.size() - 1;
    const std::size_t te = ext.index_of(tvar);

    const MultiPoly a = p1.reindexed(ext).substitute(tvar, MultiPoly::variable(ext, uname));

    // u^{d2} * P2(x, t/u): the t-exponent b turns into t^b u^{d2-b}. Already
    // denominator-free.
    MultiPoly b(ext);
    for (const auto& [e, c] : p2.terms()) {
        Exponents n(ext.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) n[i] = e[i];
        n[ui] = d2 - e[ti];
        b.add_term(n, c);
    }

    const MultiPoly res = resultant(a, b, uname);
    MultiPoly out(p1.vars());
    for (const auto& [e, c] : res.terms()) {
        Exponents n(e.begin(), e.end() - 1);
        out.add_term(n, c);
    }
    return out;
}

}  // namespace algser
