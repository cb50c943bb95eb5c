#include "algser/diagonal.hpp"

#include "algser/errors.hpp"

namespace algser {

TruncSeries small_diagonal(const TruncSeries& g, const std::string& out_var) {
    const std::size_t n = g.vars().size();
    if (n < 1) throw UsageError("small diagonal needs at least one variable");
    TruncSeries r(VarSet({out_var}), g.bound() / static_cast<int>(n));
    Exponents probe(n, 0);
    for (int j = 0; static_cast<int>(n) * j <= g.bound(); ++j) {
        for (auto& e : probe) e = j;
        r.add_term({j}, g.coeff(probe));
    }
    return r;
}

TruncSeries big_diagonal(const TruncSeries& f) {
    const std::size_t nv = f.vars().size();
    if (nv < 2) throw UsageError("big diagonal needs x variables plus the trailing t");
    const std::size_t t = nv - 1;
    TruncSeries r(f.vars().without(t), f.bound() / 2);
    for (const auto& [e, c] : f.terms()) {
        int xdeg = 0;
        for (std::size_t i = 0; i < t; ++i) xdeg += e[i];
        if (xdeg != e[t]) continue;
        Exponents n(e.begin(), e.end() - 1);
        r.add_term(n, c);
    }
    return r;
}

}  // namespace algser
