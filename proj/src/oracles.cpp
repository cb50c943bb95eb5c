#include "algser/oracles.hpp"

#include "algser/errors.hpp"

namespace algser {
namespace oracles {

Rational binomial(const Rational& r, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= (r - Rational(static_cast<long>(i)));
        acc /= Rational(static_cast<long>(i) + 1);
    }
    return acc;
}

mpz_class binomial_uint(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<Rational> central_binomial(int order) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        out.emplace_back(mpq_class(binomial_uint(2ul * static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(n))));
    return out;
}

std::vector<Rational> apery_numbers(int order) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        mpz_class acc = 0;
        for (int k = 0; k <= n; ++k) {
            const mpz_class a =
                binomial_uint(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            const mpz_class b = binomial_uint(static_cast<unsigned long>(n + k),
                                              static_cast<unsigned long>(k));
            acc += a * a * b * b;
        }
        out.emplace_back(mpq_class(acc));
    }
    return out;
}

std::vector<Rational> catalan_shifted(int order) {
    // catalan[n+1] = sum_i catalan[i] * catalan[n-i]
    std::vector<Rational> catalan{Rational(1)};
    for (int n = 0; n + 1 < order; ++n) {
        Rational acc(0);
        for (int i = 0; i <= n; ++i)
            acc += catalan[static_cast<std::size_t>(i)] * catalan[static_cast<std::size_t>(n - i)];
        catalan.push_back(acc);
    }
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 1; n <= order; ++n) out[static_cast<std::size_t>(n)] =
        catalan[static_cast<std::size_t>(n - 1)];
    return out;
}

std::vector<Rational> binomial_series(const Rational& r, int sign, int order) {
    if (sign != 1 && sign != -1) throw UsageError("binomial series sign must be +1 or -1");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    Rational s(1);
    for (int k = 0; k <= order; ++k) {
        out.push_back(binomial(r, static_cast<unsigned>(k)) * s);
        s *= Rational(sign);
    }
    return out;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace oracles
}  // namespace algser
