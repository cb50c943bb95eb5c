#include "algser/rational.hpp"

#include <ostream>

#include "algser/errors.hpp"

namespace algser {

Rational::Rational(long num, unsigned long den) : v_(num, den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw UsageError("malformed rational literal: '" + text + "'");
    if (v.get_den() == 0) throw MathError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    return from_string(num + "/" + den);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw MathError("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return is_integer() ? num_string() : num_string() + "/" + den_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace algser
