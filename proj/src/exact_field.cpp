#include "wkit/exact_field.hpp"

#include <cmath>

#include "wkit/error.hpp"

namespace wkit {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw InputError("cannot convert a non-finite double to a rational");
    return Rational(mpq_class(x));
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
        const char ch = s[i];
        ok = (ch >= '0' && ch <= '9') || (i == 0 && ch == '-' && s.size() > 1);
    }
    if (!ok) throw InputError("not a rational number: '" + std::string(whole) + "'");
    return mpz_class(s, 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

int QSqrt3::sign() const {
    const int sa = rat_.sign();
    const int sb = root_.sign();
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    // opposite signs: |a| vs |b|√3
    const Rational a2 = rat_ * rat_;
    const Rational b2x3 = root_ * root_ * Rational(3);
    if (a2 == b2x3) return 0;  // unreachable for rationals, √3 is irrational
    return a2 > b2x3 ? sa : sb;
}

double QSqrt3::to_double() const {
    static const double kRoot3 = std::sqrt(3.0);
    const int sa = rat_.sign();
    const int sb = root_.sign();
    if (sa == 0 || sb == 0 || sa == sb) return rat_.to_double() + root_.to_double() * kRoot3;
    // a + b√3 = (a² − 3b²) / (a − b√3); the denominator has no cancellation
    const Rational norm = rat_ * rat_ - Rational(3) * root_ * root_;
    return norm.to_double() / (rat_.to_double() - root_.to_double() * kRoot3);
}

std::string QSqrt3::to_string() const {
    return "(" + rat_.to_string() + " + " + root_.to_string() + "√3)";
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
    rat_ += o.rat_;
    root_ += o.root_;
    return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
    rat_ -= o.rat_;
    root_ -= o.root_;
    return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
    // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
    Rational rat = rat_ * o.rat_ + Rational(3) * root_ * o.root_;
    Rational root = rat_ * o.root_ + root_ * o.rat_;
    rat_ = std::move(rat);
    root_ = std::move(root);
    return *this;
}

} // namespace wkit
