#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wkit {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Exact value of a finite double.
    static Rational from_double(double x);

    /// Parses "p", "-p" or "p/q" (decimal integers).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return value_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// Element rat + root·√3 of the quadratic field Q[√3].
///
/// Since 1 and √3 are linearly independent over Q, structural equality of
/// the two coefficients is equality of the represented reals.
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(Rational rat) : rat_(std::move(rat)) {}
    QSqrt3(Rational rat, Rational root) : rat_(std::move(rat)), root_(std::move(root)) {}

    static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

    const Rational& rat_part() const { return rat_; }
    const Rational& root_part() const { return root_; }

    bool is_zero() const { return rat_.is_zero() && root_.is_zero(); }

    /// Exact sign of the real number, decided without floating point.
    int sign() const;

    /// Floating value of the real number. Opposite-sign coefficients are
    /// evaluated through the conjugate so no cancellation occurs.
    double to_double() const;

    std::string to_string() const;

    QSqrt3 operator-() const { return {-rat_, -root_}; }
    QSqrt3& operator+=(const QSqrt3& o);
    QSqrt3& operator-=(const QSqrt3& o);
    QSqrt3& operator*=(const QSqrt3& o);

    friend QSqrt3 operator+(QSqrt3 a, const QSqrt3& b) { return a += b; }
    friend QSqrt3 operator-(QSqrt3 a, const QSqrt3& b) { return a -= b; }
    friend QSqrt3 operator*(QSqrt3 a, const QSqrt3& b) { return a *= b; }

    friend bool operator==(const QSqrt3&, const QSqrt3&) = default;

private:
    Rational rat_;
    Rational root_;
};

} // namespace wkit
