#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idealinterp {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class: every constructor and operator
/// leaves the value canonical, and division by zero raises DivisionByZero
/// instead of aborting.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : value_(static_cast<unsigned long>(value)) {}

    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);
    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Parses "p/q" or "p" (optional leading sign). Throws ValidationError.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Exact quotient in a field; the divisor must be nonzero.
inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }

}  // namespace idealinterp
