#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "idealinterp/rational.hpp"

namespace idealinterp {

/// Univariate polynomial in the perturbation parameter h over the rationals.
///
/// Stored densely by power; the highest stored coefficient is always nonzero,
/// so the zero polynomial has no coefficients and degree -1.
class HPoly {
public:
    HPoly() = default;
    HPoly(const Rational& constant);
    template <std::integral I>
    HPoly(I constant) : HPoly(Rational(constant)) {}
    explicit HPoly(std::vector<Rational> coefficients);
    HPoly(std::initializer_list<Rational> coefficients);

    /// The polynomial h.
    static HPoly h();
    /// coefficient * h^power.
    static HPoly monomial(const Rational& coefficient, unsigned power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(std::size_t power) const;
    Rational constant_term() const { return coefficient(0); }
    /// Largest k with h^k | p; 0 for the zero polynomial.
    unsigned valuation() const;

    /// Horner evaluation at h0.
    Rational operator()(const Rational& h0) const;

    /// p / h^k; throws NotDivisible when one of the k lowest coefficients is nonzero.
    HPoly div_exact_hpow(unsigned k) const;

    HPoly pow(unsigned exponent) const;

    /// Ascending powers, e.g. "2 + h", "-1 + h^2"; "0" for zero.
    std::string str() const;

    HPoly& operator+=(const HPoly& rhs);
    HPoly& operator-=(const HPoly& rhs);
    HPoly& operator*=(const HPoly& rhs);
    HPoly& operator*=(const Rational& rhs);

    friend HPoly operator+(HPoly lhs, const HPoly& rhs) { return lhs += rhs; }
    friend HPoly operator-(HPoly lhs, const HPoly& rhs) { return lhs -= rhs; }
    friend HPoly operator*(const HPoly& lhs, const HPoly& rhs);
    friend HPoly operator*(HPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend HPoly operator*(const Rational& lhs, HPoly rhs) { return rhs *= lhs; }
    HPoly operator-() const;

    friend bool operator==(const HPoly& a, const HPoly& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HPoly& p);

inline bool is_zero(const HPoly& p) { return p.is_zero(); }

/// Exact quotient a / b in Q[h]; throws NotDivisible if b does not divide a
/// and DivisionByZero if b is zero.
HPoly div_exact(const HPoly& a, const HPoly& b);

}  // namespace idealinterp
