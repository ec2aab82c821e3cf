#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "idealinterp/rational.hpp"

namespace idealinterp {

/// Exponent vector x1^e1 ... xd^ed of fixed arity d.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
    Monomial(std::initializer_list<unsigned> exponents) : exps_(exponents) {}

    static Monomial one(std::size_t d) { return Monomial(std::vector<unsigned>(d, 0)); }
    static Monomial variable(std::size_t d, std::size_t i);

    std::size_t dimension() const noexcept { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    std::span<const unsigned> exponents() const noexcept { return exps_; }
    unsigned total_degree() const noexcept;
    /// alpha! = alpha_1! ... alpha_d!
    Rational factorial() const;

    /// Componentwise (product) order: this <= other.
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& rhs) const;
    /// Componentwise difference; requires rhs.divides(*this).
    Monomial operator/(const Monomial& rhs) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order with x1 > x2 > ... > xd, ascending: lower total
/// degree first; within a degree the monomial with the smaller exponent at the
/// first differing position (scanning from x1) comes first. Under this order
/// x3 < x2 < x1 and x3^2 < x3*x2 < x3*x1.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Ordering of multi-indices for functional lists: lower total degree first,
/// and within a degree the multi-index with the larger exponent at the first
/// differing position comes first, giving (0,0,0), (1,0,0), (0,1,0), (0,0,1).
/// Any graded order refines the product order, so beta <= alpha implies beta
/// precedes alpha.
struct IndexOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace idealinterp
