#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealinterp/hpoly.hpp"
#include "idealinterp/monomial.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

/// Coefficient rings the polynomial code is instantiated with.
template <class R>
concept ScalarRing = std::regular<R> && requires(R a, R b, Rational q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

/// Sparse polynomial in d variables with coefficients in R.
///
/// Terms live in a map keyed by exponent vector under GradedLexLess; zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
template <ScalarRing R>
class MPoly {
public:
    using Terms = std::map<Monomial, R, GradedLexLess>;

    MPoly() = default;
    explicit MPoly(std::size_t dimension) : dim_(dimension) {}

    static MPoly constant(std::size_t d, const R& c) { return term(Monomial::one(d), c); }
    static MPoly variable(std::size_t d, std::size_t i) { return term(Monomial::variable(d, i), R(1)); }
    static MPoly term(const Monomial& m, const R& c) {
        MPoly out(m.dimension());
        out.add_term(m, c);
        return out;
    }

    std::size_t dimension() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int deg = -1;
        for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.total_degree()));
        return deg;
    }

    R coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? R() : it->second;
    }

    /// Accumulates c * x^m into this polynomial.
    void add_term(const Monomial& m, const R& c) {
        if (m.dimension() != dim_) throw std::invalid_argument("monomial arity differs from polynomial dimension");
        if (idealinterp::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second = it->second + c;
        if (idealinterp::is_zero(it->second)) terms_.erase(it);
    }

    MPoly& operator+=(const MPoly& rhs) {
        check_dim(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& rhs) {
        check_dim(rhs);
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
        lhs.check_dim(rhs);
        MPoly out(lhs.dim_);
        for (const auto& [ma, ca] : lhs.terms_) {
            for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
        }
        return out;
    }
    MPoly operator-() const {
        MPoly out(dim_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    MPoly scaled(const R& s) const {
        MPoly out(dim_);
        for (const auto& [m, c] : terms_) out.add_term(m, c * s);
        return out;
    }

    MPoly pow(unsigned exponent) const {
        MPoly out = constant(dim_, R(1));
        for (unsigned k = 0; k < exponent; ++k) out = out * *this;
        return out;
    }

    /// Partial derivative with respect to x_{i+1} (0-based index i).
    MPoly partial(std::size_t i) const {
        if (i >= dim_) throw std::out_of_range("variable index out of range");
        MPoly out(dim_);
        for (const auto& [m, c] : terms_) {
            const unsigned e = m[i];
            if (e == 0) continue;
            std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
            --exps[i];
            out.add_term(Monomial(std::move(exps)), c * Rational(e));
        }
        return out;
    }

    /// d^{|alpha|} / dx^alpha.
    MPoly derivative(const Monomial& alpha) const {
        if (alpha.dimension() != dim_) throw std::invalid_argument("dimension mismatch");
        MPoly out(dim_);
        for (const auto& [m, c] : terms_) {
            if (!alpha.divides(m)) continue;
            // m! / (m - alpha)!
            Rational falling(1);
            for (std::size_t i = 0; i < dim_; ++i) {
                for (unsigned k = 0; k < alpha[i]; ++k) falling *= Rational(m[i] - k);
            }
            out.add_term(m / alpha, c * falling);
        }
        return out;
    }

    /// Substitutes point[i] for x_{i+1}; S must accept R coefficients.
    template <class S>
    S evaluate(std::span<const S> point) const {
        if (point.size() != dim_) throw std::invalid_argument("point arity differs from polynomial dimension");
        std::vector<std::vector<S>> powers(dim_);
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < dim_; ++i) {
                auto& table = powers[i];
                if (table.empty()) table.push_back(S(Rational(1)));
                while (table.size() <= m[i]) table.push_back(table.back() * point[i]);
            }
        }
        S acc{};
        for (const auto& [m, c] : terms_) {
            S term = S(c);
            for (std::size_t i = 0; i < dim_; ++i) {
                if (m[i] > 0) term = term * powers[i][m[i]];
            }
            acc = acc + term;
        }
        return acc;
    }

    template <class S>
    S operator()(const std::vector<S>& point) const {
        return evaluate<S>(std::span<const S>(point));
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void check_dim(const MPoly& other) const {
        if (other.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    std::size_t dim_ = 0;
    Terms terms_;
};

using RPoly = MPoly<Rational>;

/// p(D) f = sum_alpha p^(alpha) D^alpha f.
RPoly apply_diff_op(const RPoly& op, const RPoly& f);

/// Linear form v . x = sum_j v_j x_j.
RPoly linear_form(std::span<const Rational> v);

/// Human-readable form in ascending graded-lex term order with variables
/// printed from the highest index down, e.g. "4 - 2*x3 - 4*x1 - x3^2 + 4*x3*x1".
std::string to_string(const RPoly& p);
std::string to_string(const MPoly<HPoly>& p);

/// Variable names x1..xd used by the printers and the infix parser.
std::vector<std::string> default_variable_names(std::size_t d);

}  // namespace idealinterp
