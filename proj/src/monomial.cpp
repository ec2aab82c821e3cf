#include "idealinterp/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "idealinterp/combinatorics.hpp"

namespace idealinterp {

Monomial Monomial::variable(std::size_t d, std::size_t i) {
    if (i >= d) throw std::out_of_range("variable index out of range");
    std::vector<unsigned> exps(d, 0);
    exps[i] = 1;
    return Monomial(std::move(exps));
}

unsigned Monomial::total_degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

Rational Monomial::factorial() const {
    mpz_class out = 1;
    for (unsigned e : exps_) out *= idealinterp::factorial(e);
    return Rational(out);
}

bool Monomial::divides(const Monomial& other) const {
    if (other.dimension() != dimension()) throw std::invalid_argument("monomial dimension mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (rhs.dimension() != dimension()) throw std::invalid_argument("monomial dimension mismatch");
    std::vector<unsigned> out(exps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.exps_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    if (!rhs.divides(*this)) throw std::invalid_argument("monomial is not a divisor");
    std::vector<unsigned> out(exps_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.exps_[i];
    return Monomial(std::move(out));
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool IndexOrderLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

}  // namespace idealinterp
