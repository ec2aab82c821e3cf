#include "idealinterp/hpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "idealinterp/errors.hpp"

namespace idealinterp {

HPoly::HPoly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

HPoly::HPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

HPoly::HPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

HPoly HPoly::h() { return monomial(Rational(1), 1); }

HPoly HPoly::monomial(const Rational& coefficient, unsigned power) {
    if (coefficient.is_zero()) return {};
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = coefficient;
    return HPoly(std::move(coeffs));
}

Rational HPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

unsigned HPoly::valuation() const {
    unsigned k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return k == coeffs_.size() ? 0 : k;
}

Rational HPoly::operator()(const Rational& h0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= h0;
        acc += *it;
    }
    return acc;
}

HPoly HPoly::div_exact_hpow(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    for (unsigned i = 0; i < k; ++i) {
        if (!coefficient(i).is_zero()) {
            throw NotDivisible(str() + " by h^" + std::to_string(k));
        }
    }
    return HPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

HPoly HPoly::pow(unsigned exponent) const {
    HPoly result(Rational(1));
    HPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string HPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        if (k == 0) {
            out << mag;
            continue;
        }
        if (mag != Rational(1)) out << mag << '*';
        out << 'h';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

HPoly& HPoly::operator+=(const HPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

HPoly operator*(const HPoly& lhs, const HPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return HPoly(std::move(out));
}

HPoly& HPoly::operator*=(const HPoly& rhs) { return *this = *this * rhs; }

HPoly& HPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

HPoly HPoly::operator-() const {
    HPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

void HPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.str(); }

HPoly div_exact(const HPoly& a, const HPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible(a.str() + " by " + b.str());

    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const Rational lead = den.back();
    const std::size_t shift_max = rem.size() - den.size();
    std::vector<Rational> quot(shift_max + 1);
    for (std::size_t shift = shift_max + 1; shift-- > 0;) {
        const Rational q = rem[shift + den.size() - 1] / lead;
        quot[shift] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= q * den[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return !r.is_zero(); })) {
        throw NotDivisible(a.str() + " by " + b.str());
    }
    return HPoly(std::move(quot));
}

}  // namespace idealinterp
