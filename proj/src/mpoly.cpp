#include "idealinterp/mpoly.hpp"

#include <sstream>

namespace idealinterp {

RPoly apply_diff_op(const RPoly& op, const RPoly& f) {
    if (op.dimension() != f.dimension()) throw std::invalid_argument("polynomial dimension mismatch");
    RPoly out(f.dimension());
    for (const auto& [alpha, c] : op.terms()) out += f.derivative(alpha).scaled(c);
    return out;
}

RPoly linear_form(std::span<const Rational> v) {
    RPoly out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out.add_term(Monomial::variable(v.size(), j), v[j]);
    return out;
}

std::vector<std::string> default_variable_names(std::size_t d) {
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = m.dimension(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

std::string to_string(const RPoly& p) {
    if (p.is_zero()) return "0";
    const auto names = default_variable_names(p.dimension());
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        const std::string mono = monomial_text(m, names);
        if (mono.empty()) {
            out << mag;
        } else if (mag == Rational(1)) {
            out << mono;
        } else {
            out << mag << '*' << mono;
        }
    }
    return out.str();
}

std::string to_string(const MPoly<HPoly>& p) {
    if (p.is_zero()) return "0";
    const auto names = default_variable_names(p.dimension());
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ')';
        const std::string mono = monomial_text(m, names);
        if (!mono.empty()) out << '*' << mono;
    }
    return out.str();
}

}  // namespace idealinterp
