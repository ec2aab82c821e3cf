#include "idealinterp/dinvariant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

#include "idealinterp/combinatorics.hpp"

namespace idealinterp {

namespace {

std::string tuple_text(const Monomial& m) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < m.dimension(); ++i) out << (i ? "," : "") << m[i];
    out << ')';
    return out.str();
}

Rational inverse_factorial(unsigned n) { return Rational(mpq_class(1, factorial(n))); }

}  // namespace

LowerSetError::LowerSetError(Monomial element, Monomial missing, const std::string& where)
    : ValidationError((where.empty() ? std::string() : where + ": ") + "not a lower set: " + tuple_text(element) + " is present but its predecessor " +
                      tuple_text(missing) + " is missing"),
      element_(std::move(element)),
      missing_(std::move(missing)) {}

LowerSet LowerSet::validate(std::vector<Monomial> elements) {
    if (elements.empty()) throw ValidationError("lower set is empty");
    const std::size_t d = elements.front().dimension();
    if (d == 0) throw ValidationError("lower set elements must have at least one coordinate");
    for (const auto& e : elements) {
        if (e.dimension() != d) throw ValidationError("lower set elements have mixed arity");
    }
    std::sort(elements.begin(), elements.end(), IndexOrderLess{});
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    const std::set<Monomial, IndexOrderLess> members(elements.begin(), elements.end());
    // Closure under immediate predecessors implies closure under <=.
    for (const auto& alpha : elements) {
        for (std::size_t i = 0; i < d; ++i) {
            if (alpha[i] == 0) continue;
            const Monomial beta = alpha / Monomial::variable(d, i);
            if (!members.contains(beta)) throw LowerSetError(alpha, beta);
        }
    }
    return LowerSet(std::move(elements));
}

std::optional<std::size_t> LowerSet::index_of(const Monomial& alpha) const {
    const auto it = std::lower_bound(elems_.begin(), elems_.end(), alpha, IndexOrderLess{});
    if (it == elems_.end() || *it != alpha) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

DirectionFrame DirectionFrame::validate(std::vector<std::vector<Rational>> rows) {
    const std::size_t d = rows.size();
    if (d == 0) throw ValidationError("direction frame is empty");
    Matrix<Rational> m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) {
            throw ValidationError("direction frame must hold " + std::to_string(d) + " vectors of length " +
                                  std::to_string(d));
        }
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    }
    if (const std::size_t r = rank(m); r < d) {
        throw ValidationError("direction frame is singular (rank " + std::to_string(r) + " < " + std::to_string(d) +
                              ")");
    }
    return DirectionFrame(std::move(rows));
}

DirectionFrame DirectionFrame::identity(std::size_t d) {
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) rows[i][i] = Rational(1);
    return DirectionFrame(std::move(rows));
}

ExponentLadder ExponentLadder::validate(std::vector<unsigned> a) {
    if (a.size() < 2) throw ValidationError("exponent ladder needs a_0 and at least a_1 (n >= 1)");
    if (a[0] != 1) throw ValidationError("exponent ladder must start with a_0 = 1");
    for (std::size_t j = 2; j < a.size(); ++j) {
        if (a[j] >= a[j - 1]) throw ValidationError("exponent ladder must satisfy a_1 > a_2 > ... > a_n");
    }
    if (a.back() < 2) throw ValidationError("exponent ladder must satisfy a_n >= 2");
    return ExponentLadder(std::move(a));
}

CoefficientTable CoefficientTable::validate(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) throw ValidationError("coefficient table is empty");
    const std::size_t cols = rows.front().size();
    if (cols < 2) throw ValidationError("coefficient table rows need at least two entries");
    for (const auto& row : rows) {
        if (row.size() != cols) throw ValidationError("coefficient table rows differ in length");
    }
    if (std::all_of(rows.begin(), rows.end(), [](const auto& row) { return row[0].is_zero(); })) {
        throw ValidationError("coefficient table column 0 (c_{1,0}, ..., c_{d,0}) is all zero");
    }
    return CoefficientTable(std::move(rows));
}

std::vector<Rational> CoefficientTable::column(std::size_t j) const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& row : c_) out.push_back(row.at(j));
    return out;
}

ClassTwoSpec::ClassTwoSpec(ExponentLadder ladder, CoefficientTable table) : a(std::move(ladder)), c(std::move(table)) {
    if (c.columns() != a.n() + 1) {
        throw ValidationError("coefficient table needs n+1 = " + std::to_string(a.n() + 1) + " columns, got " +
                              std::to_string(c.columns()));
    }
}

std::size_t subspace_dimension(const SubspaceSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                return s.delta.size();
            } else {
                return s.a.top() + 1;
            }
        },
        spec);
}

std::size_t spec_arity(const SubspaceSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                return s.delta.dimension();
            } else {
                return s.c.dimension();
            }
        },
        spec);
}

RPoly directional_monomial(const Monomial& alpha, const DirectionFrame& rho) {
    const std::size_t d = rho.dimension();
    if (alpha.dimension() != d) throw std::invalid_argument("multi-index arity differs from frame dimension");
    RPoly out = RPoly::constant(d, Rational(1));
    for (std::size_t i = 0; i < d; ++i) {
        if (alpha[i] > 0) out = out * linear_form(rho.direction(i)).pow(alpha[i]);
    }
    return out;
}

SubspaceBasis class_one_basis(const LowerSet& delta, const DirectionFrame& rho) {
    if (delta.dimension() != rho.dimension()) throw ValidationError("lower set and frame dimensions differ");
    SubspaceBasis basis{{}, ClassOneSpec{delta, rho}};
    basis.polys.reserve(delta.size());
    for (const auto& alpha : delta.elements()) basis.polys.push_back(directional_monomial(alpha, rho));
    return basis;
}

SubspaceBasis class_two_basis(const ExponentLadder& a, const CoefficientTable& c) {
    const ClassTwoSpec spec(a, c);
    const std::size_t d = c.dimension();
    const std::size_t n = a.n();
    const unsigned top = a.top();

    // powers[j][t] = (c_{.,j} . x)^t / t!
    std::vector<std::vector<RPoly>> powers(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const RPoly form = linear_form(c.column(j));
        const unsigned max_t = top / a[j];
        RPoly p = RPoly::constant(d, Rational(1));
        for (unsigned t = 0; t <= max_t; ++t) {
            powers[j].push_back(p.scaled(inverse_factorial(t)));
            p = p * form;
        }
    }

    SubspaceBasis basis{{}, spec};
    for (unsigned m = 0; m <= top; ++m) {
        RPoly q(d);
        // Distribute weight m over rungs n, n-1, ..., 1; rung 0 (a_0 = 1) absorbs the rest.
        std::function<void(std::size_t, unsigned, const RPoly&)> visit = [&](std::size_t j, unsigned left,
                                                                             const RPoly& acc) {
            if (j == 0) {
                q += acc * powers[0][left];
                return;
            }
            for (unsigned t = 0; t * a[j] <= left; ++t) visit(j - 1, left - t * a[j], acc * powers[j][t]);
        };
        visit(n, m, RPoly::constant(d, Rational(1)));
        basis.polys.push_back(std::move(q));
    }
    return basis;
}

SubspaceBasis class_two_basis(const ClassTwoSpec& spec) { return class_two_basis(spec.a, spec.c); }

SubspaceBasis class_two_basis_recursive(const ExponentLadder& a, const CoefficientTable& c) {
    const ClassTwoSpec spec(a, c);
    const std::size_t d = c.dimension();
    const std::size_t n = a.n();
    const unsigned top = a.top();

    std::map<std::pair<std::size_t, unsigned>, RPoly> memo;
    std::function<RPoly(std::size_t, unsigned)> q = [&](std::size_t k, unsigned m) -> RPoly {
        if (const auto it = memo.find({k, m}); it != memo.end()) return it->second;
        RPoly out(d);
        const RPoly form = linear_form(c.column(k));
        if (k == 0) {
            out = form.pow(m).scaled(inverse_factorial(m));
        } else {
            for (unsigned l = 0; l * a[k] <= m; ++l) {
                out += form.pow(l).scaled(inverse_factorial(l)) * q(k - 1, m - l * a[k]);
            }
        }
        memo.emplace(std::pair{k, m}, out);
        return out;
    };

    SubspaceBasis basis{{}, spec};
    for (unsigned m = 0; m <= top; ++m) basis.polys.push_back(q(n, m));
    return basis;
}

SubspaceBasis class_two_basis_enumerated(const ExponentLadder& a, const CoefficientTable& c) {
    const ClassTwoSpec spec(a, c);
    const std::size_t d = c.dimension();
    const std::size_t cols = a.n() + 1;
    const unsigned top = a.top();
    const std::size_t slots = d * cols;  // gamma_{i,j} flattened as i * cols + j

    SubspaceBasis basis{{}, spec};
    for (unsigned m = 0; m <= top; ++m) {
        RPoly q(d);
        std::vector<unsigned> gamma(slots, 0);
        std::function<void(std::size_t, unsigned)> visit = [&](std::size_t slot, unsigned left) {
            if (slot == slots) {
                if (left != 0) return;
                Rational coeff(1);
                std::vector<unsigned> exps(d, 0);
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j < cols; ++j) {
                        const unsigned g = gamma[i * cols + j];
                        coeff *= c(i, j).pow(g) * inverse_factorial(g);
                        exps[i] += g;
                    }
                }
                q.add_term(Monomial(std::move(exps)), coeff);
                return;
            }
            const unsigned weight = a[slot % cols];
            for (unsigned g = 0; g * weight <= left; ++g) {
                gamma[slot] = g;
                visit(slot + 1, left - g * weight);
            }
            gamma[slot] = 0;
        };
        visit(0, m);
        basis.polys.push_back(std::move(q));
    }
    return basis;
}

SubspaceBasis build_basis(const SubspaceSpec& spec) {
    return std::visit(
        [](const auto& s) -> SubspaceBasis {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                return class_one_basis(s.delta, s.rho);
            } else {
                return class_two_basis(s.a, s.c);
            }
        },
        spec);
}

Matrix<Rational> coefficient_matrix(const std::vector<RPoly>& polys, std::vector<Monomial>* row_monomials) {
    std::set<Monomial, GradedLexLess> support;
    for (const auto& p : polys) {
        for (const auto& [m, c] : p.terms()) support.insert(m);
    }
    const std::vector<Monomial> rows(support.begin(), support.end());
    Matrix<Rational> out(rows.size(), polys.size());
    for (std::size_t col = 0; col < polys.size(); ++col) {
        for (std::size_t r = 0; r < rows.size(); ++r) out(r, col) = polys[col].coefficient(rows[r]);
    }
    if (row_monomials != nullptr) *row_monomials = rows;
    return out;
}

std::size_t span_dimension(const std::vector<RPoly>& polys) { return rank(coefficient_matrix(polys)); }

DInvarianceCertificate check_d_invariance(const std::vector<RPoly>& polys) {
    DInvarianceCertificate cert;
    if (polys.empty()) {
        cert.invariant = true;
        return cert;
    }
    const std::size_t d = polys.front().dimension();
    const std::size_t k = polys.size();
    cert.coefficients.assign(k, std::vector<std::vector<Rational>>(d));

    for (std::size_t e = 0; e < k; ++e) {
        for (std::size_t i = 0; i < d; ++i) {
            RPoly derivative = polys[e].partial(i);
            // Column k of the augmented set is the target.
            std::vector<RPoly> all = polys;
            all.push_back(derivative);
            const Matrix<Rational> full = coefficient_matrix(all);
            Matrix<Rational> lhs(full.rows(), k);
            std::vector<Rational> rhs(full.rows());
            for (std::size_t r = 0; r < full.rows(); ++r) {
                for (std::size_t col = 0; col < k; ++col) lhs(r, col) = full(r, col);
                rhs[r] = full(r, k);
            }
            auto solution = solve_consistent(std::move(lhs), std::move(rhs));
            if (!solution) {
                cert.invariant = false;
                cert.coefficients.clear();
                cert.witness = DInvarianceWitness{e, i, std::move(derivative)};
                return cert;
            }
            cert.coefficients[e][i] = std::move(*solution);
        }
    }
    cert.invariant = true;
    return cert;
}

}  // namespace idealinterp
