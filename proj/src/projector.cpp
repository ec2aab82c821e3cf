#include "idealinterp/projector.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "idealinterp/errors.hpp"

namespace idealinterp {

RangeBasis::RangeBasis(std::vector<RPoly> polys) : polys_(std::move(polys)) {
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (polys_[i].dimension() != polys_.front().dimension()) {
            throw ValidationError("range basis elements have mixed dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (polys_[i] == polys_[j]) {
                throw ValidationError("range basis elements " + std::to_string(j + 1) + " and " +
                                      std::to_string(i + 1) + " are equal");
            }
        }
    }
}

void check_basis_shape(const HermiteScheme& scheme, const RangeBasis& basis) {
    if (basis.size() != scheme.size()) {
        throw ValidationError("range basis has " + std::to_string(basis.size()) + " elements but the scheme needs s = " +
                              std::to_string(scheme.size()));
    }
    for (const auto& q : basis.polys()) {
        if (q.dimension() != scheme.dimension()) {
            throw ValidationError("range basis dimension differs from the scheme dimension " +
                                  std::to_string(scheme.dimension()));
        }
    }
}

namespace {

void check_f(const HermiteScheme& scheme, const RPoly& f) {
    if (f.dimension() != scheme.dimension()) {
        throw ValidationError("f has dimension " + std::to_string(f.dimension()) + ", expected " +
                              std::to_string(scheme.dimension()));
    }
}

}  // namespace

GramSystem<Rational> gram_hermite(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f) {
    check_basis_shape(scheme, basis);
    check_f(scheme, f);
    const std::size_t s = scheme.size();
    GramSystem<Rational> sys{Matrix<Rational>(s, s), std::vector<Rational>(s), GramKind::hermite};
    for (std::size_t i = 0; i < s; ++i) {
        const auto& lam = scheme.functionals()[i];
        for (std::size_t j = 0; j < s; ++j) sys.matrix(i, j) = lam.apply(basis[j]);
        sys.rhs[i] = lam.apply(f);
    }
    return sys;
}

GramSystem<Rational> gram_lagrange(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f,
                                   const Rational& h0) {
    check_basis_shape(scheme, basis);
    check_f(scheme, f);
    const auto points = generate_points(scheme, h0);
    const std::size_t s = scheme.size();
    GramSystem<Rational> sys{Matrix<Rational>(s, s), std::vector<Rational>(s), GramKind::lagrange};
    for (std::size_t i = 0; i < s; ++i) {
        const auto& p = points.points[i];
        for (std::size_t j = 0; j < s; ++j) sys.matrix(i, j) = basis[j](p);
        sys.rhs[i] = f(p);
    }
    return sys;
}

GramSystem<HPoly> gram_raw_symbolic(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f) {
    check_basis_shape(scheme, basis);
    check_f(scheme, f);
    const auto points = generate_points(scheme);
    const std::size_t s = scheme.size();
    GramSystem<HPoly> sys{Matrix<HPoly>(s, s), std::vector<HPoly>(s), GramKind::symbolic_raw};
    for (std::size_t i = 0; i < s; ++i) {
        const auto& p = points.points[i];
        for (std::size_t j = 0; j < s; ++j) sys.matrix(i, j) = basis[j](p);
        sys.rhs[i] = f(p);
    }
    return sys;
}

GramSystem<HPoly> gram_hat_symbolic(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f) {
    check_basis_shape(scheme, basis);
    check_f(scheme, f);
    const std::size_t s = scheme.size();
    GramSystem<HPoly> sys{Matrix<HPoly>(s, s), std::vector<HPoly>(s), GramKind::symbolic_hat};
    for (std::size_t k = 0; k < scheme.entries().size(); ++k) {
        const auto& entry = scheme.entries()[k];
        const std::size_t offset = scheme.offset(k);
        const std::size_t count = subspace_dimension(entry.subspace);
        for (std::size_t local = 0; local < count; ++local) {
            const auto comb = difference_combination(entry, local);
            for (std::size_t j = 0; j < s; ++j) sys.matrix(offset + local, j) = difference_apply(comb, basis[j]);
            sys.rhs[offset + local] = difference_apply(comb, f);
        }
    }
    return sys;
}

GramSystem<Rational> specialize(const GramSystem<HPoly>& system, const Rational& h0) {
    GramSystem<Rational> out{map_entries(system.matrix, [&](const HPoly& p) { return p(h0); }), {}, GramKind::lagrange};
    out.rhs.reserve(system.rhs.size());
    for (const auto& r : system.rhs) out.rhs.push_back(r(h0));
    return out;
}

Interpolant solve_exact(const GramSystem<Rational>& system, const RangeBasis& basis) {
    if (basis.size() != system.matrix.cols()) throw ValidationError("range basis length differs from the system");
    Interpolant out;
    out.coefficients = solve(system.matrix, system.rhs);
    out.polynomial = RPoly(basis.size() == 0 ? 0 : basis[0].dimension());
    for (std::size_t j = 0; j < basis.size(); ++j) out.polynomial += basis[j].scaled(out.coefficients[j]);
    return out;
}

Rational det_hermite(const HermiteScheme& scheme, const RangeBasis& basis) {
    return determinant(gram_hermite(scheme, basis, RPoly(scheme.dimension())).matrix);
}

HPoly det_hat(const HermiteScheme& scheme, const RangeBasis& basis) {
    return determinant(gram_hat_symbolic(scheme, basis, RPoly(scheme.dimension())).matrix);
}

void validate_range_basis(const HermiteScheme& scheme, const RangeBasis& basis) {
    const auto sys = gram_hermite(scheme, basis, RPoly(scheme.dimension()));
    if (const std::size_t r = rank(sys.matrix); r < scheme.size()) throw SingularGramError(r, scheme.size());
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t d, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(d, 0);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
        if (i + 1 == d) {
            exps[i] = left;
            out.emplace_back(exps);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[i] = e;
            fill(i + 1, left - e);
        }
    };
    fill(0, degree);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace

RangeBasis greedy_monomial_basis(const HermiteScheme& scheme) {
    const std::size_t s = scheme.size();
    const std::size_t d = scheme.dimension();
    unsigned max_degree = 0;
    for (const auto& lam : scheme.functionals()) max_degree = std::max(max_degree, static_cast<unsigned>(lam.op.degree()));
    // A total-degree bound of (max operator degree + s) always suffices for s
    // independent functionals.
    const unsigned degree_limit = max_degree + static_cast<unsigned>(s);

    std::vector<RPoly> chosen;
    std::vector<std::vector<Rational>> columns;
    std::size_t current_rank = 0;
    for (unsigned deg = 0; deg <= degree_limit && chosen.size() < s; ++deg) {
        for (const auto& m : monomials_of_degree(d, deg)) {
            const RPoly candidate = RPoly::term(m, Rational(1));
            std::vector<Rational> col(s);
            for (std::size_t i = 0; i < s; ++i) col[i] = scheme.functionals()[i].apply(candidate);
            Matrix<Rational> trial(s, columns.size() + 1);
            for (std::size_t c = 0; c < columns.size(); ++c) {
                for (std::size_t i = 0; i < s; ++i) trial(i, c) = columns[c][i];
            }
            for (std::size_t i = 0; i < s; ++i) trial(i, columns.size()) = col[i];
            const std::size_t r = rank(trial);
            if (r > current_rank) {
                current_rank = r;
                columns.push_back(std::move(col));
                chosen.push_back(candidate);
                if (chosen.size() == s) break;
            }
        }
    }
    if (chosen.size() < s) throw SingularGramError(chosen.size(), s);
    return RangeBasis(std::move(chosen));
}

bool RangeStabilityReport::all_nonzero() const {
    return std::all_of(entries.begin(), entries.end(), [](const StabilityEntry& e) { return e.nonzero; });
}

RangeStabilityReport range_stability(const HermiteScheme& scheme, const RangeBasis& basis,
                                     const std::vector<Rational>& h_values) {
    RangeStabilityReport report;
    report.determinant = det_hat(scheme, basis);
    for (const auto& h : h_values) {
        if (h.is_zero()) throw ValidationError("perturbation parameter h must be nonzero");
        const Rational value = report.determinant(h);
        report.entries.push_back(StabilityEntry{h, value, !value.is_zero()});
    }
    return report;
}

ResidualDecomposition residual_decomposition(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f) {
    const auto hat = gram_hat_symbolic(scheme, basis, f);
    const auto herm = gram_hermite(scheme, basis, f);
    const std::size_t s = scheme.size();
    ResidualDecomposition out{Matrix<HPoly>(s, s), std::vector<HPoly>(s)};
    auto check = [](const HPoly& e, const std::string& where) {
        if (!e.constant_term().is_zero()) {
            throw ConsistencyError("residual entry " + where + " = " + e.str() + " does not vanish at h = 0");
        }
    };
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            out.matrix(i, j) = hat.matrix(i, j) - HPoly(herm.matrix(i, j));
            check(out.matrix(i, j), "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
        out.rhs[i] = hat.rhs[i] - HPoly(herm.rhs[i]);
        check(out.rhs[i], "eps(" + std::to_string(i + 1) + ")");
    }
    return out;
}

ConvergenceReport convergence_study(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f,
                                    const std::vector<Rational>& h_values, const Rational& growth_constant) {
    for (std::size_t k = 0; k < h_values.size(); ++k) {
        if (h_values[k].is_zero()) throw ValidationError("perturbation parameter h must be nonzero");
        if (k > 0 && !(h_values[k].abs() < h_values[k - 1].abs())) {
            throw ValidationError("h values must be strictly decreasing in magnitude");
        }
    }

    ConvergenceReport report;
    report.h_values = h_values;
    report.growth_constant = growth_constant;
    const auto herm = gram_hermite(scheme, basis, f);
    report.limit = solve_exact(herm, basis).coefficients;

    std::vector<std::size_t> usable;
    for (const auto& h : h_values) {
        ConvergenceRow row;
        row.h = h;
        try {
            const auto sys = gram_lagrange(scheme, basis, f, h);
            row.coefficients = solve_exact(sys, basis).coefficients;
            for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
                row.gaps.push_back((row.coefficients[j] - report.limit[j]).abs());
            }
            usable.push_back(report.rows.size());
        } catch (const SingularGramError& e) {
            row.singular = true;
            row.rank = e.rank();
        } catch (const CollisionError&) {
            row.singular = true;
        }
        report.rows.push_back(std::move(row));
    }

    report.pass = usable.size() >= 2;
    const std::size_t first_checked = usable.size() > 2 ? 1 : 0;
    for (std::size_t p = 0; p + 1 < usable.size(); ++p) {
        const auto& prev = report.rows[usable[p]];
        const auto& next = report.rows[usable[p + 1]];
        std::vector<std::optional<Rational>> ratio_row;
        const Rational h_ratio = (next.h / prev.h).abs();
        for (std::size_t j = 0; j < prev.gaps.size(); ++j) {
            if (prev.gaps[j].is_zero()) {
                ratio_row.emplace_back(std::nullopt);
            } else {
                ratio_row.emplace_back(next.gaps[j] / prev.gaps[j]);
            }
            if (p >= first_checked && report.pass && next.gaps[j] > growth_constant * prev.gaps[j] * h_ratio) {
                report.pass = false;
                report.failing_coefficient = j;
                report.failing_h = next.h;
            }
        }
        report.ratios.push_back(std::move(ratio_row));
    }
    return report;
}

}  // namespace idealinterp
