#include "idealinterp/functionals.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

#include "idealinterp/combinatorics.hpp"
#include "idealinterp/errors.hpp"

namespace idealinterp {

Rational DiffFunctional::apply(const RPoly& f) const {
    return apply_diff_op(op, f)(site.coords());
}

Rational functional_apply(const DiffFunctional& lam, const RPoly& f) { return lam.apply(f); }

HermiteScheme::HermiteScheme(std::vector<SchemeEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("scheme has no sites");
    dim_ = entries_.front().site.dimension();
    if (dim_ == 0) throw ValidationError("sites must have at least one coordinate");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& e = entries_[k];
        if (e.site.dimension() != dim_) {
            throw ValidationError("site " + std::to_string(k + 1) + " has arity " +
                                  std::to_string(e.site.dimension()) + ", expected " + std::to_string(dim_));
        }
        if (spec_arity(e.subspace) != dim_) {
            throw ValidationError("subspace of site " + std::to_string(k + 1) + " has dimension " +
                                  std::to_string(spec_arity(e.subspace)) + ", expected " + std::to_string(dim_));
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (entries_[j].site == e.site) {
                throw ValidationError("sites " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                                      " coincide; each site carries exactly one subspace");
            }
        }
    }
    for (const auto& e : entries_) {
        offsets_.push_back(functionals_.size());
        bases_.push_back(build_basis(e.subspace));
        for (const auto& q : bases_.back().polys) functionals_.push_back(DiffFunctional{e.site, q});
    }
}

SymbolicPoint entry_point(const SchemeEntry& entry, std::size_t local) {
    const std::size_t d = entry.site.dimension();
    SymbolicPoint point;
    point.reserve(d);
    for (std::size_t i = 0; i < d; ++i) point.emplace_back(entry.site[i]);

    std::visit(
        [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                const auto& alpha = s.delta.elements().at(local);
                for (std::size_t i = 0; i < d; ++i) {
                    Rational shift;
                    for (std::size_t k = 0; k < d; ++k) shift += Rational(alpha[k]) * s.rho.direction(k)[i];
                    point[i] += HPoly::monomial(shift, 1);
                }
            } else {
                if (local > s.a.top()) throw std::out_of_range("class-two index exceeds a_1");
                const Rational m(static_cast<unsigned long>(local));
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j <= s.a.n(); ++j) {
                        point[i] += HPoly::monomial(s.c(i, j) * m.pow(s.a[j]), s.a[j]);
                    }
                }
            }
        },
        entry.subspace);
    return point;
}

PerturbedPointSet<HPoly> generate_points(const HermiteScheme& scheme) {
    PerturbedPointSet<HPoly> out;
    for (const auto& entry : scheme.entries()) {
        const std::size_t count = subspace_dimension(entry.subspace);
        for (std::size_t local = 0; local < count; ++local) {
            out.functional_index.push_back(out.points.size());
            out.points.push_back(entry_point(entry, local));
        }
    }
    return out;
}

PerturbedPointSet<Rational> generate_points(const HermiteScheme& scheme, const Rational& h0) {
    if (h0.is_zero()) throw ValidationError("perturbation parameter h must be nonzero");
    const auto symbolic = generate_points(scheme);
    PerturbedPointSet<Rational> out;
    out.functional_index = symbolic.functional_index;
    for (const auto& sp : symbolic.points) {
        Point p;
        p.reserve(sp.size());
        for (const auto& coord : sp) p.push_back(coord(h0));
        out.points.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        for (std::size_t j = i + 1; j < out.points.size(); ++j) {
            if (out.points[i] == out.points[j]) throw CollisionError(i + 1, j + 1, h0.str());
        }
    }
    return out;
}

Point curve_point(const ClassTwoSpec& spec, const Rational& t) {
    Point p(spec.c.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j <= spec.a.n(); ++j) p[i] += spec.c(i, j) * t.pow(spec.a[j]);
    }
    return p;
}

DifferenceCombination difference_combination(const SchemeEntry& entry, std::size_t local) {
    DifferenceCombination comb;
    std::visit(
        [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ClassOneSpec>) {
                const auto& elems = s.delta.elements();
                if (local >= elems.size()) throw std::out_of_range("multi-index position outside the lower set");
                const Monomial& alpha = elems[local];
                comb.divisor_power = alpha.total_degree();
                // Every beta <= alpha is in the lower set and precedes alpha.
                for (std::size_t b = 0; b <= local; ++b) {
                    const Monomial& beta = elems[b];
                    if (!beta.divides(alpha)) continue;
                    mpz_class weight = 1;
                    for (std::size_t i = 0; i < alpha.dimension(); ++i) weight *= binomial(alpha[i], beta[i]);
                    if ((alpha.total_degree() - beta.total_degree()) % 2 != 0) weight = -weight;
                    comb.weights.emplace_back(weight);
                    comb.points.push_back(entry_point(entry, b));
                    comb.local_indices.push_back(b);
                }
            } else {
                if (local > s.a.top()) throw std::out_of_range("class-two index exceeds a_1");
                const auto m = static_cast<unsigned>(local);
                comb.divisor_power = m;
                const mpz_class norm = factorial(m);
                for (unsigned r = 0; r <= m; ++r) {
                    mpz_class weight = binomial(m, r);
                    if ((m - r) % 2 != 0) weight = -weight;
                    comb.weights.emplace_back(mpq_class(weight, norm));
                    comb.points.push_back(entry_point(entry, r));
                    comb.local_indices.push_back(r);
                }
            }
        },
        entry.subspace);
    return comb;
}

HPoly difference_apply(const DifferenceCombination& comb, const RPoly& f) {
    HPoly sum;
    for (std::size_t i = 0; i < comb.points.size(); ++i) sum += f(comb.points[i]) * comb.weights[i];
    return sum.div_exact_hpow(comb.divisor_power);
}

Rational difference_limit(const DifferenceCombination& comb, const RPoly& f) {
    return difference_apply(comb, f).constant_term();
}

Transform build_transform(const HermiteScheme& scheme) {
    const std::size_t s = scheme.size();
    Transform t{Matrix<Rational>(s, s), std::vector<unsigned>(s, 0), {}};
    for (std::size_t k = 0; k < scheme.entries().size(); ++k) {
        const auto& entry = scheme.entries()[k];
        const std::size_t offset = scheme.offset(k);
        const std::size_t count = subspace_dimension(entry.subspace);
        t.blocks.emplace_back(offset, count);
        for (std::size_t local = 0; local < count; ++local) {
            const auto comb = difference_combination(entry, local);
            t.divisor_powers[offset + local] = comb.divisor_power;
            for (std::size_t i = 0; i < comb.weights.size(); ++i) {
                t.weights(offset + local, offset + comb.local_indices[i]) = comb.weights[i];
            }
        }
    }
    return t;
}

Matrix<HPoly> Transform::apply(const Matrix<HPoly>& raw) const {
    if (raw.rows() != weights.cols()) throw std::invalid_argument("transform shape mismatch");
    Matrix<HPoly> out(weights.rows(), raw.cols());
    for (std::size_t r = 0; r < weights.rows(); ++r) {
        for (std::size_t c = 0; c < raw.cols(); ++c) {
            HPoly acc;
            for (std::size_t k = 0; k < weights.cols(); ++k) {
                if (!weights(r, k).is_zero()) acc += raw(k, c) * weights(r, k);
            }
            out(r, c) = acc.div_exact_hpow(divisor_powers[r]);
        }
    }
    return out;
}

std::vector<HPoly> Transform::apply(const std::vector<HPoly>& raw) const {
    Matrix<HPoly> column(raw.size(), 1);
    for (std::size_t i = 0; i < raw.size(); ++i) column(i, 0) = raw[i];
    const auto out = apply(column);
    std::vector<HPoly> result(out.rows());
    for (std::size_t i = 0; i < out.rows(); ++i) result[i] = out(i, 0);
    return result;
}

Matrix<Rational> Transform::at(const Rational& h0) const {
    if (h0.is_zero()) throw ValidationError("perturbation parameter h must be nonzero");
    Matrix<Rational> out = weights;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        const Rational scale = h0.pow(divisor_powers[r]).inverse();
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= scale;
    }
    return out;
}

}  // namespace idealinterp
