#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idealinterp/functionals.hpp"
#include "idealinterp/hpoly.hpp"
#include "idealinterp/linalg.hpp"
#include "idealinterp/mpoly.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

/// Ordered range basis q = (q_1, ..., q_s); pairwise distinct, same dimension.
class RangeBasis {
public:
    RangeBasis() = default;
    explicit RangeBasis(std::vector<RPoly> polys);

    std::size_t size() const noexcept { return polys_.size(); }
    const std::vector<RPoly>& polys() const noexcept { return polys_; }
    const RPoly& operator[](std::size_t j) const { return polys_.at(j); }

private:
    std::vector<RPoly> polys_;
};

enum class GramKind {
    hermite,       // lambda^T q
    lagrange,      // lambda_h^T q at a concrete h0
    symbolic_raw,  // lambda_h^T q over Q[h]
    symbolic_hat,  // T lambda_h^T q over Q[h]
};

template <class R>
struct GramSystem {
    Matrix<R> matrix;
    std::vector<R> rhs;
    GramKind kind = GramKind::hermite;
};

struct Interpolant {
    std::vector<Rational> coefficients;
    RPoly polynomial;
};

/// Throws ValidationError if the basis length differs from s or its dimension
/// differs from the scheme's.
void check_basis_shape(const HermiteScheme& scheme, const RangeBasis& basis);

GramSystem<Rational> gram_hermite(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f);
GramSystem<Rational> gram_lagrange(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f,
                                   const Rational& h0);
GramSystem<HPoly> gram_raw_symbolic(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f);
/// Entries are difference_apply values for each (functional, basis element).
GramSystem<HPoly> gram_hat_symbolic(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f);
GramSystem<Rational> specialize(const GramSystem<HPoly>& system, const Rational& h0);

/// Throws SingularGramError carrying the rank.
Interpolant solve_exact(const GramSystem<Rational>& system, const RangeBasis& basis);

/// det(lambda^T q); zero means q is not a basis for the range.
Rational det_hermite(const HermiteScheme& scheme, const RangeBasis& basis);
/// Fraction-free determinant of the hat Gram matrix over Q[h].
HPoly det_hat(const HermiteScheme& scheme, const RangeBasis& basis);

/// Throws SingularGramError when det(lambda^T q) = 0.
void validate_range_basis(const HermiteScheme& scheme, const RangeBasis& basis);

/// Greedy helper (not part of the construction itself): walk monomials in
/// ascending graded-lex order and keep each one that raises the rank of the
/// functional-evaluation matrix, until s are kept.
RangeBasis greedy_monomial_basis(const HermiteScheme& scheme);

struct StabilityEntry {
    Rational h;
    Rational determinant;
    bool nonzero = false;
};

struct RangeStabilityReport {
    HPoly determinant;
    std::vector<StabilityEntry> entries;
    bool all_nonzero() const;
};

RangeStabilityReport range_stability(const HermiteScheme& scheme, const RangeBasis& basis,
                                     const std::vector<Rational>& h_values);

struct ResidualDecomposition {
    Matrix<HPoly> matrix;       // E_h
    std::vector<HPoly> rhs;     // eps_h
};

/// hat - hermite entrywise; throws ConsistencyError if an entry has a nonzero
/// constant term.
ResidualDecomposition residual_decomposition(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f);

struct ConvergenceRow {
    Rational h;
    bool singular = false;
    std::size_t rank = 0;
    std::vector<Rational> coefficients;  // empty when singular
    std::vector<Rational> gaps;          // |x~_j(h) - x0_j|, empty when singular
};

struct ConvergenceReport {
    std::vector<Rational> h_values;
    std::vector<Rational> limit;  // x0, the Hermite coefficients
    std::vector<ConvergenceRow> rows;
    /// ratios[p][j] = gap_j at the (p+1)-th usable row over gap_j at the p-th;
    /// nullopt when the earlier gap is zero.
    std::vector<std::vector<std::optional<Rational>>> ratios;
    Rational growth_constant = Rational(2);
    bool pass = false;
    std::optional<std::size_t> failing_coefficient;
    std::optional<Rational> failing_h;
};

/// Decay rule: over consecutive nonsingular rows, skipping the first pair,
/// gap_j(h') <= C * gap_j(h) * |h'/h| for every coefficient j. Requires a
/// nonzero h list strictly decreasing in magnitude.
ConvergenceReport convergence_study(const HermiteScheme& scheme, const RangeBasis& basis, const RPoly& f,
                                    const std::vector<Rational>& h_values,
                                    const Rational& growth_constant = Rational(2));

}  // namespace idealinterp
