#pragma once

#include <cstddef>
#include <vector>

#include "idealinterp/dinvariant.hpp"
#include "idealinterp/hpoly.hpp"
#include "idealinterp/linalg.hpp"
#include "idealinterp/mpoly.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

using Point = std::vector<Rational>;
using SymbolicPoint = std::vector<HPoly>;

/// Interpolation site xi in Q^d.
class Site {
public:
    Site() = default;
    explicit Site(std::vector<Rational> coords) : xi_(std::move(coords)) {}

    std::size_t dimension() const noexcept { return xi_.size(); }
    const std::vector<Rational>& coords() const noexcept { return xi_; }
    const Rational& operator[](std::size_t i) const { return xi_.at(i); }

    friend bool operator==(const Site&, const Site&) = default;

private:
    std::vector<Rational> xi_;
};

/// The functional f -> (q(D) f)(xi).
struct DiffFunctional {
    Site site;
    RPoly op;

    Rational apply(const RPoly& f) const;
};

Rational functional_apply(const DiffFunctional& lam, const RPoly& f);

struct SchemeEntry {
    Site site;
    SubspaceSpec subspace;
};

/// Hermite interpolation scheme: distinct sites, each carrying a class-one or
/// class-two D-invariant subspace. Functionals are ordered by site, then by
/// the intra-site basis order.
class HermiteScheme {
public:
    explicit HermiteScheme(std::vector<SchemeEntry> entries);

    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<SchemeEntry>& entries() const noexcept { return entries_; }
    /// Intra-site bases, aligned with entries().
    const std::vector<SubspaceBasis>& bases() const noexcept { return bases_; }
    const std::vector<DiffFunctional>& functionals() const noexcept { return functionals_; }
    /// s, the number of interpolation conditions.
    std::size_t size() const noexcept { return functionals_.size(); }
    /// Index of the first functional of entry k.
    std::size_t offset(std::size_t entry) const { return offsets_.at(entry); }

private:
    std::size_t dim_ = 0;
    std::vector<SchemeEntry> entries_;
    std::vector<SubspaceBasis> bases_;
    std::vector<DiffFunctional> functionals_;
    std::vector<std::size_t> offsets_;
};

/// Perturbed Lagrange points, aligned one-to-one with the scheme's functionals.
template <class Coord>
struct PerturbedPointSet {
    std::vector<std::vector<Coord>> points;
    /// functional_index[i] is the functional position point i stands for.
    std::vector<std::size_t> functional_index;
};

/// Local point of entry for intra-site index `local` as a polynomial in h:
/// class one xi + h sum_i alpha_i rho_i, class two xi + phi(m h).
SymbolicPoint entry_point(const SchemeEntry& entry, std::size_t local);

PerturbedPointSet<HPoly> generate_points(const HermiteScheme& scheme);
/// Points at a concrete nonzero h0; throws CollisionError when two coincide.
PerturbedPointSet<Rational> generate_points(const HermiteScheme& scheme, const Rational& h0);

/// phi(t) for a class-two subspace: coordinate i is sum_j c_{i,j} t^{a_j}.
Point curve_point(const ClassTwoSpec& spec, const Rational& t);

/// (1 / h^k) sum_i weights[i] * delta_{points[i]}, with weights already
/// carrying the binomial signs and any 1/m! normalizer.
struct DifferenceCombination {
    std::vector<SymbolicPoint> points;
    std::vector<Rational> weights;
    unsigned divisor_power = 0;
    /// Intra-site indices of the points (positions within the entry's block).
    std::vector<std::size_t> local_indices;
};

/// Combination for intra-site index `local` of the entry (alpha's position in
/// the lower set, or m for class two). Throws std::out_of_range on a bad index.
DifferenceCombination difference_combination(const SchemeEntry& entry, std::size_t local);

/// sum_i w_i f(p_i(h)) divided exactly by h^k; throws NotDivisible if the
/// low coefficients do not vanish.
HPoly difference_apply(const DifferenceCombination& comb, const RPoly& f);

/// Constant term of difference_apply: the h -> 0 limit.
Rational difference_limit(const DifferenceCombination& comb, const RPoly& f);

/// Block lower-triangular map from raw point evaluations to difference
/// quotients: hat = diag(h^{-k}) * weights * raw.
struct Transform {
    Matrix<Rational> weights;
    std::vector<unsigned> divisor_powers;
    /// (offset, size) per site block.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;

    /// T applied to a symbolic raw matrix; rows divided exactly by h^k.
    Matrix<HPoly> apply(const Matrix<HPoly>& raw) const;
    std::vector<HPoly> apply(const std::vector<HPoly>& raw) const;
    /// T at a concrete h0 != 0.
    Matrix<Rational> at(const Rational& h0) const;
};

Transform build_transform(const HermiteScheme& scheme);

}  // namespace idealinterp
