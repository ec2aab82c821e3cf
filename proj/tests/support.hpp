#pragma once

// Seeded generators shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <random>
#include <vector>

#include "idealinterp/dinvariant.hpp"
#include "idealinterp/functionals.hpp"
#include "idealinterp/linalg.hpp"
#include "idealinterp/mpoly.hpp"
#include "idealinterp/rational.hpp"

namespace testsupport {

using namespace idealinterp;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long range = 5, long max_den = 4) {
    return Rational(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

inline RPoly random_poly(Rng& rng, std::size_t d, unsigned max_degree, std::size_t terms) {
    RPoly p(d);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<unsigned> e(d, 0);
        long budget = uniform(rng, 0, max_degree);
        for (std::size_t i = 0; i < d && budget > 0; ++i) {
            const long take = (i + 1 == d) ? budget : uniform(rng, 0, budget);
            e[i] = static_cast<unsigned>(take);
            budget -= take;
        }
        std::shuffle(e.begin(), e.end(), rng);
        p.add_term(Monomial(std::move(e)), random_rational(rng));
    }
    return p;
}

/// Random ladder with n <= max_n, a_1 <= max_top, and a table with small
/// integer entries whose column 0 is not all zero.
inline ClassTwoSpec random_class_two(Rng& rng, std::size_t d, std::size_t max_n = 2, unsigned max_top = 6) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_n)));
    std::vector<unsigned> pool;
    for (unsigned v = 2; v <= max_top; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<unsigned> a(pool.begin(), pool.begin() + static_cast<long>(n));
    std::sort(a.begin(), a.end(), std::greater<>());
    a.insert(a.begin(), 1u);

    std::vector<std::vector<Rational>> c(d, std::vector<Rational>(n + 1));
    for (auto& row : c) {
        for (auto& x : row) x = Rational(uniform(rng, -2, 2));
    }
    c[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1))][0] = Rational(uniform(rng, 1, 2));
    return ClassTwoSpec(ExponentLadder::validate(std::move(a)), CoefficientTable::validate(std::move(c)));
}

/// Grows a lower set from the origin by adding x_i-successors whose
/// predecessors are all present.
inline LowerSet random_lower_set(Rng& rng, std::size_t d, std::size_t max_size) {
    std::vector<Monomial> elems{Monomial::one(d)};
    const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_size)));
    auto contains = [&](const Monomial& m) { return std::find(elems.begin(), elems.end(), m) != elems.end(); };
    for (int attempt = 0; attempt < 200 && elems.size() < target; ++attempt) {
        const Monomial& base = elems[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(elems.size()) - 1))];
        const Monomial cand = base * Monomial::variable(d, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1)));
        if (contains(cand)) continue;
        bool lower = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (cand[i] == 0) continue;
            if (!contains(cand / Monomial::variable(d, i))) lower = false;
        }
        if (lower) elems.push_back(cand);
    }
    return LowerSet::validate(std::move(elems));
}

inline DirectionFrame random_frame(Rng& rng, std::size_t d) {
    while (true) {
        std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
        Matrix<Rational> m(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j] = Rational(uniform(rng, -2, 2));
        }
        if (rank(m) == d) return DirectionFrame::validate(std::move(rows));
    }
}

/// Orthonormal frame with rational entries: a signed permutation, optionally
/// followed by the (3/5, 4/5) rotation in one coordinate plane.
inline DirectionFrame random_unit_frame(Rng& rng, std::size_t d) {
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) rows[i][perm[i]] = Rational(uniform(rng, 0, 1) ? 1 : -1);
    if (d >= 2 && uniform(rng, 0, 1)) {
        const std::size_t p = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
        const Rational c(3, 5), s(4, 5);
        for (auto& row : rows) {
            const Rational u = row[p], v = row[p + 1];
            row[p] = c * u - s * v;
            row[p + 1] = s * u + c * v;
        }
    }
    return DirectionFrame::validate(std::move(rows));
}

inline Site random_site(Rng& rng, std::size_t d) {
    std::vector<Rational> xi(d);
    for (auto& x : xi) x = Rational(uniform(rng, -3, 3));
    return Site(std::move(xi));
}

/// One class-one site with a unit frame and one class-two site, at distinct
/// locations.
inline HermiteScheme random_mixed_scheme(Rng& rng, std::size_t d) {
    const Site first = random_site(rng, d);
    Site second = random_site(rng, d);
    while (second == first) second = random_site(rng, d);
    std::vector<SchemeEntry> entries;
    entries.push_back({first, ClassOneSpec{random_lower_set(rng, d, 4), random_unit_frame(rng, d)}});
    entries.push_back({second, random_class_two(rng, d, 2, 4)});
    return HermiteScheme(std::move(entries));
}

/// Iterated directional derivative D_{rho_1}^{alpha_1} ... D_{rho_d}^{alpha_d} f
/// built from single partials only.
inline RPoly iterated_directional(const RPoly& f, const Monomial& alpha, const DirectionFrame& rho) {
    RPoly out = f;
    for (std::size_t k = 0; k < alpha.dimension(); ++k) {
        for (unsigned rep = 0; rep < alpha[k]; ++rep) {
            RPoly next(f.dimension());
            for (std::size_t j = 0; j < f.dimension(); ++j) {
                next += out.partial(j).scaled(rho.direction(k)[j]);
            }
            out = next;
        }
    }
    return out;
}

}  // namespace testsupport
