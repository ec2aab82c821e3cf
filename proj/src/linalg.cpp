#include "idealinterp/linalg.hpp"

namespace idealinterp {

namespace {

// Reduces m (with an optional trailing augmented column) to row echelon form
// in place. Returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(Matrix<Rational>& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        const Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix<Rational> augment(const Matrix<Rational>& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix<Rational> aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    return aug;
}

std::vector<Rational> back_substitute(const Matrix<Rational>& ech, const std::vector<std::size_t>& pivots,
                                      std::size_t unknowns) {
    std::vector<Rational> x(unknowns);
    const std::size_t rhs_col = ech.cols() - 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
        Rational acc = ech(i, rhs_col);
        for (std::size_t c = pivots[i] + 1; c < unknowns; ++c) {
            if (!ech(i, c).is_zero()) acc -= ech(i, c) * x[c];
        }
        x[pivots[i]] = acc;  // pivot entries are normalized to 1
    }
    return x;
}

}  // namespace

std::size_t rank(Matrix<Rational> m) { return echelon(m, m.cols()).size(); }

std::vector<Rational> solve(Matrix<Rational> m, std::vector<Rational> rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve requires a square matrix");
    Matrix<Rational> aug = augment(m, rhs);
    const auto pivots = echelon(aug, m.cols());
    if (pivots.size() < m.rows()) throw SingularGramError(pivots.size(), m.rows());
    return back_substitute(aug, pivots, m.cols());
}

std::optional<std::vector<Rational>> solve_consistent(Matrix<Rational> m, std::vector<Rational> rhs) {
    Matrix<Rational> aug = augment(m, rhs);
    const auto pivots = echelon(aug, m.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        if (!aug(r, m.cols()).is_zero()) return std::nullopt;
    }
    return back_substitute(aug, pivots, m.cols());
}

}  // namespace idealinterp
