#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "idealinterp/errors.hpp"
#include "idealinterp/hpoly.hpp"
#include "idealinterp/rational.hpp"

namespace idealinterp {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T, class F>
auto map_entries(const Matrix<T>& m, F&& fn) {
    using U = decltype(fn(m(0, 0)));
    Matrix<U> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = fn(m(r, c));
    }
    return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
    }
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination over an integral domain
/// with exact division; row swaps pick the first nonzero pivot.
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(Rational(1));
    bool negate = false;
    T previous = T(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return T{};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
            }
            m(i, k) = T{};
        }
        previous = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::size_t rank(Matrix<Rational> m);

/// Unique solution of the square system m x = rhs; throws SingularGramError
/// carrying the rank when m is singular.
std::vector<Rational> solve(Matrix<Rational> m, std::vector<Rational> rhs);

/// Some solution of m x = rhs (free variables set to 0), or nullopt when the
/// system is inconsistent. m may be rectangular.
std::optional<std::vector<Rational>> solve_consistent(Matrix<Rational> m, std::vector<Rational> rhs);

}  // namespace idealinterp
