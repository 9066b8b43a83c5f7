#ifndef QCARTAN_MATRIX_HPP
#define QCARTAN_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcartan/poly.hpp"

namespace qcartan
{

// Row-major dense matrix with value semantics.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }
    bool is_square() const
    {
        return rows_ == cols_;
    }

    T &operator()(std::size_t r, std::size_t c)
    {
        return data_[r * cols_ + c];
    }
    const T &operator()(std::size_t r, std::size_t c) const
    {
        return data_[r * cols_ + c];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            std::swap((*this)(r, a), (*this)(r, b));
        }
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    template <typename F>
    auto map(F &&f) const -> Matrix<decltype(f(std::declval<const T &>()))>
    {
        Matrix<decltype(f(std::declval<const T &>()))> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(r, c) = f((*this)(r, c));
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        }
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (aik == T(0)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant over R[q]; every division is exact and
// checked.
template <typename R>
Poly<R> det_exact(Matrix<Poly<R>> m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("det_exact: matrix is not square");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Poly<R>(R(1));
    }
    bool negate = false;
    Poly<R> prev(R(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k).is_zero()) {
                ++swap_with;
            }
            if (swap_with == n) {
                return Poly<R>();
            }
            m.swap_rows(k, swap_with);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = Poly<R>();
        }
        prev = m(k, k);
    }
    Poly<R> d = m(n - 1, n - 1);
    return negate ? -d : d;
}

} // namespace qcartan

#endif
