#pragma once

#include "motivix/errors.hpp"
#include "motivix/exact/quad.hpp"
#include "motivix/exact/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace motivix::exact {

// Dense row-major matrix. T needs +, -, * and ==; the fill value doubles as
// the zero of the coefficient ring (it carries d for QuadInt entries).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }
    const std::vector<T>& data() const { return data_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    template <class S>
    Matrix& scale(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == a.zero_) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == a.zero_) continue;
                    p(i, j) += aik * bkj;
                }
            }
        return p;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == zero_)) return false;
        return true;
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using QuadMatrix = Matrix<QuadInt>;

RatMatrix rat_matrix(std::size_t rows, std::size_t cols);
RatMatrix rat_identity(std::size_t n);
RatMatrix rat_matrix(const std::vector<std::vector<Rat>>& rows);

QuadMatrix quad_matrix(std::size_t rows, std::size_t cols, long d);
QuadMatrix quad_identity(std::size_t n, long d);

// Gaussian elimination over ℚ.
std::size_t rank(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// Solves x·A = b for a row vector x (A square); nullopt if A is singular.
std::optional<std::vector<Rat>> solve_left(const RatMatrix& a, const std::vector<Rat>& b);

// Realification ℚ(√−d)^g → ℚ^{2g}: coordinate i becomes (Re, √−d-coefficient)
// at positions 2i, 2i+1. The real matrix R of M satisfies re(Mv) = R·re(v).
std::vector<Rat> realify(const std::vector<QuadInt>& v);
RatMatrix realify(const QuadMatrix& m);

std::string to_string(const RatMatrix& m);
std::string to_string(const QuadMatrix& m);

}  // namespace motivix::exact
