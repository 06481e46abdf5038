#include "motivix/exact/matrix.hpp"

#include <sstream>

namespace motivix::exact {

RatMatrix rat_matrix(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rat(0)); }

RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rat(0), Rat(1)); }

RatMatrix rat_matrix(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size(), Rat(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw ShapeError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QuadMatrix quad_matrix(std::size_t rows, std::size_t cols, long d) {
    return QuadMatrix(rows, cols, QuadInt(d));
}

QuadMatrix quad_identity(std::size_t n, long d) {
    return QuadMatrix::identity(n, QuadInt(d), QuadInt(d, 1));
}

namespace {

// Row echelon form in place; returns pivot columns and the determinant sign/scale.
std::vector<std::size_t> echelon(RatMatrix& m, Rat* det) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    if (det) *det = 1;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
            if (det) *det = -*det;
        }
        Rat piv = m(row, col);
        if (det) *det *= piv;
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            Rat f = m(r, col) / piv;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix w = m;
    return echelon(w, nullptr).size();
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
    RatMatrix w = m;
    Rat det;
    if (echelon(w, &det).size() < m.rows()) return 0;
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug = rat_matrix(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && aug(p, col) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != col)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(p, c), aug(col, c));
        Rat piv = aug(col, col);
        for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == 0) continue;
            Rat f = aug(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    RatMatrix inv = rat_matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

std::optional<std::vector<Rat>> solve_left(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.rows() != a.cols() || b.size() != a.cols()) throw ShapeError("solve_left shape mismatch");
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    std::vector<Rat> x(a.rows(), Rat(0));
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) x[j] += b[k] * (*inv)(k, j);
    return x;
}

std::vector<Rat> realify(const std::vector<QuadInt>& v) {
    std::vector<Rat> out;
    out.reserve(2 * v.size());
    for (const auto& z : v) {
        out.push_back(z.re());
        out.push_back(z.im());
    }
    return out;
}

RatMatrix realify(const QuadMatrix& m) {
    RatMatrix r = rat_matrix(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QuadInt& z = m(i, j);
            // (a + b√−d)(x + y√−d) = (ax − d·b·y) + (bx + ay)√−d
            r(2 * i, 2 * j) = z.re();
            r(2 * i, 2 * j + 1) = -Rat(z.d()) * z.im();
            r(2 * i + 1, 2 * j) = z.im();
            r(2 * i + 1, 2 * j + 1) = z.re();
        }
    return r;
}

std::string to_string(const RatMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    }
    os << ']';
    return os.str();
}

std::string to_string(const QuadMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).str();
    }
    os << ']';
    return os.str();
}

}  // namespace motivix::exact
