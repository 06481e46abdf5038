#include "motivix/exact/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace motivix::exact {

namespace {

using IntRows = std::vector<std::vector<Int>>;

void row_axpy(std::vector<Int>& dst, const Int& f, const std::vector<Int>& src) {
    for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= f * src[c];
}

// Row-style HNF over ℤ of an integer matrix with `n` columns and rank n.
IntRows integer_hnf(IntRows rows, std::size_t n) {
    std::size_t piv_row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        // Euclid on column `col` among rows >= piv_row.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = piv_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) throw RankError("lattice generators are rank deficient");
            std::swap(rows[piv_row], rows[best]);
            bool done = true;
            for (std::size_t r = piv_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q = floor_div(rows[r][col], rows[piv_row][col]);
                row_axpy(rows[r], q, rows[piv_row]);
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[piv_row][col] < 0)
            for (auto& x : rows[piv_row]) x = -x;
        const Int& p = rows[piv_row][col];
        for (std::size_t r = 0; r < piv_row; ++r) {
            Int q = floor_div(rows[r][col], p);
            if (q != 0) row_axpy(rows[r], q, rows[piv_row]);
        }
        ++piv_row;
    }
    rows.resize(n);
    return rows;
}

}  // namespace

ZLattice ZLattice::from_generators(const RatMatrix& generators) {
    const std::size_t n = generators.cols();
    if (n == 0 || generators.rows() < n) throw RankError("too few lattice generators");
    Int den = common_denominator(generators.data());
    IntRows rows(generators.rows(), std::vector<Int>(n));
    for (std::size_t r = 0; r < generators.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rat scaled = generators(r, c) * den;
            rows[r][c] = scaled.get_num();
        }
    IntRows h = integer_hnf(std::move(rows), n);
    ZLattice l;
    l.basis_ = rat_matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) l.basis_(r, c) = make_rat(h[r][c], den);
    l.inverse_ = *inverse(l.basis_);
    return l;
}

ZLattice ZLattice::standard(std::size_t n) { return from_generators(rat_identity(n)); }

Rat ZLattice::covolume() const { return abs(determinant(basis_)); }

std::vector<Rat> ZLattice::coordinates(const std::vector<Rat>& v) const {
    if (v.size() != ambient_rank()) throw ShapeError("vector length differs from lattice rank");
    const std::size_t n = ambient_rank();
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) x[j] += v[k] * inverse_(k, j);
    }
    return x;
}

bool ZLattice::contains(const std::vector<Rat>& v) const {
    for (const auto& x : coordinates(v))
        if (!is_integer(x)) return false;
    return true;
}

ZLattice hnf(const RatMatrix& basis) {
    if (basis.rows() != basis.cols()) throw ShapeError("hnf expects a square basis");
    if (rank(basis) < basis.rows()) throw RankError("basis is rank deficient");
    return ZLattice::from_generators(basis);
}

bool lattice_contains(const ZLattice& l, const std::vector<Rat>& v) { return l.contains(v); }

}  // namespace motivix::exact
