#pragma once

#include "motivix/exact/matrix.hpp"

#include <vector>

namespace motivix::exact {

// Full-rank ℤ-lattice in ℚ^n, stored in canonical Hermite normal form:
// upper triangular rows, positive pivots, entries above a pivot reduced
// into [0, pivot).
class ZLattice {
public:
    // ℤ-span of the rows of `generators` (any number of rows, rank must be n).
    static ZLattice from_generators(const RatMatrix& generators);
    static ZLattice standard(std::size_t n);

    std::size_t ambient_rank() const { return basis_.cols(); }
    const RatMatrix& basis() const { return basis_; }
    const RatMatrix& basis_inverse() const { return inverse_; }
    Rat covolume() const;  // |det basis|

    bool contains(const std::vector<Rat>& v) const;
    std::vector<Rat> coordinates(const std::vector<Rat>& v) const;

    friend bool operator==(const ZLattice& a, const ZLattice& b) { return a.basis_ == b.basis_; }

private:
    RatMatrix basis_;
    RatMatrix inverse_;
};

// Canonical HNF of a square full-rank basis; RankError when singular.
ZLattice hnf(const RatMatrix& basis);
bool lattice_contains(const ZLattice& l, const std::vector<Rat>& v);

}  // namespace motivix::exact
