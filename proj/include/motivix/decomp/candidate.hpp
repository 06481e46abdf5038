#pragma once

#include "motivix/cmlat/model.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace motivix::decomp {

using cmlat::CellSet;

enum class Side : std::uint8_t { Lambda, Xi };
// U ↔ 𝔄¹, V ↔ 𝔄², W ↔ Θ
enum class Grid : std::uint8_t { U, V, W };

// One putative decomposition Δ = Λ + Ξ of the grid-shaped kind: every cell
// of each grid goes to one side. L holds the eight B-type summands
// indexed by K² ∖ {(1,1)}, K = {0,1,2}, in row-major order.
struct Candidate {
    int g = 0;
    std::vector<Side> U, V, W;
    std::array<Side, 8> L{};

    static Candidate uniform(int g, Side s);

    const std::vector<Side>& grid(Grid k) const;
    std::vector<Side>& grid(Grid k);
    Side at(Grid k, int i, int j) const { return grid(k)[i * g + j]; }
    void set(Grid k, int i, int j, Side s) { grid(k)[i * g + j] = s; }

    CellSet cells(Grid k, Side s) const;
    bool nontrivial() const;  // both sides of W nonempty
    Candidate swapped() const;
    void validate() const;  // CandidateError on malformed sizes

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

}  // namespace motivix::decomp
