#include "motivix/decomp/candidate.hpp"

#include <algorithm>

namespace motivix::decomp {

Candidate Candidate::uniform(int g, Side s) {
    Candidate c;
    c.g = g;
    c.U.assign(g * g, s);
    c.V.assign(g * g, s);
    c.W.assign(g * g, s);
    c.L.fill(s);
    return c;
}

const std::vector<Side>& Candidate::grid(Grid k) const {
    switch (k) {
        case Grid::U: return U;
        case Grid::V: return V;
        default: return W;
    }
}

std::vector<Side>& Candidate::grid(Grid k) {
    return const_cast<std::vector<Side>&>(static_cast<const Candidate&>(*this).grid(k));
}

CellSet Candidate::cells(Grid k, Side s) const {
    CellSet out = CellSet::empty(g);
    const auto& cells = grid(k);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) out.set(i, j, cells[i * g + j] == s);
    return out;
}

bool Candidate::nontrivial() const {
    bool lam = std::find(W.begin(), W.end(), Side::Lambda) != W.end();
    bool xi = std::find(W.begin(), W.end(), Side::Xi) != W.end();
    return lam && xi;
}

Candidate Candidate::swapped() const {
    Candidate c = *this;
    auto flip = [](Side s) { return s == Side::Lambda ? Side::Xi : Side::Lambda; };
    for (auto* v : {&c.U, &c.V, &c.W})
        for (auto& s : *v) s = flip(s);
    for (auto& s : c.L) s = flip(s);
    return c;
}

void Candidate::validate() const {
    const std::size_t n = static_cast<std::size_t>(g) * g;
    if (g < 1 || U.size() != n || V.size() != n || W.size() != n)
        throw CandidateError("candidate grids must each have g² cells");
}

}  // namespace motivix::decomp
