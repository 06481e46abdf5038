#pragma once

// Test-side oracles and model builders, shared by unit and acceptance suites.
// Nothing here calls the code paths it is used to check.

#include "motivix/cmlat/model.hpp"
#include "motivix/corr/corr2.hpp"
#include "motivix/decomp/candidate.hpp"

#include <random>
#include <vector>

namespace support {

using namespace motivix;
using namespace motivix::cmlat;
using exact::make_rat;

inline QuadInt q(long d, long num, long den = 1, long inum = 0, long iden = 1) {
    return QuadInt(d, make_rat(num, den), make_rat(inum, iden));
}

// Rational glue vector (n_1/den, ..., n_g/den) over ℚ(√−d).
inline std::vector<QuadInt> glue(long d, std::vector<long> nums, long den) {
    std::vector<QuadInt> v;
    for (long n : nums) v.push_back(q(d, n, den));
    return v;
}

inline AbelianModel lattice_model(long d, int g, std::vector<std::vector<QuadInt>> glues,
                                  Order order = Order::Gaussian) {
    ModelSpec s;
    s.d = d;
    s.g = g;
    s.glue = std::move(glues);
    s.order = order;
    return build_model(s);
}

// Glue (1/p)(1,…,1): every proper nonempty K has exponent p.
inline AbelianModel symmetric_model(long d, int g, long p) {
    return lattice_model(d, g, {glue(d, std::vector<long>(g, 1), p)});
}

// Brute-force lattice oracle: m·x maps every generator of Λ back into Λ,
// checked one generator at a time through lattice membership.
inline bool maps_lattice_into_itself(const AbelianModel& m, const EndoQ& x) {
    const auto& basis = m.lattice().basis();
    const std::size_t n = basis.rows();
    auto r = exact::realify(x);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rat> img(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) img[i] += r(i, j) * basis(k, j);
        if (!exact::lattice_contains(m.lattice(), img)) return false;
    }
    return true;
}

// Scan m = 1..bound for the least m with m·e_K integral.
inline Int scan_exponent(const AbelianModel& m, Subset k, long bound) {
    for (long t = 1; t <= bound; ++t) {
        EndoQ x = m.idempotent(k);
        x.scale(Rat(t));
        if (maps_lattice_into_itself(m, x)) return Int(t);
    }
    return Int(0);
}

// lcm of glue denominators, squared: a provable bound on every exponent.
inline long exponent_bound(const AbelianModel& m) {
    Int l = 1;
    for (const auto& v : m.spec().glue)
        for (const auto& z : v) l = exact::lcm(l, exact::lcm(z.re().get_den(), z.im().get_den()));
    if (m.order() == Order::Maximal) l *= 2;
    return Int(l * l).get_si();
}

inline Rat rand_rat(std::mt19937_64& rng, int span = 6, int den = 4) {
    std::uniform_int_distribution<int> n(-span, span), d(1, den);
    return make_rat(n(rng), d(rng));
}

inline EndoQ random_endo(const AbelianModel& m, std::mt19937_64& rng, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    EndoQ x = m.zero();
    for (int r = 0; r < m.g(); ++r)
        for (int c = 0; c < m.g(); ++c)
            if (keep(rng)) x(r, c) = QuadInt(m.d(), rand_rat(rng), rand_rat(rng));
    return x;
}

inline Permutation random_perm(int g, std::mt19937_64& rng) {
    Permutation p = identity_perm(g);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline CellSet random_cells(int g, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    CellSet u = CellSet::empty(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) u.set(i, j, coin(rng));
    return u;
}

inline decomp::Candidate random_candidate(int g, std::mt19937_64& rng) {
    using decomp::Side;
    std::bernoulli_distribution coin(0.5);
    auto c = decomp::Candidate::uniform(g, Side::Lambda);
    for (auto k : {decomp::Grid::U, decomp::Grid::V, decomp::Grid::W})
        for (auto& s : c.grid(k)) s = coin(rng) ? Side::Lambda : Side::Xi;
    for (auto& s : c.L) s = coin(rng) ? Side::Lambda : Side::Xi;
    return c;
}

inline corr::Corr2 random_corr(const AbelianModel& m, std::mt19937_64& rng, int nterms = 3) {
    using corr::Corr2;
    std::uniform_int_distribution<int> ch(0, 3);
    Corr2 x = Corr2::zero(m.g(), m.d());
    for (int t = 0; t < nterms; ++t) {
        EndoQ a = random_endo(m, rng, 0.3), b = random_endo(m, rng, 0.3);
        int c = ch(rng);
        x += c == 3 ? Corr2::tensor(a, b, rand_rat(rng))
                    : Corr2::channel_tensor(corr::kChannels[c], a, b, rand_rat(rng));
    }
    return x;
}

}  // namespace support
