#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivix/motcalc/motive.hpp"

#include <random>

using namespace motivix;
using namespace motivix::motcalc;

namespace {

DimVector dv(std::initializer_list<long> xs) {
    DimVector v;
    for (long x : xs) v.push_back(Int(x));
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// χ of a degree-d hypersurface of dimension n from its total Chern class
// (1+h)^{n+2}/(1+dh), integrated against [X] = d·h.
Int euler_from_chern(int n, long d) {
    std::vector<Int> num(n + 1, Int(0));
    Int binom = 1;
    for (int k = 0; k <= n; ++k) {
        num[k] = binom;
        binom = binom * (n + 2 - k) / (k + 1);
    }
    Int coeff = 0, pw = 1;  // Σ num[n−k]·(−d)^k
    for (int k = 0; k <= n; ++k) {
        coeff += num[n - k] * pw;
        pw *= -d;
    }
    return coeff * d;
}

Int binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("curves") {
    CHECK(ck_curve(0).dims() == dv({1, 0, 1}));
    CHECK(at(ck_curve(1).dims(), 1) == 2);
    CHECK(at(ck_curve(10).dims(), 1) == 20);
    for (long g = 0; g < 30; ++g) CHECK(total(ck_curve(g).dims()) == 2 * g + 2);
    CHECK_THROWS_AS(ck_curve(-1), InvalidInput);
}

TEST_CASE("surfaces") {
    CHECK(at(MotiveExpr::surface_part(SurfaceTag::M2tr, {6, 4, 2}).dims(), 2) == 2);
    CHECK(at(MotiveExpr::surface_part(SurfaceTag::M2tr, {22, 20, 0}).dims(), 2) == 2);
    CHECK_THROWS_AS(ck_surface(5, 6, 0), InvalidInput);

    // ρ-maximal sextic: b2 from the Betti formula, ρ = b2 − 2p_g, p_g = C(d−1, 3)
    Int b2 = middle_betti(2, 6);
    CHECK(b2 == 106);
    long rho = Int(b2 - 2 * binomial(5, 3)).get_si();
    CHECK(at(MotiveExpr::surface_part(SurfaceTag::M2tr, {b2.get_si(), rho, 0}).dims(), 2) == 20);

    // E×E for CM E: product formula agrees with the surface formula
    auto e2 = product_of_curves(1);
    CHECK(e2.ns_rank == 4);
    CHECK(e2.m2_tr == 2);
    CHECK(ck_surface(6, 4, 2).dims() == e2.dims);

    for (long b = 0; b < 30; ++b)
        for (long r = 0; r <= b; ++r) {
            SurfaceParams p{b, r, 1};
            Int alg = at(MotiveExpr::surface_part(SurfaceTag::M2alg, p).dims(), 2);
            Int tr = at(MotiveExpr::surface_part(SurfaceTag::M2tr, p).dims(), 2);
            CHECK(alg + tr == b);
            CHECK(at(ck_surface(b, r, 1).dims(), 2) == b);
        }
}

TEST_CASE("products of curves") {
    CHECK(product_of_curves(10).m2_tr == 200);
    for (long g = 0; g <= 20; ++g) {
        auto r = product_of_curves(g);
        CHECK(total(r.dims) == (2 * g + 2) * (2 * g + 2));
        CHECK(r.b2 == 4 * g * g + 2);
        CHECK(r.ns_rank == 2 * g * g + 2);
        CHECK(r.m2_alg == 2 * g * g + 2);
        CHECK(r.m2_tr == 2 * g * g);
        CHECK(r.m2_tr_elliptic_times_curve == 2 * g);
        CHECK(r.grid_blocks * 2 == r.m2_tr);
    }
    auto ns = product_of_curves(3, false);
    CHECK(ns.b2 == 38);
    CHECK_FALSE(ns.elliptically_split);
}

TEST_CASE("dimension vectors are additive and convolutive") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 4), small(0, 4);
    auto atom = [&]() {
        switch (pick(rng)) {
            case 0: return MotiveExpr::unit();
            case 1: return MotiveExpr::lefschetz(small(rng));
            case 2: return MotiveExpr::curve_h1(small(rng));
            case 3: return ck_surface(10, small(rng), small(rng));
            default: return MotiveExpr::hypersurface_middle(1 + small(rng) % 3, 3, 0);
        }
    };
    for (int it = 0; it < 300; ++it) {
        MotiveExpr a = atom(), b = atom(), c = atom();
        CHECK(MotiveExpr::direct_sum({a, b}).dims() == add(a.dims(), b.dims()));
        CHECK(MotiveExpr::tensor(a, b).dims() == convolve(a.dims(), b.dims()));
        MotiveExpr e = MotiveExpr::tensor(MotiveExpr::direct_sum({a, b}), MotiveExpr::direct_sum({c, a}));
        MotiveExpr k = e.canonical();
        CHECK(k.dims() == e.dims());
        CHECK(k.canonical() == k);
        // no tensor sits above a sum after canonicalization
        for (const auto& t : k.kind() == Kind::DirectSum ? k.children() : std::vector<MotiveExpr>{k})
            CHECK(t.kind() != Kind::DirectSum);
    }
    CHECK(MotiveExpr::tensor(MotiveExpr::lefschetz(1), MotiveExpr::lefschetz(2)).canonical() ==
          MotiveExpr::lefschetz(3));
    CHECK(MotiveExpr::tensor(MotiveExpr::unit(), MotiveExpr::curve_h1(2)).canonical() == MotiveExpr::curve_h1(2));
}

TEST_CASE("hypersurface Betti numbers match the Chern class Euler characteristic") {
    for (int n = 1; n <= 7; ++n)
        for (long d = 1; d <= 7; ++d) {
            // χ = (number of even weights outside the middle) + (−1)^n·b_n
            Int others = 0;
            for (int w = 0; w <= 2 * n; w += 2)
                if (w != n) ++others;
            Int chi = others + (n % 2 ? -middle_betti(n, d) : middle_betti(n, d));
            CHECK(chi == euler_from_chern(n, d));
        }
    CHECK(middle_betti(4, 3) == 23);
    CHECK(middle_betti(1, 3) == 2);
    CHECK(middle_betti(2, 4) == 22);
}

TEST_CASE("hypersurface projectors") {
    auto cubic = hypersurface_ck(4, 3);
    CHECK(cubic.projectors()[2] == cubic.cross(3, 1, Rat(1, 3)));
    CHECK(cubic.projectors()[6] == cubic.cross(1, 3, Rat(1, 3)));
    CHECK(cubic.projectors()[0] == cubic.cross(4, 0, Rat(1, 3)));
    CHECK(cubic.describe(cubic.projectors()[2]) == "1/3*g^3xg^1");
    CHECK(cubic.dimension(4) == 23);
    CHECK(cubic.verify());

    auto line = hypersurface_ck(1, 1);
    CHECK(line.verify());
    CHECK(line.projectors()[1].is_zero());
    CKElement s = line.projectors()[0];
    s += line.projectors()[2];
    CHECK(s == line.delta());

    for (int n = 1; n <= 6; ++n)
        for (long d = 1; d <= 5; ++d) {
            auto r = hypersurface_ck(n, d);
            CHECK(r.verify());
            for (int j = 0; j <= n; ++j) {
                if (2 * j == n) continue;
                const auto& p = r.projectors()[2 * j];
                CHECK(r.compose(p, p) == p);
                CHECK(p == r.cross(n - j, j, Rat(1, d)));
            }
            Int dims = 0;
            for (int w = 0; w <= 2 * n; ++w) dims += r.dimension(w);
            CHECK(dims == (n % 2 ? n + 1 : n) + middle_betti(n, d));
        }
}

TEST_CASE("composition in the projector ring is associative") {
    auto r = hypersurface_ck(4, 3);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pw(0, 4), co(-3, 3);
    auto rnd = [&]() {
        CKElement x;
        x.diagonal = co(rng);
        for (int t = 0; t < 3; ++t) x += r.cross(pw(rng), pw(rng), exact::make_rat(co(rng), 2));
        return x;
    };
    for (int it = 0; it < 200; ++it) {
        CKElement x = rnd(), y = rnd(), z = rnd();
        CHECK(r.compose(r.compose(x, y), z) == r.compose(x, r.compose(y, z)));
        CHECK(r.compose(r.delta(), x) == x);
        CHECK(r.compose(x, r.delta()) == x);
    }
}

TEST_CASE("blow-up chains") {
    auto p4 = projective_space(4);
    CHECK(p4.dims() == dv({1, 0, 1, 0, 1, 0, 1, 0, 1}));

    auto pt = blowup_chain(p4, {Center::point()});
    CHECK(pt.rows[0].second == dv({0, 0, 1, 0, 1, 0, 1}));
    CHECK(pt.dims == add(p4.dims(), dv({0, 0, 1, 0, 1, 0, 1})));

    for (long g = 0; g < 6; ++g) {
        auto c = blowup_chain(p4, {Center::curve(g)});
        CHECK(at(c.rows[1].second, 3) == 2 * g);
        CHECK(at(c.rows[1].second, 5) == 2 * g);
        CHECK(c.rows[1].second == dv({0, 0, 1, 2 * g, 2, 2 * g, 1}));
    }
    auto s = blowup_chain(p4, {Center::surf(22, 20, 0)});
    CHECK(s.rows[2].second == dv({0, 0, 1, 0, 22, 0, 1}));

    // M₀, M₁, M₂ for a mixed chain
    auto mix = blowup_chain(p4, {Center::point(), Center::point(), Center::curve(2), Center::surf(6, 4, 2)});
    CHECK(mix.rows[0].second == dv({0, 0, 2, 0, 2, 0, 2}));
    CHECK(mix.rows[1].second == dv({0, 0, 1, 4, 2, 4, 1}));
    CHECK(mix.rows[2].second == dv({0, 0, 1, 4, 6, 4, 1}));
    CHECK(total(mix.dims) == 5 + 6 + 12 + 16);

    // resolving C₆×C₆ at 36 points adds 36 copies of 𝕃
    auto c6sq = MotiveExpr::tensor(ck_curve(10), ck_curve(10));
    std::vector<Center> pts(36, Center::point());
    auto res = blowup_chain(c6sq, pts, 2);
    CHECK(res.rows[0].second == dv({0, 0, 36}));
    CHECK(res.dims == add(c6sq.dims(), dv({0, 0, 36})));

    CHECK_THROWS_AS(blowup_chain(p4, {Center::surf(6, 4, 2)}, 3), InvalidInput);
}

TEST_CASE("cubic ledger") {
    auto k3 = cubic_rationality_ledger({{22, 20, 0}}, {}, 0);
    CHECK(k3.prim_dim == 22);
    REQUIRE(k3.surfaces.size() == 1);
    CHECK(k3.surfaces[0].tr_dim == 2);
    CHECK(std::string(host_verdict_text(k3.surfaces[0].verdict)) == "cannot host");
    CHECK(k3.summary == "no host available");

    auto eq = cubic_rationality_ledger({{40, 18, 0}}, {}, 0);
    CHECK(eq.surfaces[0].verdict == HostVerdict::ForcesEquality);
    CHECK(std::string(host_verdict_text(eq.surfaces[0].verdict)) ==
          "hosting forces equality, violating nontriviality of both summands");
    CHECK(eq.summary == "no host available");

    auto big = cubic_rationality_ledger({{106, 86, 0}, {60, 10, 0}}, {1, 3}, 4);
    CHECK(big.surfaces[0].verdict == HostVerdict::CannotHost);
    CHECK(big.surfaces[1].verdict == HostVerdict::CouldHost);
    CHECK(big.resolution.rows[0].second == dv({0, 0, 4, 0, 4, 0, 4}));
    CHECK(big.resolution.rows[1].second == dv({0, 0, 2, 8, 4, 8, 2}));

    CHECK(cubic_rationality_ledger({}, {}, 0).summary == "no host available");
}
