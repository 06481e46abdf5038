#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivix/errors.hpp"
#include "motivix/exact/finite_field.hpp"
#include "motivix/exact/lattice.hpp"
#include "motivix/exact/numfield.hpp"

#include <random>
#include <set>

using namespace motivix;
using namespace motivix::exact;

namespace {

Rat R(long n, long d = 1) { return make_rat(n, d); }

RatMatrix rows(std::initializer_list<std::initializer_list<Rat>> rs) {
    std::vector<std::vector<Rat>> v;
    for (auto r : rs) v.emplace_back(r);
    return rat_matrix(v);
}

// Oracle: points k·g over a box of integer coefficient vectors.
std::set<std::vector<Rat>> span_points(const RatMatrix& gens, long box) {
    std::set<std::vector<Rat>> pts;
    const std::size_t m = gens.rows();
    std::vector<long> k(m, -box);
    for (;;) {
        std::vector<Rat> v(gens.cols(), Rat(0));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < gens.cols(); ++c) v[c] += Rat(k[r]) * gens(r, c);
        pts.insert(v);
        std::size_t i = 0;
        while (i < m && k[i] == box) k[i++] = -box;
        if (i == m) break;
        ++k[i];
    }
    return pts;
}

Rat rand_rat(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<int> n(-span, span), d(1, 6);
    return make_rat(n(rng), d(rng));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    Rat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(parse_rat("10/4") == R(5, 2));
    CHECK_THROWS_AS(make_rat(1, 0), InvalidInput);
    CHECK_THROWS_AS(parse_rat("x/2"), ParseError);
}

TEST_CASE("hnf canonical forms") {
    SUBCASE("identity is already canonical") {
        CHECK(hnf(rat_identity(4)).basis() == rat_identity(4));
    }
    SUBCASE("(2,0),(1,1) becomes (1,1),(0,2)") {
        auto l = hnf(rows({{2, 0}, {1, 1}}));
        CHECK(l.basis() == rows({{1, 1}, {0, 2}}));
        // brute-force membership comparison on a box
        auto a = span_points(rows({{2, 0}, {1, 1}}), 6);
        auto b = span_points(l.basis(), 6);
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                std::vector<Rat> v{Rat(x), Rat(y)};
                CHECK(a.count(v) == b.count(v));
                CHECK(l.contains(v) == (a.count(v) == 1));
            }
    }
    SUBCASE("closure of (1/5,2/5),(1,0),(0,1) has covolume 1/5") {
        auto l = ZLattice::from_generators(rows({{R(1, 5), R(2, 5)}, {1, 0}, {0, 1}}));
        CHECK(l.basis() == rows({{R(1, 5), R(2, 5)}, {0, 1}}));
        // independent route: product of the triangular pivots
        CHECK(l.basis()(0, 0) * l.basis()(1, 1) == R(1, 5));
        CHECK(l.covolume() == R(1, 5));
    }
    SUBCASE("rank deficiency") {
        CHECK_THROWS_AS(hnf(rows({{1, 2}, {2, 4}})), RankError);
        CHECK_THROWS_AS(ZLattice::from_generators(rows({{1, 2}, {2, 4}, {3, 6}})), RankError);
    }
}

TEST_CASE("lattice membership") {
    CHECK(ZLattice::standard(2).contains({Rat(3), Rat(-7)}));
    auto l = ZLattice::from_generators(rows({{R(1, 5), R(2, 5)}, {1, 0}, {0, 1}}));
    CHECK(lattice_contains(l, {R(1, 5), R(2, 5)}));
    CHECK_FALSE(lattice_contains(l, {R(1, 5), Rat(0)}));
    // brute force: k·(1/5,2/5) + ℤ² never hits (1/5, 0) for |k| ≤ 5
    bool hit = false;
    for (long k = -5; k <= 5; ++k) {
        Rat x = R(k, 5) - R(1, 5), y = R(2 * k, 5);
        if (is_integer(x) && is_integer(y)) hit = true;
    }
    CHECK_FALSE(hit);
    CHECK_THROWS_AS(lattice_contains(l, {Rat(1)}), ShapeError);
}

TEST_CASE("hnf is idempotent and basis independent (randomized)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> u(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + iter % 3;
        RatMatrix b = rat_matrix(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) b(r, c) = rand_rat(rng, 4);
        if (rank(b) < n) continue;
        auto l = hnf(b);
        CHECK(hnf(l.basis()).basis() == l.basis());
        // unimodular transform: add integer multiples of other rows, swap two rows
        RatMatrix t = b;
        for (std::size_t r = 1; r < n; ++r) {
            int k = u(rng);
            for (std::size_t c = 0; c < n; ++c) t(r, c) += Rat(k) * t(0, c);
        }
        for (std::size_t c = 0; c < n; ++c) std::swap(t(0, c), t(n - 1, c));
        auto l2 = hnf(t);
        CHECK(l2 == l);
        std::vector<Rat> v(n);
        for (auto& x : v) x = rand_rat(rng, 4);
        CHECK(l.contains(v) == l2.contains(v));
        // every basis row and integer combination is contained
        std::vector<Rat> w(n, Rat(0));
        for (std::size_t r = 0; r < n; ++r) {
            int k = u(rng);
            for (std::size_t c = 0; c < n; ++c) w[c] += Rat(k) * b(r, c);
        }
        CHECK(l.contains(w));
    }
}

TEST_CASE("QuadInt field axioms (randomized)") {
    std::mt19937_64 rng(11);
    for (long d : {1L, 2L, 3L, 7L}) {
        for (int iter = 0; iter < 150; ++iter) {
            QuadInt x(d, rand_rat(rng), rand_rat(rng)), y(d, rand_rat(rng), rand_rat(rng)),
                z(d, rand_rat(rng), rand_rat(rng));
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.norm() >= 0);
            CHECK((x.norm() == 0) == x.is_zero());
            if (!x.is_zero()) CHECK(x * x.inverse() == QuadInt(d, 1));
        }
    }
    CHECK_THROWS_AS(QuadInt(4), InvalidInput);
    CHECK_THROWS_AS(QuadInt(1) * QuadInt(1).inverse(), InvalidInput);
}

TEST_CASE("realification is a ring map") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        const long d = 3;
        QuadMatrix a = quad_matrix(2, 2, d), b = quad_matrix(2, 2, d);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                a(r, c) = QuadInt(d, rand_rat(rng), rand_rat(rng));
                b(r, c) = QuadInt(d, rand_rat(rng), rand_rat(rng));
            }
        CHECK(realify(a * b) == realify(a) * realify(b));
        CHECK(realify(a + b) == realify(a) + realify(b));
        std::vector<QuadInt> v{QuadInt(d, rand_rat(rng), rand_rat(rng)), QuadInt(d, rand_rat(rng), rand_rat(rng))};
        std::vector<QuadInt> av{a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
        auto rv = realify(v);
        auto ra = realify(a);
        std::vector<Rat> expect(4, Rat(0));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) expect[i] += ra(i, j) * rv[j];
        CHECK(realify(av) == expect);
    }
}

TEST_CASE("nf_reduce") {
    auto cube = nf_reduce({0, 0, 0, 1}, {-4, 0, 0, 1});
    CHECK(cube.is_rational());
    CHECK(cube.rational_value() == 4);
    auto e2 = nf_reduce({0, 0, 1}, {1, -1, 1});
    CHECK(e2.coeffs() == std::vector<Rat>{Rat(-1), Rat(1)});
    auto e6 = nf_reduce({0, 0, 0, 0, 0, 0, 1}, {1, -1, 1});
    CHECK(e6.is_rational());
    // t³ + 1 = (t + 1)(t² − t + 1), so t³ ≡ −1 and t⁶ ≡ 1
    CHECK(e6.rational_value() == 1);
    auto f = NumberField::make({gen_eps()});
    auto eps = NfElem::generator(f, "eps");
    NfElem acc(f, Rat(1));
    for (int k = 1; k <= 6; ++k) {
        acc *= eps;
        CHECK(acc.is_rational() == (k == 3 || k == 6));
    }
    CHECK(acc == NfElem(f, Rat(1)));
    CHECK(eps.pow(3) == NfElem(f, Rat(-1)));
    CHECK(eps.pow(6) == eps.pow(3) * eps.pow(3));
    CHECK(nf_reduce({-4, 0, 0, 1}, {-4, 0, 0, 1}).is_zero());
    CHECK(nf_reduce({1, -1, 1}, {1, -1, 1}).is_zero());
}

TEST_CASE("number field ring axioms in the product presentation (randomized)") {
    auto f = NumberField::make({gen_eps(), gen_cbrt4(), gen_i()});
    CHECK(f->dimension() == 12);
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        std::vector<Rat> c(f->dimension());
        for (auto& x : c) x = rand_rat(rng, 3);
        return NfElem(f, c);
    };
    for (int iter = 0; iter < 40; ++iter) {
        auto x = rnd(), y = rnd(), z = rnd();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == NfElem(f, Rat(1)));
    }
    auto c = NfElem::generator(f, "cbrt4");
    CHECK(c.pow(3) == NfElem(f, Rat(4)));
    auto i = NfElem::generator(f, "i");
    CHECK(i * i == NfElem(f, Rat(-1)));
}

TEST_CASE("mixed fields join by generator name") {
    auto fe = NumberField::make({gen_eps()});
    auto fc = NumberField::make({gen_cbrt4()});
    auto x = NfElem::generator(fe, "eps") + NfElem::generator(fc, "cbrt4");
    CHECK(x.field()->dimension() == 6);
    CHECK(x.field() == NumberField::make({gen_cbrt4(), gen_eps()}));
}

TEST_CASE("irreducibility trial check") {
    CHECK(check_irreducible({1, -1, 1}) == Irreducibility::Irreducible);
    CHECK(check_irreducible({-4, 0, 0, 1}) == Irreducibility::Irreducible);
    CHECK(check_irreducible({1, 0, 1}) == Irreducibility::Irreducible);
    CHECK(check_irreducible({-8, 0, 0, 1}) == Irreducibility::Reducible);
    CHECK_THROWS_AS(NumberField::make({Generator{"r", {-8, 0, 0, 1}}}), InvalidInput);
    // x⁴ + 1 is reducible mod every prime but irreducible over ℚ: best effort says Unknown
    CHECK(check_irreducible({1, 0, 0, 0, 1}) == Irreducibility::Unknown);
}

TEST_CASE("finite field root finding") {
    QuadraticExtension f(31);
    std::mt19937_64 rng(1);
    // roots of y^6 + 1 over F_{31^2}: y^12 = 1 with y^6 = -1; 12 | 960 so six roots
    FPoly<QuadraticExtension> p(7, f.zero());
    p[0] = f.one();
    p[6] = f.one();
    auto roots = ff_roots(f, p, rng);
    CHECK(roots.size() == 6);
    std::set<Fp2> distinct(roots.begin(), roots.end());
    CHECK(distinct.size() == 6);
    for (auto r : roots) CHECK(f.is_zero(ff_eval(f, p, r)));
    // brute force over all of F_{31^2}
    int count = 0;
    for (std::uint64_t a = 0; a < 31; ++a)
        for (std::uint64_t b = 0; b < 31; ++b)
            if (f.is_zero(ff_eval(f, p, Fp2{a, b}))) ++count;
    CHECK(count == 6);
}
