#pragma once

#include "motivix/exact/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace motivix::exact {

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

class PrimeField {
public:
    using Elem = std::uint64_t;
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t size() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a ? p_ - a : 0; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((unsigned __int128)a * b % p_); }
    Elem inv(Elem a) const;
    Elem from_int(long long v) const;
    // nullopt when p divides the denominator.
    std::optional<Elem> from_rat(const Rat& r) const;
    Elem random(std::mt19937_64& rng) const { return rng() % p_; }
    bool equal(Elem a, Elem b) const { return a == b; }

private:
    std::uint64_t p_;
};

// 𝔽_{p²} = 𝔽_p[s]/(s² − r) for a fixed non-residue r.
struct Fp2 {
    std::uint64_t a = 0, b = 0;
    friend bool operator==(const Fp2&, const Fp2&) = default;
    friend auto operator<=>(const Fp2&, const Fp2&) = default;
};

class QuadraticExtension {
public:
    using Elem = Fp2;
    explicit QuadraticExtension(std::uint64_t p);

    const PrimeField& base() const { return fp_; }
    std::uint64_t characteristic() const { return fp_.characteristic(); }
    std::uint64_t size() const { return fp_.characteristic() * fp_.characteristic(); }
    Elem zero() const { return {}; }
    Elem one() const { return {1, 0}; }
    bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
    Elem add(const Elem& x, const Elem& y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
    Elem sub(const Elem& x, const Elem& y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
    Elem neg(const Elem& x) const { return {fp_.neg(x.a), fp_.neg(x.b)}; }
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem from_base(std::uint64_t v) const { return {v, 0}; }
    Elem random(std::mt19937_64& rng) const { return {fp_.random(rng), fp_.random(rng)}; }
    bool equal(const Elem& x, const Elem& y) const { return x == y; }

private:
    PrimeField fp_;
    std::uint64_t nonres_;
};

// Dense polynomials over a finite field F, low degree first, trimmed.
template <class F>
using FPoly = std::vector<typename F::Elem>;

template <class F>
void ff_trim(const F& f, FPoly<F>& p) {
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
FPoly<F> ff_mul(const F& f, const FPoly<F>& a, const FPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    FPoly<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    ff_trim(f, r);
    return r;
}

template <class F>
FPoly<F> ff_sub(const F& f, FPoly<F> a, const FPoly<F>& b) {
    if (a.size() < b.size()) a.resize(b.size(), f.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    ff_trim(f, a);
    return a;
}

// Remainder of a modulo a nonzero m.
template <class F>
FPoly<F> ff_mod(const F& f, FPoly<F> a, const FPoly<F>& m) {
    ff_trim(f, a);
    const std::size_t dm = m.size() - 1;
    auto lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        auto c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        ff_trim(f, a);
    }
    return a;
}

template <class F>
FPoly<F> ff_monic(const F& f, FPoly<F> a) {
    if (a.empty()) return a;
    auto li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
    return a;
}

template <class F>
FPoly<F> ff_gcd(const F& f, FPoly<F> a, FPoly<F> b) {
    ff_trim(f, a);
    ff_trim(f, b);
    while (!b.empty()) {
        auto r = ff_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return ff_monic(f, a);
}

// base^e mod m.
template <class F>
FPoly<F> ff_powmod(const F& f, FPoly<F> base, Int e, const FPoly<F>& m) {
    FPoly<F> result{f.one()};
    result = ff_mod(f, result, m);
    base = ff_mod(f, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = ff_mod(f, ff_mul(f, result, base), m);
        e >>= 1;
        if (e > 0) base = ff_mod(f, ff_mul(f, base, base), m);
    }
    return result;
}

template <class F>
typename F::Elem ff_eval(const F& f, const FPoly<F>& p, const typename F::Elem& x) {
    auto acc = f.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

// Distinct roots in F of p (p nonzero), found by gcd with x^q − x and
// equal-degree splitting. Deterministic for a fixed rng seed.
template <class F>
std::vector<typename F::Elem> ff_roots(const F& f, const FPoly<F>& p, std::mt19937_64& rng) {
    std::vector<typename F::Elem> roots;
    FPoly<F> poly = p;
    ff_trim(f, poly);
    if (poly.size() <= 1) return roots;
    const Int q = Int(static_cast<unsigned long>(f.size()));
    FPoly<F> x{f.zero(), f.one()};
    FPoly<F> xq = ff_powmod(f, x, q, poly);
    FPoly<F> g = ff_gcd(f, poly, ff_sub(f, xq, x));
    std::vector<FPoly<F>> stack{g};
    const Int half = (q - 1) / 2;
    while (!stack.empty()) {
        FPoly<F> h = std::move(stack.back());
        stack.pop_back();
        if (h.size() <= 1) continue;
        if (h.size() == 2) {
            roots.push_back(f.neg(f.mul(h[0], f.inv(h[1]))));
            continue;
        }
        for (;;) {
            FPoly<F> shifted{f.random(rng), f.one()};
            FPoly<F> t = ff_powmod(f, shifted, half, h);
            t = ff_sub(f, t, FPoly<F>{f.one()});
            FPoly<F> d = ff_gcd(f, h, t);
            if (d.size() > 1 && d.size() < h.size()) {
                FPoly<F> rest = h;
                // exact division h / d
                FPoly<F> quot(h.size() - d.size() + 1, f.zero());
                for (std::size_t k = quot.size(); k-- > 0;) {
                    quot[k] = rest[k + d.size() - 1];
                    for (std::size_t i = 0; i < d.size(); ++i)
                        rest[k + i] = f.sub(rest[k + i], f.mul(quot[k], d[i]));
                }
                stack.push_back(d);
                stack.push_back(quot);
                break;
            }
        }
    }
    return roots;
}

}  // namespace motivix::exact
