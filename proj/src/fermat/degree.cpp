#include "motivix/exact/finite_field.hpp"
#include "motivix/fermat/curve.hpp"

#include <map>
#include <optional>
#include <random>

namespace motivix::fermat {

namespace {

using exact::Fp2;
using exact::QuadraticExtension;

// Reduction of the coefficient field modulo p, each generator sent to its
// least root mod p.
class Reducer {
public:
    Reducer(std::uint64_t p) : fp_(p), fq_(p) {}

    const QuadraticExtension& fq() const { return fq_; }

    std::optional<Fp2> reduce(const NfElem& c) {
        const auto& field = *c.field();
        std::vector<std::uint64_t> roots;
        for (const auto& g : field.generators()) {
            auto r = root_of(g);
            if (!r) return std::nullopt;
            roots.push_back(*r);
        }
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
            if (c.coeffs()[k] == 0) continue;
            auto q = fp_.from_rat(c.coeffs()[k]);
            if (!q) return std::nullopt;
            std::uint64_t term = *q;
            auto e = field.exponents(k);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int t = 0; t < e[i]; ++t) term = fp_.mul(term, roots[i]);
            acc = fp_.add(acc, term);
        }
        return fq_.from_base(acc);
    }

private:
    std::optional<std::uint64_t> root_of(const exact::Generator& g) {
        auto it = roots_.find(g.name);
        if (it != roots_.end()) return it->second;
        std::optional<std::uint64_t> found;
        const std::uint64_t p = fp_.characteristic();
        for (std::uint64_t t = 0; t < p && !found; ++t) {
            std::uint64_t v = 0;
            for (std::size_t i = g.minpoly.size(); i-- > 0;) {
                Rat c(g.minpoly[i]);
                v = fp_.add(fp_.mul(v, t), *fp_.from_rat(c));
            }
            if (v == 0) found = t;
        }
        roots_[g.name] = found;
        return found;
    }

    exact::PrimeField fp_;
    QuadraticExtension fq_;
    std::map<std::string, std::optional<std::uint64_t>> roots_;
};

struct FPoly2 {
    struct Term {
        int i, j;
        Fp2 c;
    };
    std::vector<Term> terms;
    int dx = 0, dy = 0;
};

std::optional<FPoly2> reduce_poly(Reducer& red, const Poly2& p) {
    FPoly2 out;
    for (const auto& [m, c] : p.terms()) {
        auto r = red.reduce(c);
        if (!r) return std::nullopt;
        if (red.fq().is_zero(*r)) continue;
        out.terms.push_back({m.first, m.second, *r});
        out.dx = std::max(out.dx, m.first);
        out.dy = std::max(out.dy, m.second);
    }
    return out;
}

Fp2 eval(const QuadraticExtension& f, const FPoly2& p, const std::vector<Fp2>& xp, const std::vector<Fp2>& yp) {
    Fp2 acc = f.zero();
    for (const auto& t : p.terms) acc = f.add(acc, f.mul(t.c, f.mul(xp[t.i], yp[t.j])));
    return acc;
}

std::vector<Fp2> powers(const QuadraticExtension& f, const Fp2& a, int n) {
    std::vector<Fp2> out(n + 1, f.one());
    for (int k = 1; k <= n; ++k) out[k] = f.mul(out[k - 1], a);
    return out;
}

struct Reduced {
    FPoly2 F, un, ud, vn, vd;
    int lead_deg = 0;
};

std::optional<Reduced> reduce_morphism(const CurveMorphism& phi, std::uint64_t p) {
    if (!exact::is_prime(p) || p % 6 != 1) return std::nullopt;
    Reducer red(p);
    Reduced r;
    auto F = reduce_poly(red, phi.source.F);
    auto un = reduce_poly(red, phi.u.num), ud = reduce_poly(red, phi.u.den);
    auto vn = reduce_poly(red, phi.v.num), vd = reduce_poly(red, phi.v.den);
    auto T = reduce_poly(red, phi.target.F);
    if (!F || !un || !ud || !vn || !vd || !T) return std::nullopt;
    r.lead_deg = phi.source.reduction_degree();
    // leading y-coefficients must survive
    auto lead_src = red.reduce(phi.source.F.coeff(0, r.lead_deg));
    auto lead_tgt = red.reduce(phi.target.F.coeff(0, phi.target.reduction_degree()));
    if (!lead_src || !lead_tgt || red.fq().is_zero(*lead_src) || red.fq().is_zero(*lead_tgt)) return std::nullopt;
    if (ud->terms.empty() || vd->terms.empty()) return std::nullopt;
    r.F = *F;
    r.un = *un;
    r.ud = *ud;
    r.vn = *vn;
    r.vd = *vd;
    return r;
}

}  // namespace

bool good_prime(const CurveMorphism& phi, std::uint64_t p) { return reduce_morphism(phi, p).has_value(); }

namespace {

std::optional<PrimeEstimate> estimate_at(const CurveMorphism& phi, std::uint64_t p, const DegreeOptions& opt) {
    auto red = reduce_morphism(phi, p);
    if (!red) return std::nullopt;
    QuadraticExtension fq(p);
    std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + p);
    const int dy = red->lead_deg;
    const int mx = std::max({red->F.dx, red->un.dx, red->ud.dx, red->vn.dx, red->vd.dx});
    const int my = std::max({dy, red->un.dy, red->ud.dy, red->vn.dy, red->vd.dy});

    std::map<std::pair<Fp2, Fp2>, long> fibers;
    std::vector<std::pair<Fp2, Fp2>> images;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2 x{a, b};
            auto xp = powers(fq, x, mx);
            exact::FPoly<QuadraticExtension> fy(dy + 1, fq.zero());
            for (const auto& t : red->F.terms) fy[t.j] = fq.add(fy[t.j], fq.mul(t.c, xp[t.i]));
            for (const Fp2& y : exact::ff_roots(fq, fy, rng)) {
                auto yp = powers(fq, y, my);
                Fp2 ud = eval(fq, red->ud, xp, yp), vd = eval(fq, red->vd, xp, yp);
                if (fq.is_zero(ud) || fq.is_zero(vd)) continue;
                Fp2 u = fq.mul(eval(fq, red->un, xp, yp), fq.inv(ud));
                Fp2 v = fq.mul(eval(fq, red->vn, xp, yp), fq.inv(vd));
                ++fibers[{u, v}];
                images.push_back({u, v});
            }
        }
    if (images.empty()) return std::nullopt;
    PrimeEstimate est;
    est.p = p;
    est.points = static_cast<long>(images.size());
    std::uniform_int_distribution<std::size_t> pick(0, images.size() - 1);
    for (int k = 0; k < opt.samples; ++k) est.degree = std::max(est.degree, fibers[images[pick(rng)]]);
    return est;
}

}  // namespace

DegreeReport degree(const CurveMorphism& phi, const DegreeOptions& opt) {
    DegreeReport rep;
    auto consider = [&](std::uint64_t p) {
        if (auto e = estimate_at(phi, p, opt)) rep.per_prime.push_back(*e);
    };
    if (!opt.primes.empty()) {
        for (auto p : opt.primes) consider(p);
    } else {
        for (std::uint64_t p = opt.min_prime; static_cast<int>(rep.per_prime.size()) < opt.prime_count && p < 2000; ++p)
            consider(p);
    }
    if (static_cast<int>(rep.per_prime.size()) < opt.prime_count)
        throw OracleError("degree of " + phi.name + ": only " + std::to_string(rep.per_prime.size()) +
                          " good primes found");
    rep.degree = rep.per_prime.front().degree;
    for (const auto& e : rep.per_prime)
        if (e.degree != rep.degree)
            throw OracleError("degree of " + phi.name + " differs between primes " +
                              std::to_string(rep.per_prime.front().p) + " and " + std::to_string(e.p));
    return rep;
}

}  // namespace motivix::fermat
