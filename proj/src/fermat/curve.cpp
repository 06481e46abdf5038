#include "motivix/fermat/curve.hpp"

#include <algorithm>
#include <set>

namespace motivix::fermat {

namespace {

Poly2 px() { return Poly2::x(); }
Poly2 py() { return Poly2::y(); }
Poly2 one() { return Poly2::constant(Rat(1)); }

bool is_one(const Poly2& p) { return p == one(); }

}  // namespace

PlaneCurve::PlaneCurve(std::string n, Poly2 f, Poly2 od) : name(std::move(n)), F(std::move(f)), omega_den(std::move(od)) {
    if (F.is_constant()) throw InvalidInput("curve equation is constant");
    const int d = F.degree_y();
    if (d < 1) throw InvalidInput("curve equation has no y term");
    for (const auto& [m, c] : F.terms())
        if (m.second == d && m.first != 0)
            throw InvalidInput("leading y-coefficient of the curve equation must be constant");
}

Poly2 PlaneCurve::reduce(const Poly2& p) const {
    const int d = F.degree_y();
    const NfElem lead = F.coeff(0, d);
    // y^d ≡ tail
    Poly2 tail = (F - Poly2::monomial(lead, 0, d)) * (-lead.inverse());
    Poly2 r = p;
    while (r.degree_y() >= d) {
        const int top = r.degree_y();
        Poly2 high, low;
        for (const auto& [m, c] : r.terms()) {
            if (m.second == top)
                high += Poly2::monomial(c, m.first, m.second - d);
            else
                low += Poly2::monomial(c, m.first, m.second);
        }
        r = low + high * tail;
    }
    return r;
}

PlaneCurve plane_curve(const std::string& equation, const std::string& var1, const std::string& var2) {
    RatFun r = parse_ratfun(equation, var1, var2);
    if (!r.den.is_constant()) throw InvalidInput("curve equation must be a polynomial");
    Poly2 F = r.num * r.den.coeff(0, 0).inverse();
    if (F.degree_y() < 1) throw InvalidInput("curve equation has no " + var2 + " term");
    Poly2 Fy = F.dy();
    NfElem lead = Fy.coeff(0, F.degree_y() - 1);
    if (lead.is_zero()) throw InvalidInput("leading " + var2 + "-coefficient of the curve equation must be constant");
    return PlaneCurve(equation, F, Fy * lead.inverse());
}

PlaneCurve fermat_sextic() {
    return PlaneCurve("x^6 + y^6 + 1", px().pow(6) + py().pow(6) + one(), py().pow(5));
}

PlaneCurve elliptic_target() {
    // v² = u³ − 1, written in x, y; ω = du/v = dx/y
    return PlaneCurve("v^2 - u^3 + 1", py().pow(2) - px().pow(3) + one(), py());
}

PlaneCurve fermat_cubic() {
    return PlaneCurve("u^3 + v^3 + 1", px().pow(3) + py().pow(3) + one(), py().pow(2));
}

TargetForm du_over_v() { return {"du/v", parse_ratfun("1/v", "u", "v"), RatFun()}; }
TargetForm du_over_v2() { return {"du/v^2", parse_ratfun("1/v^2", "u", "v"), RatFun()}; }

CurveMorphism::CurveMorphism(std::string n, PlaneCurve src, PlaneCurve tgt, RatFun uu, RatFun vv, TargetForm t)
    : name(std::move(n)), source(std::move(src)), target(std::move(tgt)), u(std::move(uu)), v(std::move(vv)),
      tau(std::move(t)) {
    RatFun image = substitute(target.F, u, v);
    if (!source.vanishes(image.num))
        throw InvalidInput("morphism " + name + ": target equation does not vanish on the source");
    if (u.num.is_constant() && is_one(u.den) && v.num.is_constant() && is_one(v.den))
        throw InvalidInput("morphism " + name + " is constant");
}

CurveMorphism phi1() {
    return {"phi1", fermat_sextic(), elliptic_target(), parse_ratfun("-x^2"), parse_ratfun("y^3"), du_over_v()};
}

CurveMorphism phi2() {
    return {"phi2", fermat_sextic(), elliptic_target(), parse_ratfun("y^4/(cbrt4*x^2)"),
            parse_ratfun("(x^6-1)/(2*x^3)"), du_over_v()};
}

CurveMorphism phi3() {
    return {"phi3", fermat_sextic(), fermat_cubic(), parse_ratfun("x^2"), parse_ratfun("y^2"), du_over_v2()};
}

CurveMorphism phi_by_index(int k) {
    switch (k) {
        case 1: return phi1();
        case 2: return phi2();
        case 3: return phi3();
        default: throw InvalidInput("morphism index must be 1, 2 or 3");
    }
}

Poly2 pullback(const CurveMorphism& phi, const TargetForm& tau) {
    const PlaneCurve& C = phi.source;
    RatFun dydx(-C.F.dx(), C.F.dy());
    RatFun r;
    if (!tau.P.is_zero()) r = r + substitute(tau.P, phi.u, phi.v) * (phi.u.dx() + phi.u.dy() * dydx);
    if (!tau.Q.is_zero()) r = r + substitute(tau.Q, phi.u, phi.v) * (phi.v.dx() + phi.v.dy() * dydx);
    r = r * RatFun(C.omega_den);

    const Poly2 N = C.reduce(r.num), D = C.reduce(r.den);
    if (D.is_zero()) throw ReductionError("pullback denominator vanishes on the source curve");
    if (N.is_zero()) return Poly2();
    const int d = C.reduction_degree();
    const NfElem zero;

    for (int A : {3, 6, 12, 24}) {
        std::vector<Mono> unknowns;
        std::vector<Poly2> cols;
        std::set<Mono> rows_set;
        for (const auto& [m, c] : N.terms()) rows_set.insert(m);
        for (int i = 0; i <= A; ++i)
            for (int j = 0; j < d; ++j) {
                unknowns.push_back({i, j});
                cols.push_back(C.reduce(D * Poly2::monomial(NfElem(exact::NumberField::rationals(), 1), i, j)));
                for (const auto& [m, c] : cols.back().terms()) rows_set.insert(m);
            }
        std::vector<Mono> rows(rows_set.begin(), rows_set.end());
        NfMatrix a(rows.size(), std::vector<NfElem>(unknowns.size(), zero));
        std::vector<NfElem> b(rows.size(), zero);
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            b[r2] = N.coeff(rows[r2].first, rows[r2].second);
            for (std::size_t k = 0; k < cols.size(); ++k) a[r2][k] = cols[k].coeff(rows[r2].first, rows[r2].second);
        }
        if (auto sol = nf_solve(std::move(a), std::move(b))) {
            Poly2 f;
            for (std::size_t k = 0; k < unknowns.size(); ++k)
                f += Poly2::monomial((*sol)[k], unknowns[k].first, unknowns[k].second);
            return f;
        }
    }
    throw ReductionError("pullback of " + tau.name + " along " + phi.name + " is not a polynomial multiple of omega");
}

Poly2 pullback(const CurveMorphism& phi) { return pullback(phi, phi.tau); }

// ---- coordinate permutations ----

int perm_sign(const Perm3& s) {
    int inv = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (s[a] > s[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<Perm3> all_perm3() {
    std::vector<Perm3> out;
    Perm3 s{0, 1, 2};
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::vector<Perm3> g2_listed() { return {Perm3{0, 1, 2}, Perm3{1, 0, 2}, Perm3{2, 1, 0}}; }
std::vector<Perm3> g2_used() { return {Perm3{0, 1, 2}, Perm3{1, 0, 2}, Perm3{0, 2, 1}}; }

std::string perm3_str(const Perm3& s) {
    return "(" + std::to_string(s[0] + 1) + "," + std::to_string(s[1] + 1) + "," + std::to_string(s[2] + 1) + ")";
}

Poly2 act_on_coefficient(const Perm3& s, const Poly2& f) {
    if (f.total_degree() > 3) throw InvalidInput("coefficient of total degree above 3");
    Poly2 out;
    for (const auto& [m, c] : f.terms()) {
        int e[3] = {m.first, m.second, 3 - m.first - m.second};
        int ne[3] = {0, 0, 0};
        for (int k = 0; k < 3; ++k) ne[s[k]] += e[k];
        out += Poly2::monomial(c, ne[0], ne[1]);
    }
    if (perm_sign(s) < 0) out = -out;
    return out;
}

CurveMorphism compose_with(const CurveMorphism& phi, const Perm3& s) {
    const RatFun coords[3] = {RatFun(px()), RatFun(py()), RatFun(one())};
    RatFun a = coords[s[0]] / coords[s[2]];
    RatFun b = coords[s[1]] / coords[s[2]];
    if (!phi.source.vanishes(substitute(phi.source.F, a, b).num))
        throw InvalidInput("source curve is not stable under " + perm3_str(s));
    return {phi.name + "*" + perm3_str(s), phi.source, phi.target, substitute(phi.u, a, b), substitute(phi.v, a, b),
            phi.tau};
}

const char* rep_name(Rep r) {
    switch (r) {
        case Rep::V111: return "V111";
        case Rep::V210: return "V210";
        case Rep::V300: return "V300";
        case Rep::None: return "NONE";
    }
    return "?";
}

Rep rep_membership(const Poly2& f) {
    if (f.is_zero() || f.total_degree() > 3) return Rep::None;
    bool only111 = true, only300 = true, only210 = true;
    for (const auto& [m, c] : f.terms()) {
        int e[3] = {m.first, m.second, 3 - m.first - m.second};
        std::multiset<int> shape(e, e + 3);
        if (shape != std::multiset<int>{1, 1, 1}) only111 = false;
        if (shape != std::multiset<int>{0, 0, 3}) only300 = false;
        if (shape != std::multiset<int>{0, 1, 2}) only210 = false;
    }
    if (only111) return Rep::V111;
    if (only300) return Rep::V300;
    if (only210) return Rep::V210;
    return Rep::None;
}

int form_rank(const std::vector<Poly2>& forms) {
    std::set<Mono> support;
    for (const auto& f : forms)
        for (const auto& [m, c] : f.terms()) support.insert(m);
    NfMatrix a;
    for (const auto& f : forms) {
        std::vector<NfElem> row;
        for (const auto& m : support) row.push_back(f.coeff(m.first, m.second));
        a.push_back(std::move(row));
    }
    if (support.empty()) return 0;
    return nf_rank(std::move(a));
}

}  // namespace motivix::fermat
