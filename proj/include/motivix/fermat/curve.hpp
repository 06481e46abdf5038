#pragma once

#include "motivix/fermat/poly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace motivix::fermat {

// Affine plane curve F(x, y) = 0. F must be monic-up-to-a-constant in y so
// that y^deg rewrites to lower powers; the canonical form of a function is
// its remainder of y-degree below deg_y(F).
struct PlaneCurve {
    std::string name;
    Poly2 F;
    // ω = dx / omega_den on this curve
    Poly2 omega_den;

    PlaneCurve(std::string name, Poly2 F, Poly2 omega_den);
    int reduction_degree() const { return F.degree_y(); }
    Poly2 reduce(const Poly2& p) const;
    bool vanishes(const Poly2& p) const { return reduce(p).is_zero(); }
};

// Curve from an equation in the given variables; ω = dx/F_y up to the
// constant that makes the y^(deg−1) coefficient of F_y one.
PlaneCurve plane_curve(const std::string& equation, const std::string& var1 = "x", const std::string& var2 = "y");

PlaneCurve fermat_sextic();    // x⁶ + y⁶ + 1, ω = dx/y⁵
PlaneCurve elliptic_target();  // v² − u³ + 1, written in x, y
PlaneCurve fermat_cubic();     // u³ + v³ + 1, written in x, y

// A differential P du + Q dv on the target, P and Q in the target variables.
struct TargetForm {
    std::string name;
    RatFun P, Q;
};
TargetForm du_over_v();
TargetForm du_over_v2();

struct CurveMorphism {
    std::string name;
    PlaneCurve source, target;
    RatFun u, v;
    TargetForm tau;

    // Throws InvalidInput unless target.F(u, v) vanishes on the source.
    CurveMorphism(std::string name, PlaneCurve source, PlaneCurve target, RatFun u, RatFun v, TargetForm tau);
};

CurveMorphism phi1();  // (−x², y³) to v² = u³ − 1
CurveMorphism phi2();  // (y⁴/(∛4·x²), (x⁶−1)/(2x³)) to v² = u³ − 1
CurveMorphism phi3();  // (x², y²) to u³ + v³ + 1 = 0
CurveMorphism phi_by_index(int k);  // 1, 2, 3

// f with φ*(τ) = f·ω on the source, reduced. ReductionError when no
// polynomial f of bounded x-degree satisfies f·den ≡ num.
Poly2 pullback(const CurveMorphism& phi, const TargetForm& tau);
Poly2 pullback(const CurveMorphism& phi);

// One-line permutation s of the projective coordinates:
// σ(X₀, X₁, X₂) = (X_{s0}, X_{s1}, X_{s2}), affine chart X₂ = 1.
using Perm3 = std::array<int, 3>;
int perm_sign(const Perm3& s);
std::vector<Perm3> all_perm3();      // lexicographic
std::vector<Perm3> g2_listed();      // id, (2,1,3), (3,2,1) read as one-line
std::vector<Perm3> g2_used();        // id, swap x y, swap y z
std::string perm3_str(const Perm3& s);

// Coefficient of σ*(f·ω) for f of total degree ≤ 3 (homogenized to 3).
Poly2 act_on_coefficient(const Perm3& s, const Poly2& f);
// φ∘σ as a morphism from the source.
CurveMorphism compose_with(const CurveMorphism& phi, const Perm3& s);

enum class Rep { V111, V210, V300, None };
const char* rep_name(Rep r);
Rep rep_membership(const Poly2& f);
// Rank of the coefficient vectors.
int form_rank(const std::vector<Poly2>& forms);

// ---- degree oracle ----

struct DegreeOptions {
    std::vector<std::uint64_t> primes;  // empty: search upward from min_prime
    std::uint64_t min_prime = 30;
    int prime_count = 3;
    int samples = 20;
    std::uint64_t seed = 1;
};

struct PrimeEstimate {
    std::uint64_t p = 0;
    long points = 0;  // affine source points where the map is defined
    long degree = 0;
};

struct DegreeReport {
    long degree = 0;
    std::vector<PrimeEstimate> per_prime;
};

// Largest fiber over sampled image points, agreed on by every good prime.
// OracleError when fewer than prime_count good primes are found or the
// estimates disagree.
DegreeReport degree(const CurveMorphism& phi, const DegreeOptions& opt = {});

// Good primes: p ≡ 1 mod 6, every generator has a root mod p, every
// coefficient reduces, and the leading y-coefficients of both curves survive.
bool good_prime(const CurveMorphism& phi, std::uint64_t p);

}  // namespace motivix::fermat
