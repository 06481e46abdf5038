#pragma once

#include "motivix/errors.hpp"
#include "motivix/exact/numfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivix::fermat {

using exact::FieldPtr;
using exact::Int;
using exact::NfElem;
using exact::Rat;

// (deg x, deg y)
using Mono = std::pair<int, int>;

// Bivariate polynomial with number-field coefficients; zero terms never stored.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 constant(const NfElem& c);
    static Poly2 constant(const Rat& c);
    static Poly2 monomial(const NfElem& c, int i, int j);
    static Poly2 x() { return monomial(NfElem(exact::NumberField::rationals(), 1), 1, 0); }
    static Poly2 y() { return monomial(NfElem(exact::NumberField::rationals(), 1), 0, 1); }

    const std::map<Mono, NfElem>& terms() const { return terms_; }
    NfElem coeff(int i, int j) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree_x() const;  // -1 for zero
    int degree_y() const;
    int total_degree() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o);
    Poly2& operator*=(const NfElem& c);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
    friend Poly2 operator*(Poly2 a, const NfElem& c) { return a *= c; }
    friend bool operator==(const Poly2& a, const Poly2& b);
    Poly2 pow(int e) const;

    Poly2 dx() const;
    Poly2 dy() const;
    // Divides out x^a·y^b, the largest monomial factor; returns (a, b).
    Mono strip_monomial();

    // e.g. "-2*x*y^2", "(-cbrt4^2)*y^3"; "0" for zero.
    std::string str() const;

private:
    void add_term(const Mono& m, const NfElem& c);
    std::map<Mono, NfElem> terms_;
};

// num/den, den nonzero. Not reduced beyond monomial factors.
struct RatFun {
    Poly2 num, den = Poly2::constant(Rat(1));

    RatFun() = default;
    RatFun(Poly2 n) : num(std::move(n)) {}
    RatFun(Poly2 n, Poly2 d);

    bool is_zero() const { return num.is_zero(); }
    RatFun operator-() const { return {-num, den}; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun pow(int e) const;  // negative e inverts
    RatFun dx() const;
    RatFun dy() const;
    std::string str() const;
};

// P(a, b) for rational functions a, b.
RatFun substitute(const Poly2& p, const RatFun& a, const RatFun& b);
RatFun substitute(const RatFun& r, const RatFun& a, const RatFun& b);

// Expression grammar: integers, the constants eps, cbrt4, i, the two
// variable names (x and y by default, or e.g. u and v), + - * / ^ and
// parentheses. Exponents are integers, possibly negative. ParseError on
// anything else.
RatFun parse_ratfun(const std::string& text, const std::string& var1 = "x", const std::string& var2 = "y");

// Linear algebra over the coefficient field. Rows are equations.
using NfMatrix = std::vector<std::vector<NfElem>>;
int nf_rank(NfMatrix a);
std::optional<std::vector<NfElem>> nf_solve(NfMatrix a, std::vector<NfElem> b);

}  // namespace motivix::fermat
