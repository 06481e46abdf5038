#pragma once

#include "motivix/exact/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace motivix::exact {

// Univariate polynomial over ℚ, coefficients low degree first, no trailing zeros.
using QPoly = std::vector<Rat>;
// Monic integer polynomial, coefficients low degree first.
using ZPoly = std::vector<Int>;

void trim(QPoly& p);
QPoly poly_mod(QPoly p, const ZPoly& monic);

enum class Irreducibility { Irreducible, Reducible, Unknown };
// Best effort: a rational root proves reducibility; irreducibility modulo a
// small prime not dividing the discriminant proves irreducibility over ℚ.
Irreducibility check_irreducible(const ZPoly& m);

struct Generator {
    std::string name;
    ZPoly minpoly;  // monic, degree >= 1
};

// ℚ[t₁]/(m₁) ⊗ … ⊗ ℚ[t_k]/(m_k), a named product presentation. It is a field
// when the factors are linearly disjoint; callers pick such generators.
class NumberField {
public:
    explicit NumberField(std::vector<Generator> gens);

    static std::shared_ptr<const NumberField> rationals();
    static std::shared_ptr<const NumberField> make(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t dimension() const { return dim_; }
    int index_of(const std::string& name) const;  // -1 if absent

    // Mixed-radix exponent vector of basis element k.
    std::vector<int> exponents(std::size_t k) const;
    std::size_t index(const std::vector<int>& exps) const;

    // Multiplication table: product of basis elements a, b as coefficient vector.
    const std::vector<Rat>& product(std::size_t a, std::size_t b) const;

    std::string describe() const;

private:
    std::vector<Generator> gens_;
    std::vector<int> degrees_;
    std::size_t dim_ = 1;
    std::vector<std::vector<Rat>> table_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NfElem {
public:
    NfElem();  // zero in ℚ
    explicit NfElem(FieldPtr field, Rat c = 0);
    NfElem(FieldPtr field, std::vector<Rat> coeffs);
    static NfElem generator(FieldPtr field, const std::string& name);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    NfElem operator-() const;
    NfElem& operator+=(const NfElem& o);
    NfElem& operator-=(const NfElem& o);
    NfElem& operator*=(const NfElem& o);
    NfElem& operator*=(const Rat& r);
    NfElem inverse() const;  // InvalidInput on zero or a zero divisor
    NfElem pow(long e) const;

    friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
    friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
    friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
    friend NfElem operator*(NfElem a, const Rat& r) { return a *= r; }
    friend NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inverse(); }
    friend bool operator==(const NfElem& a, const NfElem& b);

    // e.g. "-2*cbrt4^2 + 1/3*eps"
    std::string str() const;

private:
    void unify(const NfElem& o);

    FieldPtr field_;
    std::vector<Rat> coeffs_;
};

// Smallest field containing both presentations' generators (by name).
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);
NfElem lift(const NfElem& x, const FieldPtr& to);

// p mod minpoly, as an element of ℚ[t]/(minpoly) with generator named "t".
NfElem nf_reduce(const QPoly& p, const ZPoly& minpoly);

// The constants used by the curve computations.
Generator gen_eps();    // t² − t + 1, a primitive 6th root of unity
Generator gen_cbrt4();  // t³ − 4
Generator gen_i();      // t² + 1
Generator known_generator(const std::string& name);  // ParseError if unknown

}  // namespace motivix::exact
