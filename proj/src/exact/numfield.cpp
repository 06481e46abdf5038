#include "motivix/exact/numfield.hpp"

#include "motivix/errors.hpp"
#include "motivix/exact/finite_field.hpp"
#include "motivix/exact/matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace motivix::exact {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mod(QPoly p, const ZPoly& monic) {
    trim(p);
    const std::size_t dm = monic.size() - 1;
    while (p.size() > dm) {
        Rat c = p.back();
        const std::size_t shift = p.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= c * Rat(monic[i]);
        trim(p);
    }
    return p;
}

namespace {

bool has_integer_root(const ZPoly& m) {
    if (m[0] == 0) return true;
    Int c = abs(m[0]);
    auto eval_zero = [&](const Int& x) {
        Int acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = acc * x + m[i];
        return acc == 0;
    };
    if (c > 1000000) return false;  // best effort only
    for (Int k = 1; k <= c; ++k) {
        if (c % k != 0) continue;
        if (eval_zero(k) || eval_zero(-k)) return true;
    }
    return false;
}

bool irreducible_mod(const ZPoly& m, std::uint64_t p) {
    PrimeField f(p);
    FPoly<PrimeField> poly;
    for (const auto& c : m) poly.push_back(f.from_rat(Rat(c)).value());
    ff_trim(f, poly);
    const std::size_t deg = m.size() - 1;
    if (poly.size() != deg + 1) return false;
    FPoly<PrimeField> deriv;
    for (std::size_t i = 1; i < poly.size(); ++i) deriv.push_back(f.mul(f.from_int(static_cast<long long>(i)), poly[i]));
    ff_trim(f, deriv);
    if (deriv.empty() || ff_gcd(f, poly, deriv).size() > 1) return false;
    FPoly<PrimeField> x{0, 1};
    FPoly<PrimeField> xpk = x;
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        xpk = ff_powmod(f, xpk, Int(static_cast<unsigned long>(p)), poly);
        if (ff_gcd(f, poly, ff_sub(f, xpk, x)).size() > 1) return false;
    }
    return true;
}

}  // namespace

Irreducibility check_irreducible(const ZPoly& m) {
    if (m.size() < 2 || m.back() != 1) throw InvalidInput("minimal polynomial must be monic of degree >= 1");
    if (m.size() == 2) return Irreducibility::Irreducible;
    if (has_integer_root(m)) return Irreducibility::Reducible;
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        if (irreducible_mod(m, p)) return Irreducibility::Irreducible;
    return Irreducibility::Unknown;
}

NumberField::NumberField(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.minpoly.size() < 2 || g.minpoly.back() != 1)
            throw InvalidInput("generator " + g.name + " needs a monic minimal polynomial");
        if (check_irreducible(g.minpoly) == Irreducibility::Reducible)
            throw InvalidInput("minimal polynomial of " + g.name + " is reducible");
        degrees_.push_back(static_cast<int>(g.minpoly.size() - 1));
        dim_ *= g.minpoly.size() - 1;
    }
    // Products of basis monomials: multiply per generator, reduce each factor.
    table_.assign(dim_ * dim_, std::vector<Rat>(dim_, Rat(0)));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) {
            auto ea = exponents(a), eb = exponents(b);
            std::vector<std::pair<std::vector<int>, Rat>> terms{{std::vector<int>(gens_.size(), 0), Rat(1)}};
            for (std::size_t k = 0; k < gens_.size(); ++k) {
                QPoly mono(ea[k] + eb[k] + 1, Rat(0));
                mono.back() = 1;
                QPoly red = poly_mod(mono, gens_[k].minpoly);
                std::vector<std::pair<std::vector<int>, Rat>> next;
                for (const auto& [e, c] : terms)
                    for (std::size_t j = 0; j < red.size(); ++j) {
                        if (red[j] == 0) continue;
                        auto e2 = e;
                        e2[k] = static_cast<int>(j);
                        next.emplace_back(e2, c * red[j]);
                    }
                terms = std::move(next);
            }
            auto& out = table_[a * dim_ + b];
            for (const auto& [e, c] : terms) out[index(e)] += c;
        }
}

std::vector<int> NumberField::exponents(std::size_t k) const {
    std::vector<int> e(gens_.size(), 0);
    for (std::size_t i = gens_.size(); i-- > 0;) {
        e[i] = static_cast<int>(k % degrees_[i]);
        k /= degrees_[i];
    }
    return e;
}

std::size_t NumberField::index(const std::vector<int>& exps) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) k = k * degrees_[i] + exps[i];
    return k;
}

const std::vector<Rat>& NumberField::product(std::size_t a, std::size_t b) const {
    return table_[a * dim_ + b];
}

int NumberField::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::string NumberField::describe() const {
    if (gens_.empty()) return "Q";
    std::string s = "Q(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].name;
    return s + ")";
}

FieldPtr NumberField::make(std::vector<Generator> gens) {
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) { return a.name < b.name; });
    std::string key;
    for (const auto& g : gens) {
        key += g.name + ":";
        for (const auto& c : g.minpoly) key += c.get_str() + ",";
        key += ";";
    }
    static std::mutex mu;
    static std::map<std::string, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const NumberField>(std::move(gens));
    cache.emplace(key, f);
    return f;
}

FieldPtr NumberField::rationals() {
    static const FieldPtr q = make({});
    return q;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    std::vector<Generator> gens = a->generators();
    for (const auto& g : b->generators()) {
        int k = a->index_of(g.name);
        if (k < 0) {
            gens.push_back(g);
        } else if (a->generators()[k].minpoly != g.minpoly) {
            throw InvalidInput("generator " + g.name + " used with two different minimal polynomials");
        }
    }
    return NumberField::make(std::move(gens));
}

NfElem lift(const NfElem& x, const FieldPtr& to) {
    if (x.field() == to) return x;
    const auto& from = *x.field();
    std::vector<int> map;
    for (const auto& g : from.generators()) {
        int k = to->index_of(g.name);
        if (k < 0) throw InvalidInput("cannot lift: target field lacks generator " + g.name);
        map.push_back(k);
    }
    std::vector<Rat> out(to->dimension(), Rat(0));
    for (std::size_t k = 0; k < from.dimension(); ++k) {
        if (x.coeffs()[k] == 0) continue;
        auto e = from.exponents(k);
        std::vector<int> e2(to->generators().size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e2[map[i]] = e[i];
        out[to->index(e2)] += x.coeffs()[k];
    }
    return NfElem(to, std::move(out));
}

NfElem::NfElem() : NfElem(NumberField::rationals(), Rat(0)) {}

NfElem::NfElem(FieldPtr field, Rat c) : field_(std::move(field)), coeffs_(field_->dimension(), Rat(0)) {
    coeffs_[0] = std::move(c);
}

NfElem::NfElem(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->dimension()) throw ShapeError("coefficient vector length differs from field degree");
}

NfElem NfElem::generator(FieldPtr field, const std::string& name) {
    int k = field->index_of(name);
    if (k < 0) throw InvalidInput("field lacks generator " + name);
    std::vector<int> e(field->generators().size(), 0);
    NfElem x(field, Rat(0));
    if (field->generators()[k].minpoly.size() == 2) {
        // degree-1 generator is the rational root of t + c
        x.coeffs_[0] = -Rat(field->generators()[k].minpoly[0]);
        return x;
    }
    e[k] = 1;
    x.coeffs_[0] = 0;
    x.coeffs_[field->index(e)] = 1;
    return x;
}

bool NfElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool NfElem::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat NfElem::rational_value() const {
    if (!is_rational()) throw InvalidInput("element is not rational");
    return coeffs_[0];
}

void NfElem::unify(const NfElem& o) {
    if (field_ == o.field_) return;
    FieldPtr j = join_fields(field_, o.field_);
    if (j != field_) *this = lift(*this, j);
}

NfElem NfElem::operator-() const {
    NfElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NfElem& NfElem::operator+=(const NfElem& o) {
    unify(o);
    const NfElem& b = o.field_ == field_ ? o : lift(o, field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
    unify(o);
    const NfElem& b = o.field_ == field_ ? o : lift(o, field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
    unify(o);
    NfElem lifted = o.field_ == field_ ? NfElem() : lift(o, field_);
    const NfElem& b = o.field_ == field_ ? o : lifted;
    const std::size_t n = coeffs_.size();
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            Rat c = coeffs_[i] * b.coeffs_[j];
            const auto& prod = field_->product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (prod[k] != 0) out[k] += c * prod[k];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

NfElem& NfElem::operator*=(const Rat& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

NfElem NfElem::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    if (is_rational()) return NfElem(field_, 1 / coeffs_[0]);
    // Solve x·this = 1: the multiplication-by-this matrix acting on row vectors.
    const std::size_t n = coeffs_.size();
    RatMatrix m = rat_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        NfElem basis(field_, e);
        basis *= *this;
        for (std::size_t k = 0; k < n; ++k) m(i, k) = basis.coeffs_[k];
    }
    std::vector<Rat> one(n, Rat(0));
    one[0] = 1;
    auto x = solve_left(m, one);
    if (!x) throw InvalidInput("element is a zero divisor in the product presentation");
    return NfElem(field_, *x);
}

NfElem NfElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NfElem result(field_, Rat(1)), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const NfElem& a, const NfElem& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    return (a - b).is_zero();
}

std::string NfElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        auto e = field_->exponents(k);
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += field_->generators()[i].name;
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << mono;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

NfElem nf_reduce(const QPoly& p, const ZPoly& minpoly) {
    if (minpoly.size() < 2 || minpoly.back() != 1) throw InvalidInput("minimal polynomial must be monic of degree >= 1");
    FieldPtr f = NumberField::make({Generator{"t", minpoly}});
    QPoly r = poly_mod(p, minpoly);
    std::vector<Rat> coeffs(minpoly.size() - 1, Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) coeffs[i] = r[i];
    return NfElem(f, coeffs);
}

Generator gen_eps() { return {"eps", {Int(1), Int(-1), Int(1)}}; }
Generator gen_cbrt4() { return {"cbrt4", {Int(-4), Int(0), Int(0), Int(1)}}; }
Generator gen_i() { return {"i", {Int(1), Int(0), Int(1)}}; }

Generator known_generator(const std::string& name) {
    if (name == "eps") return gen_eps();
    if (name == "cbrt4") return gen_cbrt4();
    if (name == "i") return gen_i();
    throw ParseError("unknown constant '" + name + "'");
}

}  // namespace motivix::exact
