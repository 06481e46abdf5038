#include "motivix/cmlat/model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace motivix::cmlat {

using exact::is_integer;
using exact::rat_matrix;

int popcount(Subset s) { return std::popcount(s); }

std::string subset_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if (contains(s, i)) {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

Permutation identity_perm(int g) {
    Permutation p(g);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation transposition(int g, int a, int b) {
    Permutation p = identity_perm(g);
    std::swap(p[a], p[b]);
    return p;
}

Permutation inverse(const Permutation& s) {
    Permutation inv(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) inv[s[i]] = static_cast<int>(i);
    return inv;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    Permutation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

bool is_permutation(const Permutation& s) {
    std::vector<bool> seen(s.size(), false);
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(s.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int perm_order(const Permutation& s) {
    Permutation p = s, id = identity_perm(static_cast<int>(s.size()));
    int k = 1;
    while (p != id) {
        p = compose(s, p);
        ++k;
    }
    return k;
}

std::string perm_str(const Permutation& s) {
    std::vector<bool> seen(s.size(), false);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i] || s[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : " ") + std::to_string(j + 1);
            first = false;
            j = s[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

Subset CellSet::diagonal() const {
    Subset s = 0;
    for (int i = 0; i < g; ++i)
        if (has(i, i)) s |= singleton(i);
    return s;
}

// ---------------------------------------------------------------------------

const ZLattice& AbelianModel::lattice() const {
    if (!lattice_) throw UnsupportedQuery("axiomatic model has no explicit lattice");
    return *lattice_;
}

EndoQ AbelianModel::zero() const { return exact::quad_matrix(g(), g(), d()); }
EndoQ AbelianModel::identity() const { return exact::quad_identity(g(), d()); }

EndoQ AbelianModel::idempotent(Subset k) const {
    EndoQ e = zero();
    for (int i = 0; i < g(); ++i)
        if (contains(k, i)) e(i, i) = QuadInt(d(), 1);
    return e;
}

EndoQ AbelianModel::unit(int r, int c) const {
    EndoQ e = zero();
    e(r, c) = QuadInt(d(), 1);
    return e;
}

RatMatrix AbelianModel::transport(const EndoQ& x) const {
    const ZLattice& l = lattice();
    RatMatrix r = exact::realify(x);
    return l.basis() * r.transposed() * l.basis_inverse();
}

namespace {

bool integer_matrix(const RatMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Rat& v) { return is_integer(v); });
}

Int denominator_lcm(const RatMatrix& m) { return exact::common_denominator(m.data()); }

}  // namespace

std::optional<Int> AbelianModel::known_exponent(Subset k) const {
    const Subset all = full_set(g());
    if (k == 0 || k == all) return Int(1);
    if (popcount(k) == 1) return atoms_[std::countr_zero(k)];
    // m·e_K integral iff m·e_{I∖K} integral, since m·id is integral
    if (popcount(all & ~k) == 1) return atoms_[std::countr_zero(all & ~k)];
    return std::nullopt;
}

Int AbelianModel::exponent(Subset k) const {
    if (k & ~full_set(g())) throw InvalidInput("subset outside the index set");
    if (mode() == Mode::Axiomatic) {
        auto n = known_exponent(k);
        if (!n) throw UnsupportedQuery("axiomatic model: exponent of non-atomic subset " + subset_str(k) + " is not derivable");
        return *n;
    }
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->exponents.find(k);
        if (it != memo_->exponents.end()) return it->second;
    }
    RatMatrix t = rat_matrix(2 * g(), 2 * g());
    for (int i = 0; i < g(); ++i)
        if (contains(k, i)) t += atom_transport_[i];
    Int n = denominator_lcm(t);
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->exponents.emplace(k, n);
    return n;
}

bool AbelianModel::is_integral(const EndoQ& x) const {
    if (x.rows() != static_cast<std::size_t>(g()) || x.cols() != static_cast<std::size_t>(g()))
        throw ShapeError("endomorphism size differs from g");
    if (mode() == Mode::Axiomatic) return axiomatic_integral(x);
    return integer_matrix(transport(x));
}

bool AbelianModel::axiomatic_integral(const EndoQ& x) const {
    // Only ℚ-combinations of the e_K are supported: diagonal rational matrices.
    std::map<Rat, Subset> blocks;
    for (int r = 0; r < g(); ++r)
        for (int c = 0; c < g(); ++c) {
            const QuadInt& z = x(r, c);
            if (r != c && !z.is_zero()) throw UnsupportedQuery("axiomatic model: query outside the span of the e_K");
            if (r == c) {
                if (!z.is_rational()) throw UnsupportedQuery("axiomatic model: query outside the span of the e_K");
                blocks[z.re()] |= singleton(r);
            }
        }
    // Eigenvalues of an integral endomorphism are algebraic integers.
    for (const auto& [c, k] : blocks)
        if (!is_integer(c)) return false;
    if (blocks.size() == 1) return true;

    // Sufficient: after shifting by an integer multiple of id, every block
    // c·e_K has n_K | c.
    for (const auto& [shift, unused] : blocks) {
        bool ok = true;
        for (const auto& [c, k] : blocks) {
            Int coeff = Rat(c - shift).get_num();
            if (coeff == 0) continue;
            auto n = known_exponent(k);
            if (!n || coeff % *n != 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }

    // Necessary: Π_{l≠j}(x − c_l) = L_j·e_{K_j} is integral, so n_{K_j} | L_j.
    const Int floor = hypothesis_floor().value_or(Int(1));
    for (const auto& [cj, kj] : blocks) {
        Int lj = 1;
        for (const auto& [cl, kl] : blocks)
            if (kl != kj) lj *= Rat(cj - cl).get_num();
        auto n = known_exponent(kj);
        if (n) {
            if (lj % *n != 0) return false;
        } else if (abs(lj) < floor) {
            return false;
        }
    }
    throw UnsupportedQuery("axiomatic model: integrality of this e_K combination is not decided by the divisibility rule");
}

std::optional<Int> AbelianModel::hypothesis_floor() const {
    if (g() < 2) return std::nullopt;
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        if (memo_->floor) return *memo_->floor;
    }
    Int best = *std::min_element(atoms_.begin(), atoms_.end());
    if (mode() == Mode::Lattice) {
        if (g() > 20) throw UnsupportedQuery("lattice model too large for a subset scan");
        const Subset all = full_set(g());
        for (Subset k = 1; k < all; ++k) best = std::min(best, exponent(k));
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->floor = std::optional<Int>(best);
    return best;
}

// ---------------------------------------------------------------------------

AbelianModel build_model(const ModelSpec& spec) {
    if (!exact::is_squarefree(spec.d)) throw InvalidInput("d must be a positive squarefree integer");
    if (spec.g < 1 || spec.g > 63) throw InvalidInput("g must lie in 1..63");
    AbelianModel m;
    m.spec_ = spec;
    const int g = spec.g;
    const long d = spec.d;

    if (spec.mode == Mode::Axiomatic) {
        if (spec.exponents.size() != static_cast<std::size_t>(g))
            throw InvalidInput("axiomatic model needs one exponent per atom");
        for (const auto& n : spec.exponents)
            if (n < 1) throw InvalidInput("atom exponents must be >= 1");
        m.atoms_ = spec.exponents;
        return m;
    }

    if (spec.order == Order::Maximal && d % 4 != 3)
        throw InvalidInput("the maximal order ℤ[(1+√−d)/2] requires d ≡ 3 mod 4");
    const QuadInt omega = spec.order == Order::Maximal ? QuadInt(d, exact::make_rat(1, 2), exact::make_rat(1, 2))
                                                       : QuadInt(d, 0, 1);
    std::vector<std::vector<Rat>> gens;
    for (int i = 0; i < g; ++i) {
        std::vector<QuadInt> v(g, QuadInt(d));
        v[i] = QuadInt(d, 1);
        gens.push_back(exact::realify(v));
        v[i] = omega;
        gens.push_back(exact::realify(v));
    }
    for (const auto& glue : spec.glue) {
        if (glue.size() != static_cast<std::size_t>(g)) throw LatticeError("glue vector length differs from g");
        std::vector<QuadInt> v, w;
        for (const auto& z : glue) {
            if (z.d() != d && !z.is_zero()) throw LatticeError("glue vector lies outside ℚ(√−d)^g");
            QuadInt zz(d, z.re(), z.im());
            v.push_back(zz);
            w.push_back(omega * zz);
        }
        gens.push_back(exact::realify(v));
        gens.push_back(exact::realify(w));
    }
    try {
        m.lattice_ = std::make_shared<const ZLattice>(ZLattice::from_generators(rat_matrix(gens)));
    } catch (const RankError& e) {
        throw LatticeError(std::string("lattice closure failed: ") + e.what());
    }
    for (int i = 0; i < g; ++i) m.atom_transport_.push_back(m.transport(m.idempotent(singleton(i))));
    if (!m.is_integral(m.identity())) throw LatticeError("identity is not integral");
    for (int i = 0; i < g; ++i) m.atoms_.push_back(m.exponent(singleton(i)));
    return m;
}

AbelianModel build_model(long d, int g, const std::vector<std::vector<QuadInt>>& glue, Mode mode,
                         const std::vector<Int>& exponents) {
    ModelSpec s;
    s.d = d;
    s.g = g;
    s.glue = glue;
    s.mode = mode;
    s.exponents = exponents;
    return build_model(s);
}

bool is_integral(const AbelianModel& m, const EndoQ& x) { return m.is_integral(x); }
Int exponent(const AbelianModel& m, Subset k) { return m.exponent(k); }

EndoQ gamma_product(const AbelianModel& m, int b, int a) {
    EndoQ e = m.zero();
    e(b, a) = QuadInt(m.d(), Rat(m.atom_exponents()[a]));
    return e;
}

EndoQ perm_endo(const AbelianModel& m, const PermEndoSpec& spec) {
    const int g = m.g();
    if (static_cast<int>(spec.sigma.size()) != g || !is_permutation(spec.sigma))
        throw InvalidInput("sigma is not a permutation of I");
    if (spec.U.g != g) throw ShapeError("restriction set has the wrong size");
    const auto& n = m.atom_exponents();
    EndoQ e = m.zero();
    for (int i = 0; i < g; ++i) {
        const int s = spec.sigma[i];
        if (spec.U.has(i, s)) e(i, s) = QuadInt(m.d(), Rat(n[s]) / Rat(n[i]));
    }
    return e;
}

EndoQ perm_endo(const AbelianModel& m, const Permutation& sigma) {
    return perm_endo(m, PermEndoSpec{sigma, CellSet::all(m.g())});
}

EndoQ rosati(const EndoQ& x, const AbelianModel& m) {
    const int g = m.g();
    if (x.rows() != static_cast<std::size_t>(g) || x.cols() != static_cast<std::size_t>(g))
        throw ShapeError("endomorphism size differs from g");
    const auto& n = m.atom_exponents();
    EndoQ r = m.zero();
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const QuadInt& z = x(j, i);
            if (z.is_zero()) continue;
            r(i, j) = z.conj() * (Rat(n[j]) / Rat(n[i]));
        }
    return r;
}

Subset twisted_set(const Permutation& sigma, const CellSet& U) {
    Permutation inv = inverse(sigma);
    Subset s = 0;
    for (int k = 0; k < U.g; ++k)
        if (U.has(inv[k], k)) s |= singleton(k);
    return s;
}

void require_liverpool_hypothesis(const AbelianModel& m) {
    auto floor = m.hypothesis_floor();
    if (floor && *floor < 4)
        throw HypothesisError("some proper abelian subvariety has exponent " + floor->get_str() +
                              " < 4; the subsets lemma does not apply");
}

LiverpoolResult liverpool_check(const AbelianModel& m, Subset a, Subset b) {
    require_liverpool_hypothesis(m);
    const Subset all = full_set(m.g());
    EndoQ x = m.idempotent(a);
    x.scale(Rat(2));
    x += m.idempotent(b);
    const bool trivial = (a == 0 || a == all) && (b == 0 || b == all);
    return (m.is_integral(x) && !trivial) ? LiverpoolResult::Violates : LiverpoolResult::Consistent;
}

}  // namespace motivix::cmlat
