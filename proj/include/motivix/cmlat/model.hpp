#pragma once

#include "motivix/errors.hpp"
#include "motivix/exact/lattice.hpp"
#include "motivix/exact/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace motivix::cmlat {

using exact::Int;
using exact::QuadInt;
using exact::Rat;
using exact::RatMatrix;
using exact::ZLattice;

// An element of End_ℚ(J) as a g×g matrix over ℚ(√−d).
using EndoQ = exact::QuadMatrix;

// Subsets of I = {0..g−1} as bitmasks (g ≤ 63).
using Subset = std::uint64_t;
inline Subset full_set(int g) { return g >= 64 ? ~Subset(0) : (Subset(1) << g) - 1; }
inline Subset singleton(int i) { return Subset(1) << i; }
inline bool contains(Subset s, int i) { return (s >> i) & 1; }
int popcount(Subset s);
std::string subset_str(Subset s);  // 1-based, e.g. "{1,3}"

// σ as a 0-based one-line vector: sigma[i] = σ(i).
using Permutation = std::vector<int>;
Permutation identity_perm(int g);
Permutation transposition(int g, int a, int b);
Permutation inverse(const Permutation& s);
Permutation compose(const Permutation& s, const Permutation& t);  // s∘t
bool is_permutation(const Permutation& s);
int perm_order(const Permutation& s);
std::string perm_str(const Permutation& s);  // "id" or cycle notation, 1-based

// Subsets of I² as row-major g·g flags.
struct CellSet {
    int g = 0;
    std::vector<bool> cells;

    static CellSet empty(int g) { return {g, std::vector<bool>(g * g, false)}; }
    static CellSet all(int g) { return {g, std::vector<bool>(g * g, true)}; }
    bool has(int i, int j) const { return cells[i * g + j]; }
    void set(int i, int j, bool v = true) { cells[i * g + j] = v; }
    Subset diagonal() const;  // {i : (i,i) ∈ U}
};

struct PermEndoSpec {
    Permutation sigma;
    CellSet U;
};

enum class Mode { Lattice, Axiomatic };
enum class Order { Gaussian, Maximal };  // ℤ[√−d] or ℤ[(1+√−d)/2]

struct ModelSpec {
    long d = 1;
    int g = 1;
    std::vector<std::vector<QuadInt>> glue;
    Mode mode = Mode::Lattice;
    std::vector<Int> exponents;  // atom exponents, axiomatic mode only
    Order order = Order::Gaussian;
};

class AbelianModel {
public:
    long d() const { return spec_.d; }
    int g() const { return spec_.g; }
    Mode mode() const { return spec_.mode; }
    Order order() const { return spec_.order; }
    const ModelSpec& spec() const { return spec_; }
    const ZLattice& lattice() const;  // lattice mode only

    // n_i for every atom.
    const std::vector<Int>& atom_exponents() const { return atoms_; }
    Int exponent(Subset k) const;
    bool is_integral(const EndoQ& x) const;

    // Least exponent over proper nonempty subsets: computed in lattice mode,
    // the least atom exponent in axiomatic mode (taken as the theorem's
    // hypothesis on all proper subsets). Empty when g = 1.
    std::optional<Int> hypothesis_floor() const;

    EndoQ zero() const;
    EndoQ identity() const;
    EndoQ idempotent(Subset k) const;  // e_K
    EndoQ unit(int r, int c) const;     // E_rc

    // Lattice mode: B·R(x)ᵀ·B⁻¹; x is integral iff this is an integer matrix.
    RatMatrix transport(const EndoQ& x) const;

private:
    friend AbelianModel build_model(const ModelSpec& spec);
    bool axiomatic_integral(const EndoQ& x) const;
    std::optional<Int> known_exponent(Subset k) const;

    ModelSpec spec_;
    std::shared_ptr<const ZLattice> lattice_;
    std::vector<RatMatrix> atom_transport_;
    std::vector<Int> atoms_;
    struct Memo {
        std::mutex mu;
        std::map<Subset, Int> exponents;
        std::optional<std::optional<Int>> floor;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

AbelianModel build_model(const ModelSpec& spec);
AbelianModel build_model(long d, int g, const std::vector<std::vector<QuadInt>>& glue, Mode mode,
                         const std::vector<Int>& exponents = {});

bool is_integral(const AbelianModel& m, const EndoQ& x);
Int exponent(const AbelianModel& m, Subset k);

// σ_U = Σ_{i : (i,σ(i)) ∈ U} (n_{σ(i)}/n_i)·E_{i,σ(i)}, using γ_b^⊤γ_a = n_a·E_{ba}.
EndoQ perm_endo(const AbelianModel& m, const PermEndoSpec& spec);
EndoQ perm_endo(const AbelianModel& m, const Permutation& sigma);  // U = I²
// γ_b^⊤γ_a
EndoQ gamma_product(const AbelianModel& m, int b, int a);
// D⁻¹·conj(x)ᵀ·D, D = diag(n_1..n_g)
EndoQ rosati(const EndoQ& x, const AbelianModel& m);

// {k : (σ⁻¹(k), k) ∈ U}, the support of rosati(σ_U)∘rosati(σ_J⁻¹).
// For involutions (the probes) this is {i : (σ(i), i) ∈ U}.
Subset twisted_set(const Permutation& sigma, const CellSet& U);

enum class LiverpoolResult { Consistent, Violates };
// Throws HypothesisError when some proper nonempty K has n_K < 4.
void require_liverpool_hypothesis(const AbelianModel& m);
LiverpoolResult liverpool_check(const AbelianModel& m, Subset a, Subset b);

}  // namespace motivix::cmlat
