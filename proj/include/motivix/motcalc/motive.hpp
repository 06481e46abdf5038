#pragma once

#include "motivix/errors.hpp"
#include "motivix/exact/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivix::motcalc {

using exact::Int;
using exact::Rat;

// Dimension per cohomological weight; index = weight.
using DimVector = std::vector<Int>;
DimVector add(const DimVector& a, const DimVector& b);
DimVector convolve(const DimVector& a, const DimVector& b);
Int total(const DimVector& v);
Int at(const DimVector& v, std::size_t w);

enum class Kind { Unit, Lefschetz, CurveH1, SurfacePart, DirectSum, Tensor, HypersurfaceMiddle };
enum class SurfaceTag { M1, M2alg, M2tr, M3 };
const char* tag_name(SurfaceTag t);

struct SurfaceParams {
    long b2 = 0, rho = 0, q = 0;
};

class MotiveExpr {
public:
    static MotiveExpr unit();
    static MotiveExpr lefschetz(int k);
    static MotiveExpr curve_h1(long g);
    static MotiveExpr surface_part(SurfaceTag tag, SurfaceParams p);
    static MotiveExpr direct_sum(std::vector<MotiveExpr> parts);
    static MotiveExpr tensor(MotiveExpr a, MotiveExpr b);
    // The part of the middle motive of a degree-d hypersurface of dimension n
    // left after splitting off rho_mid Lefschetz classes.
    static MotiveExpr hypersurface_middle(int n, long d, long rho_mid);

    Kind kind() const { return node_->kind; }
    const std::vector<MotiveExpr>& children() const { return node_->children; }
    int power() const { return node_->k; }           // Lefschetz exponent
    long genus() const { return node_->g; }          // CurveH1
    SurfaceTag tag() const { return node_->tag; }    // SurfacePart
    const SurfaceParams& surface() const { return node_->sp; }
    int hyp_n() const { return node_->k; }
    long hyp_d() const { return node_->g; }
    long hyp_rho() const { return node_->sp.rho; }

    DimVector dims() const;
    // Tensors distributed over sums, sums flattened; atoms and tensor products
    // of atoms remain.
    MotiveExpr canonical() const;
    std::string str() const;

    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b) { return a.str() == b.str(); }

private:
    struct Node {
        Kind kind = Kind::Unit;
        int k = 0;
        long g = 0;
        SurfaceTag tag = SurfaceTag::M1;
        SurfaceParams sp;
        std::vector<MotiveExpr> children;
    };
    explicit MotiveExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Middle Betti numbers of a smooth degree-d hypersurface of dimension n.
Int primitive_betti(int n, long d);
Int middle_betti(int n, long d);

MotiveExpr ck_curve(long g);
MotiveExpr ck_surface(long b2, long rho, long q);
MotiveExpr projective_space(int n);

struct ProductReport {
    MotiveExpr motive = MotiveExpr::unit();
    DimVector dims;
    long g = 0;
    bool elliptically_split = true;
    Int b2, ns_rank, m2_alg, m2_tr;  // ns_rank/m2_* only when split
    Int m2_tr_elliptic_times_curve;  // dim M²_tr(E×C)
    Int grid_blocks;                 // number of T_ij blocks, each of dimension 2
};
ProductReport product_of_curves(long g, bool elliptically_split = true);

// Truncated model ℚ[γ]/(γ^{n+1}) with ⟨γⁿ⟩ = d; elements are c·Δ + Σ c_ab·γ^a×γ^b.
struct CKElement {
    Rat diagonal = 0;
    std::map<std::pair<int, int>, Rat> products;
    friend bool operator==(const CKElement&, const CKElement&) = default;
    CKElement& operator+=(const CKElement& o);
    CKElement& operator-=(const CKElement& o);
    bool is_zero() const { return diagonal == 0 && products.empty(); }
};

class CKProjectorRing {
public:
    CKProjectorRing(int n, long d);
    int n() const { return n_; }
    long d() const { return d_; }

    CKElement delta() const;
    CKElement cross(int a, int b, const Rat& c = 1) const;  // c·γ^a×γ^b
    // (A×B)∘(C×D) = ⟨B·C⟩·(A×D); Δ is the unit.
    CKElement compose(const CKElement& x, const CKElement& y) const;

    // π_0, …, π_{2n} (index = weight); π_n is Δ minus the others.
    const std::vector<CKElement>& projectors() const { return pi_; }
    Int dimension(int weight) const;
    std::string describe(const CKElement& x) const;

    // Idempotent, pairwise orthogonal, summing to Δ.
    bool verify() const;

private:
    int n_;
    long d_;
    std::vector<CKElement> pi_;
};

CKProjectorRing hypersurface_ck(int n, long d);

struct Center {
    enum class Type { Point, Curve, Surface } type = Type::Point;
    long g = 0;
    SurfaceParams surface;
    int dimension() const { return type == Type::Point ? 0 : type == Type::Curve ? 1 : 2; }
    static Center point() { return {}; }
    static Center curve(long g) { return {Type::Curve, g, {}}; }
    static Center surf(long b2, long rho, long q) { return {Type::Surface, 0, {b2, rho, q}}; }
};

struct BlowupResult {
    MotiveExpr motive = MotiveExpr::unit();
    DimVector dims;
    // Added summands grouped by center type: points, curves, surfaces.
    std::vector<std::pair<std::string, DimVector>> rows;
};

// Each center Z of codimension c ≥ 2 adds M(Z)⊗(𝕃 ⊕ … ⊕ 𝕃^{c−1}).
BlowupResult blowup_chain(const MotiveExpr& start, const std::vector<Center>& centers, int ambient_dim = 4);

enum class HostVerdict { CannotHost, ForcesEquality, CouldHost };
const char* host_verdict_text(HostVerdict v);

struct LedgerReport {
    Int b4 = 23;
    Int rho2 = 1;
    Int prim_dim;  // b4 − rho2
    BlowupResult resolution;
    struct Entry {
        SurfaceParams surface;
        Int tr_dim;
        HostVerdict verdict;
    };
    std::vector<Entry> surfaces;
    std::string summary;
};

LedgerReport cubic_rationality_ledger(const std::vector<SurfaceParams>& surfaces, const std::vector<long>& curves,
                                      long points);

}  // namespace motivix::motcalc
