#include "motivix/motcalc/motive.hpp"

#include <algorithm>
#include <sstream>

namespace motivix::motcalc {

namespace {

void trim(DimVector& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

DimVector single(std::size_t w, const Int& n) {
    DimVector v(w + 1, Int(0));
    v[w] = n;
    trim(v);
    return v;
}

}  // namespace

DimVector add(const DimVector& a, const DimVector& b) {
    DimVector out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

DimVector convolve(const DimVector& a, const DimVector& b) {
    if (a.empty() || b.empty()) return {};
    DimVector out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Int total(const DimVector& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
}

Int at(const DimVector& v, std::size_t w) { return w < v.size() ? v[w] : Int(0); }

const char* tag_name(SurfaceTag t) {
    switch (t) {
        case SurfaceTag::M1: return "M1";
        case SurfaceTag::M2alg: return "M2alg";
        case SurfaceTag::M2tr: return "M2tr";
        default: return "M3";
    }
}

MotiveExpr MotiveExpr::unit() { return MotiveExpr(std::make_shared<Node>()); }

MotiveExpr MotiveExpr::lefschetz(int k) {
    if (k < 0) throw InvalidInput("negative Lefschetz power");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lefschetz;
    n->k = k;
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::curve_h1(long g) {
    if (g < 0) throw InvalidInput("negative genus");
    auto n = std::make_shared<Node>();
    n->kind = Kind::CurveH1;
    n->g = g;
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::surface_part(SurfaceTag tag, SurfaceParams p) {
    if (p.b2 < 0 || p.rho < 0 || p.q < 0) throw InvalidInput("negative surface invariant");
    if (p.rho > p.b2) throw InvalidInput("Picard number exceeds b2");
    auto n = std::make_shared<Node>();
    n->kind = Kind::SurfacePart;
    n->tag = tag;
    n->sp = p;
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::direct_sum(std::vector<MotiveExpr> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::DirectSum;
    n->children = std::move(parts);
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::tensor(MotiveExpr a, MotiveExpr b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->children = {std::move(a), std::move(b)};
    return MotiveExpr(n);
}

MotiveExpr MotiveExpr::hypersurface_middle(int dim, long d, long rho_mid) {
    if (dim < 1 || d < 1) throw InvalidInput("hypersurface needs n >= 1 and d >= 1");
    if (rho_mid < 0 || Int(rho_mid) > middle_betti(dim, d)) throw InvalidInput("rho_mid out of range");
    auto n = std::make_shared<Node>();
    n->kind = Kind::HypersurfaceMiddle;
    n->k = dim;
    n->g = d;
    n->sp.rho = rho_mid;
    return MotiveExpr(n);
}

DimVector MotiveExpr::dims() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Unit: return {Int(1)};
        case Kind::Lefschetz: return single(2 * n.k, 1);
        case Kind::CurveH1: return single(1, 2 * n.g);
        case Kind::SurfacePart:
            switch (n.tag) {
                case SurfaceTag::M1: return single(1, 2 * n.sp.q);
                case SurfaceTag::M2alg: return single(2, n.sp.rho);
                case SurfaceTag::M2tr: return single(2, n.sp.b2 - n.sp.rho);
                default: return single(3, 2 * n.sp.q);
            }
        case Kind::HypersurfaceMiddle: return single(n.k, middle_betti(n.k, n.g) - n.sp.rho);
        case Kind::DirectSum: {
            DimVector out;
            for (const auto& c : n.children) out = add(out, c.dims());
            return out;
        }
        case Kind::Tensor: return convolve(n.children[0].dims(), n.children[1].dims());
    }
    return {};
}

namespace {

using Factors = std::vector<MotiveExpr>;

// Units dropped, Lefschetz powers merged in front.
MotiveExpr make_term(const Factors& fs) {
    int k = 0;
    Factors rest;
    for (const auto& f : fs) {
        if (f.kind() == Kind::Unit) continue;
        if (f.kind() == Kind::Lefschetz)
            k += f.power();
        else
            rest.push_back(f);
    }
    if (k > 0) rest.insert(rest.begin(), MotiveExpr::lefschetz(k));
    if (rest.empty()) return MotiveExpr::unit();
    MotiveExpr out = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i) out = MotiveExpr::tensor(out, rest[i]);
    return out;
}

std::vector<Factors> expand(const MotiveExpr& e) {
    switch (e.kind()) {
        case Kind::DirectSum: {
            std::vector<Factors> out;
            for (const auto& c : e.children()) {
                auto sub = expand(c);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case Kind::Tensor: {
            auto a = expand(e.children()[0]), b = expand(e.children()[1]);
            std::vector<Factors> out;
            for (const auto& x : a)
                for (const auto& y : b) {
                    Factors f = x;
                    f.insert(f.end(), y.begin(), y.end());
                    out.push_back(std::move(f));
                }
            return out;
        }
        case Kind::Lefschetz:
            if (e.power() == 0) return {{MotiveExpr::unit()}};
            return {{e}};
        default: return {{e}};
    }
}

}  // namespace

MotiveExpr MotiveExpr::canonical() const {
    auto terms = expand(*this);
    if (terms.size() == 1) return make_term(terms[0]);
    std::vector<MotiveExpr> parts;
    for (const auto& t : terms) parts.push_back(make_term(t));
    return direct_sum(std::move(parts));
}

std::string MotiveExpr::str() const {
    const Node& n = *node_;
    std::ostringstream os;
    switch (n.kind) {
        case Kind::Unit: return "1";
        case Kind::Lefschetz: return n.k == 1 ? "L" : "L^" + std::to_string(n.k);
        case Kind::CurveH1: return "h1(g=" + std::to_string(n.g) + ")";
        case Kind::SurfacePart:
            os << tag_name(n.tag) << "(b2=" << n.sp.b2 << ",rho=" << n.sp.rho << ",q=" << n.sp.q << ")";
            return os.str();
        case Kind::HypersurfaceMiddle:
            os << "H" << n.k << "(d=" << n.g << ",rho=" << n.sp.rho << ")";
            return os.str();
        case Kind::DirectSum:
            if (n.children.empty()) return "0";
            os << "(";
            for (std::size_t i = 0; i < n.children.size(); ++i) os << (i ? " + " : "") << n.children[i].str();
            os << ")";
            return os.str();
        case Kind::Tensor: return n.children[0].str() + "*" + n.children[1].str();
    }
    return "";
}

Int primitive_betti(int n, long d) {
    if (n < 1 || d < 1) throw InvalidInput("hypersurface needs n >= 1 and d >= 1");
    Int a = d - 1, p;
    mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), n + 2);
    Int r = p + (n % 2 ? -a : a);
    return r / d;
}

Int middle_betti(int n, long d) { return primitive_betti(n, d) + (n % 2 == 0 ? 1 : 0); }

MotiveExpr ck_curve(long g) {
    return MotiveExpr::direct_sum({MotiveExpr::unit(), MotiveExpr::curve_h1(g), MotiveExpr::lefschetz(1)});
}

MotiveExpr ck_surface(long b2, long rho, long q) {
    SurfaceParams p{b2, rho, q};
    return MotiveExpr::direct_sum({MotiveExpr::unit(), MotiveExpr::surface_part(SurfaceTag::M1, p),
                                   MotiveExpr::surface_part(SurfaceTag::M2alg, p),
                                   MotiveExpr::surface_part(SurfaceTag::M2tr, p),
                                   MotiveExpr::surface_part(SurfaceTag::M3, p), MotiveExpr::lefschetz(2)});
}

MotiveExpr projective_space(int n) {
    if (n < 0) throw InvalidInput("negative dimension");
    std::vector<MotiveExpr> parts;
    for (int k = 0; k <= n; ++k) parts.push_back(k ? MotiveExpr::lefschetz(k) : MotiveExpr::unit());
    return MotiveExpr::direct_sum(std::move(parts));
}

ProductReport product_of_curves(long g, bool elliptically_split) {
    if (g < 0) throw InvalidInput("negative genus");
    ProductReport r;
    r.g = g;
    r.elliptically_split = elliptically_split;
    r.motive = MotiveExpr::tensor(ck_curve(g), ck_curve(g)).canonical();
    r.dims = r.motive.dims();
    r.b2 = at(r.dims, 2);
    if (elliptically_split) {
        // NS(C×C) = 2 + rank End(J), and End(E^g) has rank 2g² for CM E.
        r.ns_rank = 2 + 2 * Int(g) * g;
        r.m2_alg = r.ns_rank;
        r.m2_tr = r.b2 - r.ns_rank;
        Int b2_ec = at(MotiveExpr::tensor(ck_curve(1), ck_curve(g)).dims(), 2);
        r.m2_tr_elliptic_times_curve = b2_ec - (2 + 2 * Int(g));  // NS(E×C) = 2 + rank Hom(E, J)
        r.grid_blocks = Int(g) * g;
    }
    return r;
}

CKElement& CKElement::operator+=(const CKElement& o) {
    diagonal += o.diagonal;
    for (const auto& [k, v] : o.products) {
        Rat& x = products[k];
        x += v;
        if (x == 0) products.erase(k);
    }
    return *this;
}

CKElement& CKElement::operator-=(const CKElement& o) {
    CKElement neg = o;
    neg.diagonal = -neg.diagonal;
    for (auto& [k, v] : neg.products) v = -v;
    return *this += neg;
}

CKProjectorRing::CKProjectorRing(int n, long d) : n_(n), d_(d) {
    if (n < 1 || d < 1) throw InvalidInput("hypersurface needs n >= 1 and d >= 1");
    pi_.assign(2 * n + 1, CKElement{});
    CKElement rest = delta();
    for (int j = 0; j <= n; ++j) {
        if (2 * j == n) continue;
        pi_[2 * j] = cross(n - j, j, Rat(1, d));
        rest -= pi_[2 * j];
    }
    pi_[n] = rest;
}

CKElement CKProjectorRing::delta() const {
    CKElement x;
    x.diagonal = 1;
    // With no primitive part the diagonal is Σ (1/d)·γ^{n−j}×γ^j.
    if (primitive_betti(n_, d_) == 0) {
        x.diagonal = 0;
        for (int j = 0; j <= n_; ++j) x += cross(n_ - j, j, Rat(1, d_));
    }
    return x;
}

CKElement CKProjectorRing::cross(int a, int b, const Rat& c) const {
    if (a < 0 || b < 0 || a > n_ || b > n_) throw InvalidInput("power outside the truncated ring");
    CKElement x;
    if (c != 0) x.products[{a, b}] = c;
    return x;
}

CKElement CKProjectorRing::compose(const CKElement& x, const CKElement& y) const {
    CKElement out;
    CKElement dx = x, dy = y;
    if (x.diagonal != 0) {
        CKElement s = y;
        s.diagonal *= x.diagonal;
        for (auto& [k, v] : s.products) v *= x.diagonal;
        out += s;
    }
    if (y.diagonal != 0) {
        CKElement s;
        for (const auto& [k, v] : x.products) s.products[k] = v * y.diagonal;
        out += s;
    }
    for (const auto& [kx, vx] : x.products)
        for (const auto& [ky, vy] : y.products) {
            if (kx.second + ky.first != n_) continue;
            CKElement t;
            t.products[{kx.first, ky.second}] = vx * vy * d_;
            out += t;
        }
    return out;
}

Int CKProjectorRing::dimension(int weight) const {
    if (weight < 0 || weight > 2 * n_) return 0;
    if (weight == n_) return middle_betti(n_, d_);
    return weight % 2 == 0 ? Int(1) : Int(0);
}

std::string CKProjectorRing::describe(const CKElement& x) const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&](const Rat& c) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
    };
    if (x.diagonal != 0) {
        sep(x.diagonal);
        Rat a = abs(x.diagonal);
        if (a != 1) os << exact::to_string(a) << "*";
        os << "Delta";
    }
    for (const auto& [k, v] : x.products) {
        sep(v);
        Rat a = abs(v);
        if (a != 1) os << exact::to_string(a) << "*";
        os << "g^" << k.first << "xg^" << k.second;
    }
    if (first) os << "0";
    return os.str();
}

bool CKProjectorRing::verify() const {
    CKElement sum;
    for (std::size_t i = 0; i < pi_.size(); ++i) {
        sum += pi_[i];
        for (std::size_t j = 0; j < pi_.size(); ++j) {
            CKElement p = compose(pi_[i], pi_[j]);
            if (!(p == (i == j ? pi_[i] : CKElement{}))) return false;
        }
    }
    return sum == delta();
}

CKProjectorRing hypersurface_ck(int n, long d) { return CKProjectorRing(n, d); }

BlowupResult blowup_chain(const MotiveExpr& start, const std::vector<Center>& centers, int ambient_dim) {
    BlowupResult r;
    std::vector<MotiveExpr> parts{start};
    const char* names[3] = {"points", "curves", "surfaces"};
    std::vector<DimVector> rows(3);
    for (const auto& c : centers) {
        const int codim = ambient_dim - c.dimension();
        if (codim < 2) throw InvalidInput("blow-up center must have codimension at least 2");
        MotiveExpr mz = c.type == Center::Type::Point   ? MotiveExpr::unit()
                        : c.type == Center::Type::Curve ? ck_curve(c.g)
                                                        : ck_surface(c.surface.b2, c.surface.rho, c.surface.q);
        std::vector<MotiveExpr> tw;
        for (int k = 1; k < codim; ++k) tw.push_back(MotiveExpr::lefschetz(k));
        MotiveExpr added = MotiveExpr::tensor(mz, MotiveExpr::direct_sum(std::move(tw)));
        rows[c.dimension()] = add(rows[c.dimension()], added.dims());
        parts.push_back(added);
    }
    r.motive = MotiveExpr::direct_sum(std::move(parts));
    r.dims = r.motive.dims();
    for (int i = 0; i < 3; ++i) r.rows.emplace_back(names[i], rows[i]);
    return r;
}

const char* host_verdict_text(HostVerdict v) {
    switch (v) {
        case HostVerdict::CannotHost: return "cannot host";
        case HostVerdict::ForcesEquality: return "hosting forces equality, violating nontriviality of both summands";
        default: return "could host";
    }
}

LedgerReport cubic_rationality_ledger(const std::vector<SurfaceParams>& surfaces, const std::vector<long>& curves,
                                      long points) {
    if (points < 0) throw InvalidInput("negative point count");
    LedgerReport r;
    r.prim_dim = r.b4 - r.rho2;
    std::vector<Center> centers;
    for (long i = 0; i < points; ++i) centers.push_back(Center::point());
    for (long g : curves) centers.push_back(Center::curve(g));
    for (const auto& s : surfaces) centers.push_back(Center::surf(s.b2, s.rho, s.q));
    r.resolution = blowup_chain(projective_space(4), centers, 4);

    int hosts = 0;
    for (const auto& s : surfaces) {
        LedgerReport::Entry e;
        e.surface = s;
        e.tr_dim = at(MotiveExpr::surface_part(SurfaceTag::M2tr, s).dims(), 2);
        // The pulled-back part must sit strictly inside M²_tr of the surface.
        e.verdict = e.tr_dim < r.prim_dim    ? HostVerdict::CannotHost
                    : e.tr_dim == r.prim_dim ? HostVerdict::ForcesEquality
                                             : HostVerdict::CouldHost;
        if (e.verdict == HostVerdict::CouldHost) ++hosts;
        r.surfaces.push_back(e);
    }
    if (hosts == 0)
        r.summary = "no host available";
    else
        r.summary = std::to_string(hosts) + " surface(s) could host; strict containment required";
    return r;
}

}  // namespace motivix::motcalc
