#include "motivix/corr/corr2.hpp"

namespace motivix::corr {

using cmlat::QuadInt;
using decomp::Candidate;
using decomp::Grid;
using decomp::Side;
using exact::make_rat;

const char* channel_name(Channel c) {
    switch (c) {
        case Channel::A1: return "A1";
        case Channel::A2: return "A2";
        default: return "Theta";
    }
}

Rat conv_weight(Channel c) { return c == Channel::Theta ? Rat(2) : make_rat(-1, 2); }

namespace {

struct BasisElem {
    int r, c, p;
};

BasisElem decode(int idx, int g) { return {idx / 2 / g, idx / 2 % g, idx % 2}; }
int encode(int r, int c, int p, int g) { return (r * g + c) * 2 + p; }

EndoQ basis_matrix(int idx, int g, long d) {
    auto b = decode(idx, g);
    EndoQ m = exact::quad_matrix(g, g, d);
    m(b.r, b.c) = b.p ? QuadInt(d, 0, 1) : QuadInt(d, 1);
    return m;
}

// Product of two basis elements as (index, scalar); index −1 when zero.
std::pair<int, Rat> basis_product(int a, int b, int g, long d) {
    auto x = decode(a, g), y = decode(b, g);
    if (x.c != y.r) return {-1, Rat(0)};
    const int p = x.p + y.p;
    return {encode(x.r, y.c, p % 2, g), p == 2 ? Rat(-d) : Rat(1)};
}

}  // namespace

void Corr2::expand(const EndoQ& m, std::vector<std::pair<int, Rat>>& out) {
    const int g = static_cast<int>(m.rows());
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            const QuadInt& z = m(r, c);
            if (z.re() != 0) out.emplace_back(encode(r, c, 0, g), z.re());
            if (z.im() != 0) out.emplace_back(encode(r, c, 1, g), z.im());
        }
}

void Corr2::add(const Key& k, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = coeffs_.emplace(k, v);
    if (inserted) return;
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
}

void Corr2::check_compatible(const Corr2& o) const {
    if (g_ != o.g_) throw ShapeError("correspondences over different g");
}

Corr2 Corr2::zero(int g, long d) {
    Corr2 z;
    z.g_ = g;
    z.d_ = d;
    return z;
}

Corr2 Corr2::unit(int g, long d) {
    auto id = exact::quad_identity(g, d);
    return tensor(id, id);
}

Corr2 Corr2::channel_tensor(Channel ch, const EndoQ& left, const EndoQ& right, const Rat& coeff) {
    if (left.rows() != left.cols() || right.rows() != right.cols() || left.rows() != right.rows())
        throw ShapeError("tensor factors must be square of equal size");
    Corr2 x = zero(static_cast<int>(left.rows()), left.zero().d());
    std::vector<std::pair<int, Rat>> l, r;
    expand(left, l);
    expand(right, r);
    for (const auto& [li, lv] : l)
        for (const auto& [ri, rv] : r) x.add({static_cast<std::uint8_t>(ch), li, ri}, coeff * lv * rv);
    return x;
}

Corr2 Corr2::tensor(const EndoQ& left, const EndoQ& right, const Rat& coeff) {
    Corr2 x = channel_tensor(Channel::A1, left, right, coeff);
    x += channel_tensor(Channel::A2, left, right, coeff);
    x += channel_tensor(Channel::Theta, left, right, coeff);
    return x;
}

std::vector<Term> Corr2::terms() const {
    std::vector<Term> out;
    for (const auto& [k, v] : coeffs_)
        out.push_back({static_cast<Channel>(std::get<0>(k)), basis_matrix(std::get<1>(k), g_, d_),
                       basis_matrix(std::get<2>(k), g_, d_), v});
    return out;
}

Corr2& Corr2::operator+=(const Corr2& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.coeffs_) add(k, v);
    return *this;
}

Corr2& Corr2::operator-=(const Corr2& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.coeffs_) add(k, -v);
    return *this;
}

Corr2& Corr2::operator*=(const Rat& r) {
    if (r == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) v *= r;
    return *this;
}

Corr2 Corr2::channel_class(Channel ch) const {
    Corr2 out = zero(g_, d_);
    for (const auto& [k, v] : coeffs_) {
        if (std::get<0>(k) != static_cast<std::uint8_t>(ch)) continue;
        for (Channel c : kChannels) out.add({static_cast<std::uint8_t>(c), std::get<1>(k), std::get<2>(k)}, v);
    }
    return out;
}

Corr2 compose(const Corr2& x, const Corr2& y) {
    x.check_compatible(y);
    Corr2 out = Corr2::zero(x.g_, x.d_);
    for (const auto& [kx, vx] : x.coeffs_)
        for (const auto& [ky, vy] : y.coeffs_) {
            if (std::get<0>(kx) != std::get<0>(ky)) continue;
            auto [li, ls] = basis_product(std::get<1>(kx), std::get<1>(ky), x.g_, x.d_);
            if (li < 0) continue;
            auto [ri, rs] = basis_product(std::get<2>(kx), std::get<2>(ky), x.g_, x.d_);
            if (ri < 0) continue;
            out.add({std::get<0>(kx), li, ri}, vx * vy * ls * rs);
        }
    return out;
}

Corr2 transpose(const Corr2& x, const AbelianModel& m) {
    if (m.g() != x.g_) throw ShapeError("model and correspondence sizes differ");
    const auto& n = m.atom_exponents();
    const int g = x.g_;
    // rosati((√−d)^p·E_rs) = (−1)^p·(n_r/n_s)·(√−d)^p·E_sr
    auto ros = [&](int idx) -> std::pair<int, Rat> {
        auto b = decode(idx, g);
        Rat f = Rat(n[b.r]) / Rat(n[b.c]);
        if (b.p) f = -f;
        return {encode(b.c, b.r, b.p, g), f};
    };
    Corr2 out = Corr2::zero(g, x.d_);
    for (const auto& [k, v] : x.coeffs_) {
        auto [li, lf] = ros(std::get<1>(k));
        auto [ri, rf] = ros(std::get<2>(k));
        out.add({std::get<0>(k), li, ri}, v * lf * rf);
    }
    return out;
}

Corr2 bullet(const Corr2& x, const Corr2& y) { return compose(x, y); }

EndoQ conv(const EndoQ& sigma, const Corr2& x, const AbelianModel& m) {
    const int g = m.g();
    if (x.g_ != g || sigma.rows() != static_cast<std::size_t>(g)) throw ShapeError("conv size mismatch");
    const long d = m.d();
    EndoQ rs = cmlat::rosati(sigma, m);
    EndoQ out = m.zero();
    const QuadInt root(d, 0, 1);
    for (const auto& [k, v] : x.coeffs_) {
        // (√−d)^p2·E_{r2 s2} ∘ R ∘ (√−d)^p1·E_{r1 s1} = (√−d)^{p1+p2}·R(s2, r1)·E_{r2 s1}
        auto a = decode(std::get<1>(k), g), b = decode(std::get<2>(k), g);
        const QuadInt& entry = rs(b.c, a.r);
        if (entry.is_zero()) continue;
        QuadInt term = entry * (v * conv_weight(static_cast<Channel>(std::get<0>(k))));
        const int p = a.p + b.p;
        if (p == 1) term *= root;
        if (p == 2) term *= Rat(-d);
        out(b.r, a.c) += term;
    }
    return out;
}

const std::vector<std::vector<Corr2>>& GridProjectors::grid(Grid k) const {
    switch (k) {
        case Grid::U: return a1;
        case Grid::V: return a2;
        default: return theta;
    }
}

Corr2 GridProjectors::sum(Grid k, const cmlat::CellSet& cells) const {
    const auto& gr = grid(k);
    Corr2 out = Corr2::zero(g, gr[0][0].d());
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (cells.has(i, j)) out += gr[i][j];
    return out;
}

GridProjectors build_grids(const AbelianModel& m) {
    const int g = m.g();
    GridProjectors p;
    p.g = g;
    p.theta.assign(g, std::vector<Corr2>(g));
    p.a1 = p.theta;
    p.a2 = p.theta;
    Corr2 total = Corr2::zero(g, m.d()), theta_sum = total;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            EndoQ ei = m.idempotent(cmlat::singleton(i)), ej = m.idempotent(cmlat::singleton(j));
            p.theta[i][j] = Corr2::channel_tensor(Channel::Theta, ei, ej);
            p.a1[i][j] = Corr2::channel_tensor(Channel::A1, ei, ej);
            p.a2[i][j] = Corr2::channel_tensor(Channel::A2, ei, ej);
            theta_sum += p.theta[i][j];
            total += p.theta[i][j] + p.a1[i][j] + p.a2[i][j];
        }
    const Corr2 one = Corr2::unit(g, m.d());
    if (!(theta_sum.balanced_class() == one) || !(total == one))
        throw Error("projector grids do not sum to the unit class");
    return p;
}

Corr2 side_correspondence(const Candidate& c, Side s, const GridProjectors& grids) {
    c.validate();
    if (c.g != grids.g) throw CandidateError("candidate and grids have different g");
    return grids.sum(Grid::U, c.cells(Grid::U, s)) + grids.sum(Grid::V, c.cells(Grid::V, s)) +
           grids.sum(Grid::W, c.cells(Grid::W, s));
}

EndoQ conv_delta_of_candidate(const Candidate& c, const AbelianModel& m) {
    c.validate();
    if (c.g != m.g()) throw CandidateError("candidate and model have different g");
    GridProjectors grids = build_grids(m);
    return conv(m.identity(), side_correspondence(c, Side::Lambda, grids), m);
}

}  // namespace motivix::corr
