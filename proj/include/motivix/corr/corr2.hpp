#pragma once

#include "motivix/cmlat/model.hpp"
#include "motivix/decomp/candidate.hpp"

#include <array>
#include <map>
#include <tuple>
#include <vector>

namespace motivix::corr {

using cmlat::AbelianModel;
using cmlat::EndoQ;
using exact::Rat;

// The three orthogonal pieces a codimension-2 class on (C×C)² splits into
// under the projector grids. A plain tensor a⊗b is the sum over all three.
enum class Channel : std::uint8_t { A1 = 0, A2 = 1, Theta = 2 };
inline constexpr std::array<Channel, 3> kChannels{Channel::A1, Channel::A2, Channel::Theta};
const char* channel_name(Channel c);

// Weight of a channel in the convolution: −½, −½, 2 (summing to 1).
Rat conv_weight(Channel c);

// Σ coeff·(left ⊗ right) in one channel, modulo balanced classes.
struct Term {
    Channel channel;
    EndoQ left;
    EndoQ right;
    Rat coeff;
};

// Stored over the ℚ-basis {E_rs, √−d·E_rs} of End_ℚ(J) on both sides, so the
// canonical form is unique and zero has no terms.
class Corr2 {
public:
    Corr2() = default;
    static Corr2 zero(int g, long d);
    static Corr2 unit(int g, long d);  // id⊗id, the class 𝟏
    static Corr2 tensor(const EndoQ& left, const EndoQ& right, const Rat& coeff = 1);
    static Corr2 channel_tensor(Channel c, const EndoQ& left, const EndoQ& right, const Rat& coeff = 1);

    int g() const { return g_; }
    long d() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    std::vector<Term> terms() const;

    Corr2& operator+=(const Corr2& o);
    Corr2& operator-=(const Corr2& o);
    Corr2& operator*=(const Rat& r);
    friend Corr2 operator+(Corr2 a, const Corr2& b) { return a += b; }
    friend Corr2 operator-(Corr2 a, const Corr2& b) { return a -= b; }
    friend Corr2 operator*(Corr2 a, const Rat& r) { return a *= r; }
    friend bool operator==(const Corr2& a, const Corr2& b) {
        return a.g_ == b.g_ && a.coeffs_ == b.coeffs_;
    }

    // Component in one channel, lifted back as a plain tensor. The Theta
    // component is the modulo-balanced class: θ_ij ↦ e_i⊗e_j, 𝔄 ↦ 0.
    Corr2 channel_class(Channel c) const;
    Corr2 balanced_class() const { return channel_class(Channel::Theta); }

    // Key: (channel, left basis index, right basis index); basis index
    // (r·g + c)·2 + p stands for (√−d)^p·E_rc.
    using Key = std::tuple<std::uint8_t, int, int>;
    const std::map<Key, Rat>& raw() const { return coeffs_; }

private:
    friend Corr2 compose(const Corr2&, const Corr2&);
    friend Corr2 transpose(const Corr2&, const AbelianModel&);
    friend EndoQ conv(const EndoQ&, const Corr2&, const AbelianModel&);
    void add(const Key& k, const Rat& v);
    void check_compatible(const Corr2& o) const;
    static void expand(const EndoQ& m, std::vector<std::pair<int, Rat>>& out);

    int g_ = 0;
    long d_ = 1;
    std::map<Key, Rat> coeffs_;
};

// (a⊗b)∘(c⊗d) = (a∘c)⊗(b∘d); channels multiply as orthogonal idempotents.
Corr2 compose(const Corr2& x, const Corr2& y);
// (a⊗b)^⊤ = rosati(a)⊗rosati(b)
Corr2 transpose(const Corr2& x, const AbelianModel& m);
// Modulo balanced classes the bullet product is composition; unit 𝟏 = id⊗id.
Corr2 bullet(const Corr2& x, const Corr2& y);
// conv_Σ(a⊗b) = b∘rosati(Σ)∘a, weighted per channel.
EndoQ conv(const EndoQ& sigma, const Corr2& x, const AbelianModel& m);

struct GridProjectors {
    int g = 0;
    std::vector<std::vector<Corr2>> theta, a1, a2;

    const std::vector<std::vector<Corr2>>& grid(decomp::Grid k) const;
    // Σ over a set of cells of one grid.
    Corr2 sum(decomp::Grid k, const cmlat::CellSet& cells) const;
};

GridProjectors build_grids(const AbelianModel& m);

// Λ (or Ξ) of a candidate: 𝔄¹ over U, 𝔄² over V, Θ over W on that side.
Corr2 side_correspondence(const decomp::Candidate& c, decomp::Side s, const GridProjectors& grids);

// conv_Δ(Λ) = −½e_{I_U} − ½e_{I_V} + 2e_{I_W} for the Λ side.
EndoQ conv_delta_of_candidate(const decomp::Candidate& c, const AbelianModel& m);

}  // namespace motivix::corr
