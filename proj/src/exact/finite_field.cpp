#include "motivix/exact/finite_field.hpp"

#include "motivix/errors.hpp"

namespace motivix::exact {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p) || p >= (1ULL << 31)) throw InvalidInput("prime field needs a prime below 2^31");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a % p_ == 0) throw InvalidInput("inverse of zero in a prime field");
    return pow_mod(a, p_ - 2, p_);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p_) : r);
}

std::optional<PrimeField::Elem> PrimeField::from_rat(const Rat& r) const {
    Int pz = Int(static_cast<unsigned long>(p_));
    Int n = r.get_num() % pz;
    Int d = r.get_den() % pz;
    if (n < 0) n += pz;
    if (d == 0) return std::nullopt;
    return mul(n.get_ui(), inv(d.get_ui()));
}

QuadraticExtension::QuadraticExtension(std::uint64_t p) : fp_(p), nonres_(0) {
    if (p == 2) throw InvalidInput("quadratic extension needs an odd prime");
    for (std::uint64_t r = 2; r < p; ++r)
        if (pow_mod(r, (p - 1) / 2, p) == p - 1) {
            nonres_ = r;
            break;
        }
}

Fp2 QuadraticExtension::mul(const Fp2& x, const Fp2& y) const {
    // (a + bs)(c + ds) = (ac + r·bd) + (ad + bc)s
    auto ac = fp_.mul(x.a, y.a);
    auto bd = fp_.mul(x.b, y.b);
    auto ad = fp_.mul(x.a, y.b);
    auto bc = fp_.mul(x.b, y.a);
    return {fp_.add(ac, fp_.mul(nonres_, bd)), fp_.add(ad, bc)};
}

Fp2 QuadraticExtension::inv(const Fp2& x) const {
    // 1/(a + bs) = (a − bs)/(a² − r·b²)
    auto n = fp_.sub(fp_.mul(x.a, x.a), fp_.mul(nonres_, fp_.mul(x.b, x.b)));
    auto ni = fp_.inv(n);
    return {fp_.mul(x.a, ni), fp_.mul(fp_.neg(x.b), ni)};
}

}  // namespace motivix::exact
