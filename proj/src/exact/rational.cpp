#include "motivix/exact/rational.hpp"

#include "motivix/errors.hpp"

namespace motivix::exact {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int common_denominator(const std::vector<Rat>& xs) {
    Int l = 1;
    for (const auto& x : xs) l = lcm(l, x.get_den());
    return l;
}

}  // namespace motivix::exact
