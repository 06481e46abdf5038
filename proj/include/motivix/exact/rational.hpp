#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace motivix::exact {

using Int = mpz_class;
using Rat = mpq_class;

// num/den in lowest terms; throws InvalidInput on zero denominator.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "n", "-n", "n/d".
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

bool is_integer(const Rat& r);
Int floor_div(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

// lcm of all denominators (1 for an empty list).
Int common_denominator(const std::vector<Rat>& xs);

}  // namespace motivix::exact
