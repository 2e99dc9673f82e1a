#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rootcover {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from num/den; throws BadInput on zero denominator.
Rat make_rat(const Int& num, const Int& den = 1);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

// a mod n in [0, n).
std::int64_t residue(std::int64_t a, std::int64_t n);
Int residue(const Int& a, const Int& n);

// a' with a a' = 1 mod n. Throws NotCoprime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rat sawtooth(const Rat& x);

Int floor(const Rat& x);
Int ceil(const Rat& x);

// Exact test of x <= c*sqrt(m) + d, c >= 0.
bool leq_sqrt_bound(const Rat& x, const Rat& c, std::int64_t m, const Rat& d);

// Rational bounds on irrational quantities, used for exact comparisons.
Rat log_lower_bound(std::int64_t x);
Rat sqrt_upper_bound(std::int64_t m, unsigned bits = 40);

bool is_prime(std::int64_t n);

// "num/den" (or "num" when den == 1) and back.
std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rat& x, int digits);

double to_double(const Rat& x);

bool is_integer(const Rat& x);

} // namespace rootcover
