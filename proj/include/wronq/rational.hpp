#ifndef WRONQ_RATIONAL_HPP
#define WRONQ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wronq {

// Exact rational coefficients. GMP's mpq_class keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long constructors on LP64; funnel through long.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
    Rat r{to_int(num), to_int(den)};
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
Rat rat_from_string(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// r^e for integer e (e < 0 requires r != 0).
Rat rat_pow(const Rat& r, long e);

bool rat_is_integer(const Rat& r);

// Smallest lattice point >= x on (1/den)Z.
Rat ceil_to_lattice(const Rat& x, long long den);

// Floor of num/den as a bigint quotient, exact.
Int floor_div(const Int& num, const Int& den);

// Deterministic trial-division primality check, adequate for desk-scale p.
bool is_prime(long long n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace wronq

#endif // WRONQ_RATIONAL_HPP
