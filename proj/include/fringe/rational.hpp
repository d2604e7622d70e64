#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fringe {

// Arbitrary-precision rational, always kept in canonical reduced form with
// a positive denominator.  GMP's mpq_class maintains canonicality through
// arithmetic as long as inputs are canonical, so the only care needed is at
// construction time.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& base, long exp);

// Serialized form used in JSON/CSV outputs: "p/q", or just "p" when q == 1.
std::string rat_str(const Rat& r);
Rat rat_parse(std::string_view s);

inline double to_double(const Rat& r) { return r.get_d(); }

// Binomial coefficient as an exact integer value.
Rat rat_binom(long n, long k);

}  // namespace fringe
