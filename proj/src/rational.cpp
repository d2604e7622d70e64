#include "fringe/rational.hpp"

#include <stdexcept>

namespace fringe {

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rat acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(std::string_view s) {
    Rat r(std::string(s), 10);  // throws std::invalid_argument on malformed input
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
    r.canonicalize();
    return r;
}

Rat rat_binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

}  // namespace fringe
