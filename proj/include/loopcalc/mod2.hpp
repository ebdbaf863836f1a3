#ifndef LOOPCALC_MOD2_HPP
#define LOOPCALC_MOD2_HPP

#include <cstdint>

namespace loopcalc {

/// Binomial coefficient C(a, b) mod 2 via bit containment (Lucas).
///
/// Conventions for arguments outside the classical range:
///   C(a, 0) = 1 for every integer a, C(a, b) = 0 for b < 0, and for a < 0
///   the generating-function convention (1+x)^a over F2, which coincides
///   with two's-complement bit containment.  In particular C(-1, b) = 1
///   for all b >= 0.
constexpr int binom_mod2(long long a, long long b) noexcept {
    if (b < 0) return 0;
    if (b == 0) return 1;
    const auto ua = static_cast<unsigned long long>(a);
    const auto ub = static_cast<unsigned long long>(b);
    return (ub & ~ua) == 0ull ? 1 : 0;
}

/// Index of the lowest zero bit of m.  rho(1) = 1, rho(2) = 0, rho(2^t - 1) = t.
constexpr int rho(unsigned long long m) noexcept {
    int i = 0;
    while (m & 1ull) {
        m >>= 1;
        ++i;
    }
    return i;
}

} // namespace loopcalc

#endif
