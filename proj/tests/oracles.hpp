#pragma once

// Independent oracles used by the test and acceptance suites.  Everything
// here is deliberately naive (extended Euclid, ascending scans, direct
// integer formulas) and must stay decoupled from the library paths it
// checks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace oracles {

// extended-Euclid modular inverse
inline mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw std::runtime_error("oracle: not invertible");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Fermat quotient by the integer definition: remainder of (z^{p-1}-1)/p mod p
inline long fermat_quotient_int(const mpz_class& z, long p) {
    mpz_class p2 = mpz_class(p) * p, t;
    mpz_powm_ui(t.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p - 1),
                p2.get_mpz_t());
    t -= 1;
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    return mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(p));
}

// multiplicative order of a mod p
inline long order_mod(long a, long p) {
    long ord = 1;
    long x = a % p;
    while (x != 1) {
        x = static_cast<long>((static_cast<long long>(x) * a) % p);
        ++ord;
        if (ord > p) throw std::runtime_error("oracle: order overflow");
    }
    return ord;
}

struct PellSolution {
    mpz_class x, y;
    int norm;
};

// Ascending brute-force scan for the minimal x^2 - d y^2 = +-4 solution;
// pure integer arithmetic with an incrementally adjusted square root.  At a
// given y the norm -4 solution has the smaller x, so it is checked first.
inline std::optional<PellSolution> pell_scan(long d, unsigned long long y_cap) {
    using u128 = unsigned __int128;
    const u128 dd = static_cast<u128>(d);
    u128 r = 0;  // tracks isqrt(d y^2 - 4), monotone in y
    for (unsigned long long y = 1; y <= y_cap; ++y) {
        u128 t = dd * y * y;
        u128 tm = t - 4, tp = t + 4;
        while ((r + 1) * (r + 1) <= tm) ++r;
        u128 x = 0;
        int norm = 0;
        if (r * r == tm) {
            x = r;
            norm = -1;
        } else {
            u128 s = r;
            while ((s + 1) * (s + 1) <= tp) ++s;
            if (s * s == tp) {
                x = s;
                norm = 1;
            }
        }
        if (norm != 0) {
            mpz_class xz = static_cast<unsigned long>(x >> 32);
            xz <<= 32;
            xz += static_cast<unsigned long>(x & 0xffffffffULL);
            return PellSolution{xz, mpz_class(static_cast<unsigned long>(y)), norm};
        }
    }
    return std::nullopt;
}

}  // namespace oracles
