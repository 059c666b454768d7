#pragma once

#include "padicverify/padic.hpp"

namespace padicverify {

/// Element a + b*theta of the unramified quadratic extension ring
/// Z_p[theta]/(theta^2 - c), with c a fixed quadratic non-residue mod p.
/// Used to realize roots of unity of order f when f divides p^2 - 1 but
/// not p - 1; every quantity returned to callers is Galois-stable and
/// lands back in Z_p.
struct QuadExt {
    long p = 5;
    int prec = 1;
    long c = 2;  // non-residue defining theta^2 = c
    mpz_class a, b;

    QuadExt() = default;
    QuadExt(long p_, int prec_, long c_, mpz_class a_, mpz_class b_);

    bool is_zp() const { return b == 0; }
    bool is_unit() const;
    /// min(v_p(a), v_p(b)); prec when both are 0.
    int valuation() const;
    PadicInt zp_part() const { return PadicInt(p, prec, a); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.p == y.p && x.prec == y.prec && x.c == y.c && x.a == y.a && x.b == y.b;
    }
};

/// Smallest quadratic non-residue mod p.
long least_nonresidue(long p);

QuadExt qext_from(const PadicInt& x, long c);
QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);
QuadExt operator*(const QuadExt& x, const QuadExt& y);

/// Frobenius of Z_{p^2}/Z_p, i.e. theta -> -theta.
QuadExt frobenius(const QuadExt& x);
/// Norm to Z_p: x * frobenius(x).
PadicInt norm(const QuadExt& x);
QuadExt inverse(const QuadExt& x);
QuadExt pow(const QuadExt& x, const mpz_class& e);
QuadExt reduced_to(const QuadExt& x, int new_prec);

/// Teichmuller representative in Z_{p^2}: the root of unity of order
/// dividing p^2 - 1 congruent to z mod p, by iterated p^2-th powering.
QuadExt teichmuller(const QuadExt& z);

/// Iwasawa logarithm on units of the quadratic extension.
QuadExt iwasawa_log(const QuadExt& z);

}  // namespace padicverify
