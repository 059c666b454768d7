#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padicverify {

/// p^k as an exact integer.
mpz_class pow_p(long p, int k);

/// Exact p-adic valuation of a nonzero integer.
int int_valuation(const mpz_class& n, long p);

/// A truncated p-adic integer: the class of `residue` modulo p^prec.
///
/// Values are immutable after construction and every operation is a pure
/// function.  Binary operations require equal primes and return a result at
/// the minimum of the operand precisions.  The residue is always kept
/// reduced into [0, p^prec).
struct PadicInt {
    long p = 5;
    int prec = 1;
    mpz_class residue;

    PadicInt() = default;
    PadicInt(long p_, int prec_, mpz_class value);
    PadicInt(long p_, int prec_, long value) : PadicInt(p_, prec_, mpz_class(value)) {}

    mpz_class modulus() const { return pow_p(p, prec); }
    bool is_zero() const { return residue == 0; }
    /// True when the residue is invertible, i.e. p does not divide it.
    bool is_unit() const;

    /// v_p of the value; returns prec when the residue is 0 (meaning ">= prec").
    int valuation() const;

    /// Same value at a lower absolute precision.
    PadicInt reduced_to(int new_prec) const;

    /// Rendering used by reports, e.g. "55 mod 5^3".
    std::string str() const;

    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p == b.p && a.prec == b.prec && a.residue == b.residue;
    }
};

PadicInt operator+(const PadicInt& a, const PadicInt& b);
PadicInt operator-(const PadicInt& a, const PadicInt& b);
PadicInt operator-(const PadicInt& a);
PadicInt operator*(const PadicInt& a, const PadicInt& b);
PadicInt operator*(const PadicInt& a, long b);
PadicInt operator+(const PadicInt& a, long b);
PadicInt operator-(const PadicInt& a, long b);

/// Multiplicative inverse of a unit, at the same precision.
PadicInt inverse(const PadicInt& a);

/// a^e for e >= 0.
PadicInt pow(const PadicInt& a, const mpz_class& e);

/// Exact division by p^k; requires v_p(a) >= k.  Precision drops by k.
PadicInt exact_div_p(const PadicInt& a, int k);

/// Congruence of two values modulo p^k (k at most both precisions).
bool congruent_mod(const PadicInt& a, const PadicInt& b, int k);

/// The Teichmuller representative: the unique (p-1)-th root of unity
/// congruent to z mod p, computed by iterated p-th powering.
PadicInt teichmuller(const PadicInt& z);

/// z = omega(z) * principal with principal = 1 mod p and
/// ztilde = (principal - 1) / p (one digit less precise).
struct UnitDecomposition {
    PadicInt omega;
    PadicInt principal;
    PadicInt ztilde;
};

UnitDecomposition unit_decompose(const PadicInt& z);

/// Iwasawa logarithm: log of the principal part via the 1-unit series,
/// normalized to vanish on roots of unity.  Result precision equals the
/// input precision; guard digits are handled internally.
PadicInt iwasawa_log(const PadicInt& z);

/// Fermat quotient Q_p(z): the residue of (z^{p-1} - 1)/p mod p.
/// Requires precision >= 2.
long fermat_quotient(const PadicInt& z);

/// Higher Fermat quotient Q_{p,n}(z): the truncation mod p^{n+1} of
/// -(1/p) log_p(1 + p*ztilde).  Requires precision >= n + 2.
PadicInt higher_fermat_quotient(const PadicInt& z, int n);

/// Square root of d in Z_p by Hensel lifting from the mod-p root.
/// Requires p odd, p not dividing d, d a quadratic residue mod p.  Of the
/// two roots, returns the one whose residue mod p lies in [1, (p-1)/2].
PadicInt hensel_sqrt(const mpz_class& d, long p, int prec);

/// True when n is a quadratic residue mod p (p an odd prime not dividing n).
bool is_quadratic_residue(const mpz_class& n, long p);

/// Guard digits used for log-series summation at target precision N.
int log_guard_digits(long p, int target_prec);

}  // namespace padicverify
