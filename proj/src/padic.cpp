#include "padicverify/padic.hpp"

#include <cmath>

namespace padicverify {

namespace {

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

mpz_class pow_p(long p, int k) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k));
    return m;
}

int int_valuation(const mpz_class& n, long p) {
    require(n != 0, "valuation of zero integer");
    mpz_class q = n, r;
    int v = 0;
    while (true) {
        mpz_class quo;
        r = q % p;
        if (r != 0) break;
        mpz_divexact_ui(quo.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
        q = quo;
        ++v;
    }
    return v;
}

PadicInt::PadicInt(long p_, int prec_, mpz_class value) : p(p_), prec(prec_) {
    require(p > 3 && (p & 1) && is_small_prime(p), "prime must be an odd prime > 3");
    require(prec >= 1, "precision must be >= 1");
    mpz_class m = modulus();
    mpz_mod(residue.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
}

bool PadicInt::is_unit() const { return mpz_fdiv_ui(residue.get_mpz_t(), p) != 0; }

int PadicInt::valuation() const {
    if (residue == 0) return prec;
    int v = int_valuation(residue, p);
    return v < prec ? v : prec;
}

PadicInt PadicInt::reduced_to(int new_prec) const {
    require(new_prec >= 1 && new_prec <= prec, "cannot raise precision by reduction");
    return PadicInt(p, new_prec, residue);
}

std::string PadicInt::str() const {
    return residue.get_str() + " mod " + std::to_string(p) + "^" + std::to_string(prec);
}

namespace {

int common_prec(const PadicInt& a, const PadicInt& b) {
    require(a.p == b.p, "prime mismatch");
    return a.prec < b.prec ? a.prec : b.prec;
}

}  // namespace

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    return PadicInt(a.p, common_prec(a, b), a.residue + b.residue);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    return PadicInt(a.p, common_prec(a, b), a.residue - b.residue);
}

PadicInt operator-(const PadicInt& a) { return PadicInt(a.p, a.prec, -a.residue); }

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    return PadicInt(a.p, common_prec(a, b), a.residue * b.residue);
}

PadicInt operator*(const PadicInt& a, long b) {
    return PadicInt(a.p, a.prec, a.residue * b);
}

PadicInt operator+(const PadicInt& a, long b) {
    return PadicInt(a.p, a.prec, a.residue + b);
}

PadicInt operator-(const PadicInt& a, long b) {
    return PadicInt(a.p, a.prec, a.residue - b);
}

PadicInt inverse(const PadicInt& a) {
    require(a.is_unit(), "inversion of a non-unit");
    mpz_class m = a.modulus(), inv;
    int ok = mpz_invert(inv.get_mpz_t(), a.residue.get_mpz_t(), m.get_mpz_t());
    require(ok != 0, "inversion failed");
    return PadicInt(a.p, a.prec, inv);
}

PadicInt pow(const PadicInt& a, const mpz_class& e) {
    require(e >= 0, "negative exponent");
    mpz_class m = a.modulus(), r;
    mpz_powm(r.get_mpz_t(), a.residue.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return PadicInt(a.p, a.prec, r);
}

PadicInt exact_div_p(const PadicInt& a, int k) {
    require(k >= 0 && k < a.prec, "division shift exceeds precision");
    if (k == 0) return a;
    require(a.valuation() >= k, "value not divisible by p^k");
    mpz_class q, pk = pow_p(a.p, k);
    mpz_divexact(q.get_mpz_t(), a.residue.get_mpz_t(), pk.get_mpz_t());
    return PadicInt(a.p, a.prec - k, q);
}

bool congruent_mod(const PadicInt& a, const PadicInt& b, int k) {
    require(a.p == b.p, "prime mismatch");
    require(k <= a.prec && k <= b.prec, "congruence modulus exceeds precision");
    mpz_class m = pow_p(a.p, k);
    return mpz_congruent_p(a.residue.get_mpz_t(), b.residue.get_mpz_t(), m.get_mpz_t()) != 0;
}

PadicInt teichmuller(const PadicInt& z) {
    require(z.is_unit(), "Teichmuller representative of a non-unit");
    // z^(p^k) stabilizes mod p^(k+1); prec iterations are always enough.
    mpz_class m = z.modulus();
    mpz_class w = z.residue;
    mpz_class prev;
    for (int i = 0; i < z.prec; ++i) {
        prev = w;
        mpz_powm_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(z.p),
                    m.get_mpz_t());
        if (w == prev) break;
    }
    return PadicInt(z.p, z.prec, w);
}

UnitDecomposition unit_decompose(const PadicInt& z) {
    require(z.is_unit(), "unit decomposition of a non-unit");
    require(z.prec >= 2, "precision >= 2 required for ztilde");
    PadicInt omega = teichmuller(z);
    PadicInt principal = z * inverse(omega);
    PadicInt ztilde = exact_div_p(principal - 1, 1);
    return UnitDecomposition{omega, principal, ztilde};
}

int log_guard_digits(long p, int target_prec) {
    int g = 0;
    long v = 1;
    while (v < target_prec) {
        v *= p;
        ++g;
    }
    return g + 2;
}

namespace {

// log(1+x) for v_p(x) >= 1, summed mod p^W; every term is exact mod
// p^(W - v_p(k)), so the caller must leave guard digits below W.
mpz_class one_unit_log(const mpz_class& x, long p, int W) {
    mpz_class m = pow_p(p, W);
    mpz_class xp = 1, term, sum = 0;
    for (int k = 1; k <= W; ++k) {
        xp = (xp * x) % m;
        if (xp == 0) break;
        term = xp;
        long kk = k;
        while (kk % p == 0) {
            mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(),
                            static_cast<unsigned long>(p));
            kk /= p;
        }
        if (kk > 1) {
            mpz_class inv, kz = kk;
            mpz_invert(inv.get_mpz_t(), kz.get_mpz_t(), m.get_mpz_t());
            term = (term * inv) % m;
        }
        if (k & 1)
            sum += term;
        else
            sum -= term;
    }
    mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), m.get_mpz_t());
    return sum;
}

}  // namespace

PadicInt iwasawa_log(const PadicInt& z) {
    require(z.is_unit(), "Iwasawa logarithm of a non-unit");
    int N = z.prec;
    int W = N + log_guard_digits(z.p, N);
    // Any lift of the residue to precision W yields the same log mod p^N.
    PadicInt zw(z.p, W, z.residue);
    PadicInt omega = teichmuller(zw);
    PadicInt u = zw * inverse(omega);
    mpz_class x = u.residue - 1;
    mpz_class s = one_unit_log(x, z.p, W);
    return PadicInt(z.p, N, s);
}

long fermat_quotient(const PadicInt& z) {
    require(z.is_unit(), "Fermat quotient of a non-unit");
    require(z.prec >= 2, "Fermat quotient needs precision >= 2");
    mpz_class p2 = pow_p(z.p, 2);
    mpz_class t;
    mpz_powm_ui(t.get_mpz_t(), z.residue.get_mpz_t(),
                static_cast<unsigned long>(z.p - 1), p2.get_mpz_t());
    t -= 1;
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(z.p));
    return mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(z.p));
}

PadicInt higher_fermat_quotient(const PadicInt& z, int n) {
    require(n >= 1, "level n must be >= 1");
    require(z.prec >= n + 2, "precision >= n + 2 required");
    PadicInt lg = iwasawa_log(z.reduced_to(n + 2));
    PadicInt q = exact_div_p(lg, 1);  // precision n + 1
    return -q;
}

bool is_quadratic_residue(const mpz_class& n, long p) {
    mpz_class pz = p;
    require(mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) == 0,
            "p divides n");
    return mpz_legendre(n.get_mpz_t(), pz.get_mpz_t()) == 1;
}

PadicInt hensel_sqrt(const mpz_class& d, long p, int prec) {
    require(p > 3 && is_small_prime(p), "prime must be an odd prime > 3");
    require(mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0,
            "p divides d");
    if (!is_quadratic_residue(d, p))
        throw std::domain_error("d is not a quadratic residue mod p");
    unsigned long dp = mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p));
    long r0 = -1;
    for (long r = 1; r <= (p - 1) / 2; ++r) {
        if (static_cast<unsigned long>(r) * static_cast<unsigned long>(r) % p == dp) {
            r0 = r;
            break;
        }
    }
    require(r0 > 0, "no square root found");  // unreachable after the residue test
    // Newton: r <- (r + d/r)/2, doubling the valid precision each step.
    mpz_class r = r0;
    int k = 1;
    while (k < prec) {
        k = std::min(2 * k, prec);
        mpz_class m = pow_p(p, k), inv_r, inv_2, two = 2;
        mpz_invert(inv_r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        mpz_invert(inv_2.get_mpz_t(), two.get_mpz_t(), m.get_mpz_t());
        r = ((r + d * inv_r) % m * inv_2) % m;
    }
    PadicInt root(p, prec, r);
    long rp = mpz_fdiv_ui(root.residue.get_mpz_t(), static_cast<unsigned long>(p));
    if (rp > (p - 1) / 2) root = -root;
    return root;
}

}  // namespace padicverify
