#include "padicverify/qext.hpp"

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_compat(const QuadExt& x, const QuadExt& y) {
    require(x.p == y.p && x.c == y.c, "quadratic extension mismatch");
}

}  // namespace

QuadExt::QuadExt(long p_, int prec_, long c_, mpz_class a_, mpz_class b_)
    : p(p_), prec(prec_), c(c_) {
    require(prec >= 1, "precision must be >= 1");
    mpz_class m = pow_p(p, prec);
    mpz_mod(a.get_mpz_t(), a_.get_mpz_t(), m.get_mpz_t());
    mpz_mod(b.get_mpz_t(), b_.get_mpz_t(), m.get_mpz_t());
}

long least_nonresidue(long p) {
    for (long c = 2; c < p; ++c) {
        mpz_class cz = c, pz = p;
        if (mpz_legendre(cz.get_mpz_t(), pz.get_mpz_t()) == -1) return c;
    }
    throw std::logic_error("no non-residue found");
}

bool QuadExt::is_unit() const {
    // Unit iff the image in F_{p^2} is nonzero, i.e. not both a, b in pZ_p.
    return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)) != 0 ||
           mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

int QuadExt::valuation() const {
    int va = (a == 0) ? prec : std::min(int_valuation(a, p), prec);
    int vb = (b == 0) ? prec : std::min(int_valuation(b, p), prec);
    return va < vb ? va : vb;
}

QuadExt qext_from(const PadicInt& x, long c) {
    return QuadExt(x.p, x.prec, c, x.residue, 0);
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check_compat(x, y);
    return QuadExt(x.p, std::min(x.prec, y.prec), x.c, x.a + y.a, x.b + y.b);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check_compat(x, y);
    return QuadExt(x.p, std::min(x.prec, y.prec), x.c, x.a - y.a, x.b - y.b);
}

QuadExt operator-(const QuadExt& x) { return QuadExt(x.p, x.prec, x.c, -x.a, -x.b); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check_compat(x, y);
    return QuadExt(x.p, std::min(x.prec, y.prec), x.c,
                   x.a * y.a + x.c * (x.b * y.b), x.a * y.b + x.b * y.a);
}

QuadExt frobenius(const QuadExt& x) { return QuadExt(x.p, x.prec, x.c, x.a, -x.b); }

PadicInt norm(const QuadExt& x) {
    return PadicInt(x.p, x.prec, x.a * x.a - x.c * (x.b * x.b));
}

QuadExt inverse(const QuadExt& x) {
    require(x.is_unit(), "inversion of a non-unit");
    PadicInt n_inv = inverse(norm(x));
    QuadExt conj = frobenius(x);
    return QuadExt(x.p, x.prec, x.c, conj.a * n_inv.residue, conj.b * n_inv.residue);
}

QuadExt pow(const QuadExt& x, const mpz_class& e) {
    require(e >= 0, "negative exponent");
    QuadExt r(x.p, x.prec, x.c, 1, 0);
    QuadExt base = x;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

QuadExt reduced_to(const QuadExt& x, int new_prec) {
    return QuadExt(x.p, new_prec, x.c, x.a, x.b);
}

QuadExt teichmuller(const QuadExt& z) {
    require(z.is_unit(), "Teichmuller representative of a non-unit");
    mpz_class e = mpz_class(z.p) * z.p;
    QuadExt w = z, prev = z;
    for (int i = 0; i < z.prec; ++i) {
        prev = w;
        w = pow(w, e);
        if (w == prev) break;
    }
    return w;
}

QuadExt iwasawa_log(const QuadExt& z) {
    require(z.is_unit(), "Iwasawa logarithm of a non-unit");
    int N = z.prec;
    int W = N + log_guard_digits(z.p, N);
    QuadExt zw = QuadExt(z.p, W, z.c, z.a, z.b);
    QuadExt omega = teichmuller(zw);
    QuadExt u = zw * inverse(omega);
    QuadExt x = u - QuadExt(z.p, W, z.c, 1, 0);  // v_p(x) >= 1
    mpz_class m = pow_p(z.p, W);
    QuadExt xp(z.p, W, z.c, 1, 0), sum(z.p, W, z.c, 0, 0);
    for (int k = 1; k <= W; ++k) {
        xp = xp * x;
        if (xp.a == 0 && xp.b == 0) break;
        QuadExt term = xp;
        long kk = k;
        while (kk % z.p == 0) {
            mpz_divexact_ui(term.a.get_mpz_t(), term.a.get_mpz_t(),
                            static_cast<unsigned long>(z.p));
            mpz_divexact_ui(term.b.get_mpz_t(), term.b.get_mpz_t(),
                            static_cast<unsigned long>(z.p));
            kk /= z.p;
        }
        if (kk > 1) {
            mpz_class inv, kz = kk;
            mpz_invert(inv.get_mpz_t(), kz.get_mpz_t(), m.get_mpz_t());
            term = QuadExt(z.p, W, z.c, term.a * inv, term.b * inv);
        }
        sum = (k & 1) ? sum + term : sum - term;
    }
    return reduced_to(sum, N);
}

}  // namespace padicverify
