#pragma once

#include "padicverify/characters.hpp"
#include "padicverify/padic.hpp"

#include <vector>

namespace padicverify {

using BigRational = mpq_class;

/// v_p of a nonzero rational (negative when p divides the denominator).
int rational_valuation(const BigRational& q, long p);

/// Reduce a p-integral rational mod p^prec.
PadicInt padic_of_rational(const BigRational& q, long p, int prec);

/// p^shift * value with value p-integral; shift < 0 records a non-integral
/// result (generalized von Staudt denominators).
struct PadicScaled {
    int shift = 0;
    PadicInt value;

    bool integral() const { return shift >= 0; }
};

/// Exact Bernoulli number B_n, convention B_1 = -1/2.  Cached; the cache
/// fill is idempotent and safe under concurrent readers.
BigRational bernoulli_number(unsigned n);

/// Bernoulli polynomial B_n(x) = sum C(n,k) B_k x^(n-k).
BigRational bernoulli_poly(unsigned n, const BigRational& x);

mpz_class binomial(unsigned long n, unsigned long k);

/// Generalized Bernoulli number B_{n,chi} for an exactly-valued chi,
/// via B_{n,chi} = f^{n-1} sum_a chi(a) B_n(a/f).
BigRational gen_bernoulli_exact(unsigned n, const DirichletChar& chi);

/// B_{n,chi} mod p^target by the power-sum limit
///   (1/(f p^k)) sum_{a=1}^{f p^k} chi(a) a^n,
/// with k raised from target+2 until two successive k agree mod p^target.
/// Independent of the exact path.  Requires p not dividing f; tabulated
/// characters additionally need order | p - 1.
PadicScaled gen_bernoulli_padic(unsigned n, const DirichletChar& chi, long p, int target);

/// Classical L(1-n; chi) = -B_{n,chi}/n, exact.
BigRational classical_L_value(unsigned n, const DirichletChar& chi);

/// zeta_K(1-s)/zeta(1-s) = prod over nontrivial chi of L(1-s; chi), exact.
BigRational zeta_ratio(const std::vector<DirichletChar>& nontrivial_chars, unsigned s);

/// Classical L(1-s; chi) mod p^prec for nontrivial chi; routes through the
/// exact path when s <= exact_bound and the power-sum path otherwise.
PadicInt l_value_padic(unsigned s, const DirichletChar& chi, long p, int prec,
                       unsigned exact_bound = 400);

/// Same ratio as zeta_ratio, reduced mod p^prec.
PadicInt zeta_ratio_padic(const std::vector<DirichletChar>& nontrivial_chars,
                          unsigned s, long p, int prec,
                          unsigned exact_bound = 400);

/// B_{n,chi} mod p^target routed by the same bound.
PadicScaled gen_bernoulli_auto(unsigned n, const DirichletChar& chi, long p, int target,
                               unsigned exact_bound = 400);

}  // namespace padicverify
