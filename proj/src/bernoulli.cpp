#include "padicverify/bernoulli.hpp"

#include <mutex>

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int rational_valuation(const BigRational& q, long p) {
    require(q != 0, "valuation of zero rational");
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)))
        return int_valuation(num, p);
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        return -int_valuation(den, p);
    return 0;
}

PadicInt padic_of_rational(const BigRational& q, long p, int prec) {
    mpz_class den = q.get_den();
    require(mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) == 0,
            "rational is not p-integral");
    mpz_class m = pow_p(p, prec), inv;
    mpz_class d;
    mpz_mod(d.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    return PadicInt(p, prec, q.get_num() * inv);
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

BigRational bernoulli_number(unsigned n) {
    static std::vector<BigRational> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) {
        cache.emplace_back(1);
        cache.emplace_back(-1, 2);
    }
    while (cache.size() <= n) {
        unsigned i = cache.size();
        // sum_{k<i} C(i+1,k) B_k = 0
        BigRational acc = 0;
        mpz_class c = 1;  // C(i+1, k) built incrementally
        for (unsigned k = 0; k < i; ++k) {
            if (k > 0) {
                c *= (i + 2 - k);
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
            } else {
                c = 1;
            }
            if (k >= 3 && (k & 1)) continue;  // odd B_k vanish
            acc += BigRational(c) * cache[k];
        }
        acc /= static_cast<long>(i) + 1;
        cache.push_back(-acc);
    }
    return cache[n];
}

BigRational bernoulli_poly(unsigned n, const BigRational& x) {
    BigRational acc = 0, xpow = 1;
    // accumulate from k = n down so x powers build upward
    for (unsigned k = 0; k <= n; ++k) {
        unsigned j = n - k;  // coefficient index C(n,j) B_j x^k with j = n-k
        acc += BigRational(binomial(n, j)) * bernoulli_number(j) * xpow;
        xpow *= x;
    }
    return acc;
}

BigRational gen_bernoulli_exact(unsigned n, const DirichletChar& chi) {
    require(n >= 1, "n must be positive");
    require(chi.exact_valued(), "exact path needs an exactly-valued character");
    long f = chi.conductor;
    // B_{n,chi} = sum_k C(n,k) B_k f^{k-1} T_{n-k}, T_j = sum_a chi(a) a^j
    std::vector<mpz_class> T(n + 1, mpz_class(0));
    for (long a = 1; a <= f; ++a) {
        int v = eval_char(chi, a);
        if (v == 0) continue;
        mpz_class pw = 1;
        for (unsigned j = 0; j <= n; ++j) {
            if (v == 1)
                T[j] += pw;
            else
                T[j] -= pw;
            pw *= a;
        }
    }
    BigRational acc = 0;
    BigRational fpow(1, f);  // f^{k-1}
    for (unsigned k = 0; k <= n; ++k) {
        if (!(k >= 3 && (k & 1)))
            acc += BigRational(binomial(n, k)) * bernoulli_number(k) * fpow *
                   BigRational(T[n - k]);
        fpow *= f;
    }
    return acc;
}

namespace {

// Power sums S_t(X) = sum_{a=1}^{X} chi(a) a^t mod p^mw for t = 0..n, at
// X = f p^k, computed by lifting level by level:
//   S_t(pX) = sum_j C(t,j) X^j R_j S_{t-j}(X),  R_j = sum_{r<p} r^j.
// Work per lift level shrinks as X^j dies mod p^mw.
std::vector<mpz_class> char_power_sums(unsigned n, const DirichletChar& chi, long p,
                                       int k, int mw) {
    long f = chi.conductor;
    mpz_class m = pow_p(p, mw);

    // embedded character values (exact characters avoid the table)
    std::vector<mpz_class> chival;
    bool exact = chi.exact_valued();
    if (!exact) {
        require((p - 1) % chi.order == 0, "character order must divide p - 1");
        EmbeddedRootOfUnity zeta = primitive_root_of_unity(chi.order, p, mw);
        chival.resize(chi.order);
        PadicInt zp(p, mw, 1);
        for (long e = 0; e < chi.order; ++e) {
            chival[e] = zp.residue;
            zp = zp * zeta.xi;
        }
    }

    // base level: X = f*p directly
    std::vector<mpz_class> S(n + 1, mpz_class(0));
    long X1 = f * p;
    mpz_class pw;
    for (long a = 1; a <= X1; ++a) {
        auto e = eval_char_exponent(chi, a);
        if (!e) continue;
        pw = 1;
        if (exact) {
            bool pos = (*e == 0);
            for (unsigned t = 0; t <= n; ++t) {
                if (pos)
                    S[t] += pw;
                else
                    S[t] -= pw;
                pw = (pw * a) % m;
            }
        } else {
            const mpz_class& cv = chival[*e];
            for (unsigned t = 0; t <= n; ++t) {
                S[t] += cv * pw;
                pw = (pw * a) % m;
            }
        }
    }
    for (auto& s : S) mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());

    // Pascal triangle mod m for the small column range used by the lifts
    int jcap = mw;  // j with j*level >= mw never contributes; level >= 1
    std::vector<std::vector<mpz_class>> binom(n + 1);
    for (unsigned t = 0; t <= n; ++t) {
        int width = std::min<int>(t, jcap) + 1;
        binom[t].assign(width, mpz_class(0));
        binom[t][0] = 1;
        for (int j = 1; j < width; ++j) {
            binom[t][j] = binom[t - 1][j - 1];
            if (j < static_cast<int>(binom[t - 1].size()))
                binom[t][j] += binom[t - 1][j];
            mpz_mod(binom[t][j].get_mpz_t(), binom[t][j].get_mpz_t(), m.get_mpz_t());
        }
    }

    // R_j = sum_{r=0}^{p-1} r^j mod m (0^0 = 1)
    std::vector<mpz_class> R(jcap + 1, mpz_class(0));
    R[0] = p;
    for (long r = 1; r < p; ++r) {
        mpz_class rp = 1;
        for (int j = 1; j <= jcap; ++j) {
            rp = (rp * r) % m;
            R[j] += rp;
        }
    }
    for (auto& v : R) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());

    std::vector<mpz_class> next(n + 1);
    for (int level = 1; level < k; ++level) {
        // X = f * p^level; W_j = C-free part X^j R_j
        mpz_class X;
        mpz_class plevel = pow_p(p, level);
        X = plevel * f;
        int jmax = (mw + level - 1) / level - 1;  // largest j with j*level < mw
        if (jmax > jcap) jmax = jcap;
        std::vector<mpz_class> W(jmax + 1);
        mpz_class Xj = 1;
        for (int j = 0; j <= jmax; ++j) {
            W[j] = (Xj * R[j]) % m;
            Xj = (Xj * X) % m;
        }
        for (unsigned t = 0; t <= n; ++t) {
            mpz_class acc = 0;
            int jm = std::min<int>(jmax, t);
            for (int j = 0; j <= jm; ++j) {
                if (W[j] == 0) continue;
                acc += binom[t][j] * W[j] % m * S[t - j];
            }
            mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
            next[t] = acc;
        }
        S.swap(next);
    }
    return S;
}

PadicScaled power_sum_value(unsigned n, const DirichletChar& chi, long p, int k,
                            int target) {
    int mw = k + target;
    std::vector<mpz_class> S = char_power_sums(n, chi, p, k, mw);
    mpz_class sn = S[n];
    long f = chi.conductor;
    PadicInt finv = inverse(PadicInt(p, target, f));
    if (sn == 0) {
        // B = 0 mod p^(mw - k), which covers the target
        return PadicScaled{0, PadicInt(p, target, 0)};
    }
    int v = int_valuation(sn, p);
    if (v >= k) {
        // p-integral: B mod p^target is (S / p^k) / f
        mpz_class q;
        mpz_class pk = pow_p(p, k);
        mpz_divexact(q.get_mpz_t(), sn.get_mpz_t(), pk.get_mpz_t());
        return PadicScaled{0, PadicInt(p, target, q) * finv};
    }
    // non-integral: B = p^(v-k) * unit with unit known mod p^(mw - v)
    mpz_class unit;
    mpz_class pv = pow_p(p, v);
    mpz_divexact(unit.get_mpz_t(), sn.get_mpz_t(), pv.get_mpz_t());
    return PadicScaled{v - k, PadicInt(p, target, unit) * finv};
}

}  // namespace

PadicScaled gen_bernoulli_padic(unsigned n, const DirichletChar& chi, long p,
                                int target) {
    require(n >= 1, "n must be positive");
    require(target >= 1, "target precision must be >= 1");
    require(chi.conductor % p != 0, "p must not divide the conductor");
    const int k0 = target + 2;
    const int kmax = k0 + 4;
    PadicScaled prev = power_sum_value(n, chi, p, k0, target);
    for (int k = k0 + 1; k <= kmax; ++k) {
        PadicScaled cur = power_sum_value(n, chi, p, k, target);
        if (cur.shift == prev.shift && cur.value == prev.value) return cur;
        prev = cur;
    }
    throw std::runtime_error("power-sum path failed to converge (precision bug?)");
}

BigRational classical_L_value(unsigned n, const DirichletChar& chi) {
    require(n >= 1, "n must be positive");
    return -gen_bernoulli_exact(n, chi) / static_cast<long>(n);
}

BigRational zeta_ratio(const std::vector<DirichletChar>& nontrivial_chars, unsigned s) {
    BigRational acc = 1;
    for (const auto& chi : nontrivial_chars) {
        require(!chi.is_trivial(), "ratio takes nontrivial characters only");
        acc *= classical_L_value(s, chi);
    }
    return acc;
}

PadicScaled gen_bernoulli_auto(unsigned n, const DirichletChar& chi, long p, int target,
                               unsigned exact_bound) {
    if (n <= exact_bound && chi.exact_valued()) {
        BigRational b = gen_bernoulli_exact(n, chi);
        if (b == 0) return PadicScaled{0, PadicInt(p, target, 0)};
        int v = rational_valuation(b, p);
        if (v >= 0) return PadicScaled{0, padic_of_rational(b, p, target)};
        BigRational unit = b * BigRational(pow_p(p, -v));
        return PadicScaled{v, padic_of_rational(unit, p, target)};
    }
    return gen_bernoulli_padic(n, chi, p, target);
}

PadicInt l_value_padic(unsigned s, const DirichletChar& chi, long p, int prec,
                       unsigned exact_bound) {
    require(!chi.is_trivial(), "p-adic classical L path takes nontrivial characters");
    int vs = int_valuation(mpz_class(s), p);
    long sunit = static_cast<long>(s);
    while (sunit % p == 0) sunit /= p;
    PadicScaled b = gen_bernoulli_auto(s, chi, p, prec + vs, exact_bound);
    if (b.shift != 0)
        throw std::runtime_error("B_{n,chi} unexpectedly non p-integral");
    if (b.value.valuation() < vs)
        throw std::runtime_error("L(1-s;chi) unexpectedly non p-integral");
    PadicInt q = exact_div_p(b.value, vs);  // precision prec
    return -(q * inverse(PadicInt(p, prec, sunit)));
}

PadicInt zeta_ratio_padic(const std::vector<DirichletChar>& nontrivial_chars,
                          unsigned s, long p, int prec, unsigned exact_bound) {
    PadicInt acc(p, prec, 1);
    for (const auto& chi : nontrivial_chars)
        acc = acc * l_value_padic(s, chi, p, prec, exact_bound);
    return acc;
}

}  // namespace padicverify
