#include "padicverify/characters.hpp"

#include <algorithm>
#include <numeric>

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_squarefree(const mpz_class& n) {
    mpz_class m = abs(n);
    for (mpz_class q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
    }
    return true;
}

}  // namespace

int kronecker_symbol(const mpz_class& a_in, const mpz_class& n_in) {
    mpz_class a = a_in, n = n_in;
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // (a/2) factor: 0 for even a, chi_8(a) otherwise.
    while (mpz_even_p(n.get_mpz_t())) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        n /= 2;
        unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), 8);
        if (r == 3 || r == 5) result = -result;
    }
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(const mpz_class& d) {
    if (d == 1 || d == 0) return false;
    unsigned long r4 = mpz_fdiv_ui(d.get_mpz_t(), 4);
    if (r4 == 1) return is_squarefree(d);
    if (r4 == 0) {
        mpz_class m = d / 4;
        unsigned long m4 = mpz_fdiv_ui(m.get_mpz_t(), 4);
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

DirichletChar trivial_char() { return DirichletChar{}; }

DirichletChar kronecker_char(const mpz_class& d) {
    require(d > 1, "need a fundamental discriminant > 1");
    require(is_fundamental_discriminant(d), "d is not a fundamental discriminant");
    DirichletChar chi;
    chi.kind = CharKind::quadratic;
    chi.conductor = mpz_get_si(d.get_mpz_t());
    chi.order = 2;
    chi.disc = d;
    chi.parity = kronecker_symbol(d, d - 1);
    require(chi.parity == 1, "real quadratic character must be even");
    return chi;
}

std::optional<long> eval_char_exponent(const DirichletChar& chi, const mpz_class& a) {
    if (chi.kind == CharKind::trivial) return 0;
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(chi.conductor));
    if (chi.kind == CharKind::quadratic) {
        int v = kronecker_symbol(chi.disc, r);
        if (v == 0) return std::nullopt;
        return v == 1 ? 0 : 1;
    }
    long e = chi.exponents[mpz_get_ui(r.get_mpz_t())];
    if (e < 0) return std::nullopt;
    return e;
}

int eval_char(const DirichletChar& chi, const mpz_class& a) {
    require(chi.exact_valued(), "character is not exactly valued");
    auto e = eval_char_exponent(chi, a);
    if (!e) return 0;
    return *e == 0 ? 1 : -1;
}

DirichletChar tabulated_char(long f, long m, const std::vector<long>& exponents) {
    require(f >= 1 && m >= 1, "conductor and order must be positive");
    require(exponents.size() == static_cast<size_t>(f), "exponent table size != f");
    DirichletChar chi;
    chi.kind = CharKind::tabulated;
    chi.conductor = f;
    chi.order = m;
    chi.exponents = exponents;
    for (long a = 0; a < f; ++a) {
        bool coprime = std::gcd(a, f) == 1;
        require(coprime == (exponents[a] >= 0), "zero pattern must match gcd(a,f)>1");
        if (coprime) require(exponents[a] < m, "exponent out of range");
    }
    require(f == 1 || exponents[1 % f] == 0, "chi(1) must be 1");
    // complete multiplicativity on units
    for (long a = 1; a < f; ++a) {
        if (std::gcd(a, f) != 1) continue;
        for (long b = a; b < f; ++b) {
            if (std::gcd(b, f) != 1) continue;
            long ab = (a * b) % f;
            require((exponents[a] + exponents[b]) % m == exponents[ab],
                    "character table is not multiplicative");
        }
    }
    // exact order m
    long g = m;
    for (long a = 0; a < f; ++a)
        if (exponents[a] > 0) g = std::gcd(g, exponents[a]);
    require(g == 1 || m == 1, "character order is smaller than declared");
    // primitivity: chi must be nontrivial on units congruent to 1 mod f/q
    for (long q : prime_factors(f)) {
        long fq = f / q;
        bool trivial_on_kernel = true;
        for (long a = 1; a < f; ++a) {
            if (std::gcd(a, f) != 1 || a % fq != 1 % fq) continue;
            if (exponents[a] != 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        require(!trivial_on_kernel, "character is induced from a smaller modulus");
    }
    chi.parity = f > 1 && exponents[f - 1] * 2 == m ? -1 : 1;
    if (f > 1 && exponents[f - 1] != 0 && exponents[f - 1] * 2 != m)
        throw std::invalid_argument("chi(-1) must be a square root of 1");
    return chi;
}

long least_primitive_root(long p) {
    std::vector<long> qs = prime_factors(p - 1);
    mpz_class pz = p;
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs) {
            mpz_class gz = g, r, e = (p - 1) / q;
            mpz_powm(r.get_mpz_t(), gz.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

bool embeds_in_zp(long f, long p) { return (p - 1) % f == 0; }

bool embeds_in_zp2(long f, long p) {
    return (static_cast<long long>(p) * p - 1) % f == 0;
}

EmbeddedRootOfUnity primitive_root_of_unity(long m, long p, int prec) {
    require(m >= 1, "order must be positive");
    if ((p - 1) % m != 0)
        throw std::domain_error("order does not divide p - 1: no embedding in Z_p");
    if (m == 1) return EmbeddedRootOfUnity{1, PadicInt(p, prec, 1)};
    long g = least_primitive_root(p);
    PadicInt seed = pow(PadicInt(p, prec, g), mpz_class((p - 1) / m));
    PadicInt xi = teichmuller(seed);
    for (long q : prime_factors(m)) {
        PadicInt t = pow(xi, mpz_class(m / q));
        require(!congruent_mod(t, PadicInt(p, prec, 1), 1), "root of unity not primitive");
    }
    return EmbeddedRootOfUnity{m, xi};
}

PadicInt gauss_sum(const DirichletChar& chi, long p, int prec) {
    long f = chi.conductor;
    if (chi.is_trivial()) return PadicInt(p, prec, 1);
    if (!embeds_in_zp(f, p))
        throw std::domain_error("conductor does not divide p - 1");
    EmbeddedRootOfUnity xi = primitive_root_of_unity(f, p, prec);
    EmbeddedRootOfUnity zeta_m = primitive_root_of_unity(chi.order, p, prec);
    PadicInt tau(p, prec, 0);
    PadicInt xia(p, prec, 1);
    for (long a = 1; a <= f; ++a) {
        xia = xia * xi.xi;
        auto e = eval_char_exponent(chi, a);
        if (!e) continue;
        tau = tau + pow(zeta_m.xi, mpz_class(*e)) * xia;
    }
    return tau;
}

QuadExt primitive_root_of_unity_ext(long m, long p, int prec) {
    require(m >= 1, "order must be positive");
    long long q2 = static_cast<long long>(p) * p - 1;
    if (q2 % m != 0)
        throw std::domain_error("order does not divide p^2 - 1");
    long c = least_nonresidue(p);
    // deterministic generator of F_{p^2}^*: the first a + theta of full order
    std::vector<long> qs;
    {
        long long n = q2;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                qs.push_back(static_cast<long>(d));
                while (n % d == 0) n /= d;
            }
        if (n > 1) qs.push_back(static_cast<long>(n));
    }
    long gen_a = -1;
    for (long a = 1; a < p && gen_a < 0; ++a) {
        QuadExt g(p, 1, c, a, 1);
        bool full = true;
        for (long q : qs) {
            QuadExt t = pow(g, mpz_class(static_cast<long>(q2 / q)));
            if (t.a == 1 && t.b == 0) {
                full = false;
                break;
            }
        }
        if (full) gen_a = a;
    }
    require(gen_a > 0, "no generator of F_{p^2} found");
    QuadExt gen(p, prec, c, gen_a, 1);
    QuadExt xi = teichmuller(pow(gen, mpz_class(static_cast<long>(q2 / m))));
    for (long q : prime_factors(m)) {
        QuadExt t = pow(xi, mpz_class(m / q));
        QuadExt one(p, prec, c, 1, 0);
        QuadExt diff = t - one;
        require(diff.valuation() == 0, "extension root of unity not primitive");
    }
    return xi;
}

QuadExt gauss_sum_ext(const DirichletChar& chi, long p, int prec) {
    long f = chi.conductor;
    require(!chi.is_trivial(), "Gauss sum of the trivial character is 1");
    if (!embeds_in_zp2(f, p))
        throw std::domain_error("conductor does not divide p^2 - 1");
    QuadExt xi = primitive_root_of_unity_ext(f, p, prec);
    require(chi.exact_valued(), "extension path supports exact-valued characters");
    QuadExt tau(p, prec, xi.c, 0, 0);
    QuadExt xia(p, prec, xi.c, 1, 0);
    for (long a = 1; a <= f; ++a) {
        xia = xia * xi;
        int v = eval_char(chi, a);
        if (v == 0) continue;
        tau = (v == 1) ? tau + xia : tau - xia;
    }
    return tau;
}

std::string embedding_description(long f, long p) {
    if (f == 1) return "rational";
    if (embeds_in_zp(f, p)) {
        long g = least_primitive_root(p);
        return "Zp:teichmuller(g=" + std::to_string(g) + ")";
    }
    if (embeds_in_zp2(f, p)) {
        long c = least_nonresidue(p);
        return "Zp2:theta^2=" + std::to_string(c);
    }
    return "none";
}

}  // namespace padicverify
