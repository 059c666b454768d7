#include "padicverify/lfunctions.hpp"

#include "padicverify/qext.hpp"

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// defining sum over Z_p, for f | p - 1
PadicInt leopoldt_sum_zp(const DirichletChar& chi, long p, int prec) {
    long f = chi.conductor;
    EmbeddedRootOfUnity xi = primitive_root_of_unity(f, p, prec);
    EmbeddedRootOfUnity zeta = primitive_root_of_unity(chi.order, p, prec);
    PadicInt one(p, prec, 1);
    PadicInt sum(p, prec, 0);
    PadicInt xia = one;
    for (long a = 1; a <= f; ++a) {
        xia = xia * xi.xi;
        auto e = eval_char_exponent(chi, a);
        if (!e) continue;
        PadicInt arg = one - xia;
        require(arg.is_unit(), "1 - xi^a must be a unit when p does not divide f");
        PadicInt lg = iwasawa_log(arg);
        long econj = (chi.order - *e) % chi.order;
        sum = sum + pow(zeta.xi, mpz_class(econj)) * lg;
    }
    PadicInt tau = gauss_sum(chi, p, prec);
    return -(tau * inverse(PadicInt(p, prec, f)) * sum);
}

// defining sum through the quadratic unramified extension, for f | p^2 - 1
PadicInt leopoldt_sum_zp2(const DirichletChar& chi, long p, int prec) {
    require(chi.exact_valued(), "extension path supports exact-valued characters");
    long f = chi.conductor;
    QuadExt xi = primitive_root_of_unity_ext(f, p, prec);
    QuadExt one(p, prec, xi.c, 1, 0);
    QuadExt sum(p, prec, xi.c, 0, 0);
    QuadExt xia = one;
    for (long a = 1; a <= f; ++a) {
        xia = xia * xi;
        int v = eval_char(chi, a);
        if (v == 0) continue;
        QuadExt arg = one - xia;
        require(arg.is_unit(), "1 - xi^a must be a unit when p does not divide f");
        QuadExt lg = iwasawa_log(arg);
        sum = (v == 1) ? sum + lg : sum - lg;
    }
    QuadExt tau = gauss_sum_ext(chi, p, prec);
    QuadExt total = tau * sum;
    // tau * sum is Galois-stable, hence lies in Z_p
    require(total.b == 0, "Leopoldt sum did not descend to Z_p");
    PadicInt finv = inverse(PadicInt(p, prec, f));
    return -(total.zp_part() * finv);
}

}  // namespace

LpValue leopoldt_Lp(const DirichletChar& chi, long p, int prec) {
    require(!chi.is_trivial(), "Leopoldt sum needs a nontrivial character");
    require(chi.parity == 1, "Leopoldt sum needs an even character");
    long f = chi.conductor;
    require(f % p != 0, "p must not divide the conductor");
    LpValue out;
    out.chi = chi;
    out.p = p;
    out.embedding = embedding_description(f, p);
    if (embeds_in_zp(f, p) && (p - 1) % chi.order == 0) {
        out.value = leopoldt_sum_zp(chi, p, prec);
    } else if (embeds_in_zp2(f, p) && chi.exact_valued()) {
        out.value = leopoldt_sum_zp2(chi, p, prec);
    } else {
        throw std::domain_error("conductor does not divide p^2 - 1: no embedding");
    }
    out.provenance = "defining-sum";
    return out;
}

PadicInt char_value_padic(const DirichletChar& chi, const mpz_class& a, long p, int prec) {
    auto e = eval_char_exponent(chi, a);
    if (!e) return PadicInt(p, prec, 0);
    if (chi.exact_valued()) return PadicInt(p, prec, *e == 0 ? 1 : -1);
    EmbeddedRootOfUnity zeta = primitive_root_of_unity(chi.order, p, prec);
    return pow(zeta.xi, mpz_class(*e));
}

LpValue kubota_leopoldt_special(const DirichletChar& chi, unsigned s, long p, int prec,
                                unsigned exact_bound) {
    require(!chi.is_trivial(), "special values are evaluated for nontrivial chi");
    require(chi.conductor % p != 0, "p must not divide the conductor");
    require(s >= 1 && s % static_cast<unsigned>(p - 1) == 0,
            "s must be a positive multiple of p - 1");
    int vs = int_valuation(mpz_class(s), p);
    long sunit = static_cast<long>(s);
    while (sunit % p == 0) sunit /= p;
    int W = prec + vs;
    PadicScaled b = gen_bernoulli_auto(s, chi, p, W, exact_bound);
    if (b.shift != 0) throw std::runtime_error("B_{s,chi} unexpectedly non p-integral");
    // Euler factor 1 - chi(p) p^{s-1}; vanishes mod p^W once s-1 >= W
    PadicInt euler(p, W, 1);
    if (static_cast<int>(s) - 1 < W) {
        PadicInt chip = char_value_padic(chi, mpz_class(p), p, W);
        euler = euler - PadicInt(p, W, chip.residue * pow_p(p, static_cast<int>(s) - 1));
    }
    PadicInt num = euler * b.value;
    require(num.is_zero() || num.valuation() >= vs, "L_p(1-s) not p-integral");
    PadicInt q = exact_div_p(num, vs);
    LpValue out;
    out.chi = chi;
    out.p = p;
    out.value = -(q * inverse(PadicInt(p, prec, sunit)));
    out.provenance = "bernoulli-interpolation";
    out.embedding = chi.exact_valued() ? "rational" : embedding_description(chi.order, p);
    return out;
}

PadicInt kubota_leopoldt_at_1(const DirichletChar& chi, long p, int prec) {
    LpValue L = leopoldt_Lp(chi, p, prec + 1);
    PadicInt chip = char_value_padic(chi, mpz_class(p), p, prec + 1);
    PadicInt scaled = (PadicInt(p, prec + 1, p) - chip) * L.value;
    require(scaled.valuation() >= 1, "(p - chi(p)) * L must be divisible by p");
    return exact_div_p(scaled, 1);
}

PadicInt relative_zeta_p_at_1(const std::vector<DirichletChar>& nontrivial_chars,
                              long p, int prec) {
    PadicInt acc(p, prec, 1);
    for (const auto& chi : nontrivial_chars) {
        require(!chi.is_trivial(), "product runs over nontrivial characters");
        acc = acc * kubota_leopoldt_at_1(chi, p, prec);
    }
    return acc;
}

PadicInt leopoldt_product(const std::vector<DirichletChar>& nontrivial_chars,
                          long p, int prec) {
    PadicInt acc(p, prec, 1);
    for (const auto& chi : nontrivial_chars) {
        require(!chi.is_trivial(), "product runs over nontrivial characters");
        acc = acc * leopoldt_Lp(chi, p, prec).value;
    }
    return acc;
}

}  // namespace padicverify
