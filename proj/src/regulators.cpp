#include "padicverify/regulators.hpp"

#include "padicverify/characters.hpp"
#include "padicverify/lfunctions.hpp"

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// determinant of an integer matrix by Laplace expansion (g-1 <= 4 here)
mpz_class det_mpz(std::vector<std::vector<mpz_class>> M) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    mpz_class acc = 0;
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j] == 0) continue;
        std::vector<std::vector<mpz_class>> minor(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(M[r][c]);
        mpz_class term = M[0][j] * det_mpz(std::move(minor));
        if (j & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

void check_square(const EmbeddingMatrix& units) {
    require(!units.empty(), "empty embedding matrix");
    for (const auto& row : units)
        require(row.size() == units.size(), "embedding matrix must be square");
}

}  // namespace

long regulator_mod_p(const EmbeddingMatrix& units, long p) {
    check_square(units);
    std::vector<std::vector<mpz_class>> M(units.size());
    for (size_t i = 0; i < units.size(); ++i)
        for (const auto& u : units[i]) {
            require(u.p == p, "prime mismatch in embedding matrix");
            M[i].emplace_back(fermat_quotient(u));
        }
    mpz_class d = det_mpz(std::move(M));
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
    return mpz_get_si(r.get_mpz_t());
}

PadicInt regulator_mod_pn(const EmbeddingMatrix& units, int n) {
    check_square(units);
    long p = units[0][0].p;
    std::vector<std::vector<mpz_class>> M(units.size());
    for (size_t i = 0; i < units.size(); ++i)
        for (const auto& u : units[i]) M[i].push_back(higher_fermat_quotient(u, n).residue);
    return PadicInt(p, n + 1, det_mpz(std::move(M)));
}

PadicInt padic_regulator(const EmbeddingMatrix& units, int prec) {
    check_square(units);
    long p = units[0][0].p;
    std::vector<std::vector<mpz_class>> M(units.size());
    for (size_t i = 0; i < units.size(); ++i)
        for (const auto& u : units[i])
            M[i].push_back(iwasawa_log(u.reduced_to(prec)).residue);
    return PadicInt(p, prec, det_mpz(std::move(M)));
}

RegulatorBundle regulator_bundle(const EmbeddingMatrix& units, int n, int prec) {
    RegulatorBundle B;
    B.g = static_cast<int>(units.size()) + 1;
    B.n = n;
    B.Rp = padic_regulator(units, prec);
    B.Rpn = regulator_mod_pn(units, n);
    B.Rp_mod_p = regulator_mod_p(units, units[0][0].p);
    return B;
}

PadicInt canonical_lift(const PadicInt& a, int prec) {
    return PadicInt(a.p, prec, a.residue);
}

PadicInt cnf_lhs(int g, long h, const PadicInt& regulator_value, const PadicInt& sqrt_d,
                 int prec) {
    require(g >= 2, "degree must be >= 2");
    long p = regulator_value.p;
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
    PadicInt lhs = canonical_lift(regulator_value, prec) * PadicInt(p, prec, two_pow * h);
    return lhs * inverse(canonical_lift(sqrt_d, prec));
}

CongruenceReport cnf_exact_check(const QuadFieldData& F, long p, int N) {
    CongruenceReport rep;
    rep.claim = "CHK-CNF";
    rep.d = mpz_get_si(F.d.get_mpz_t());
    rep.p = p;
    rep.f = rep.d;
    rep.g = 2;
    rep.required_valuation = N;
    int W = N + 3;
    rep.working_precision = W;

    if (split_type(F.d, p) == SplitType::ramified) {
        rep.status = "skipped-ramified";
        return rep;
    }
    if (split_type(F.d, p) == SplitType::inert) {
        rep.status = "skipped-inert";
        return rep;
    }
    DirichletChar chi = kronecker_char(F.d);
    if (!embeds_in_zp2(chi.conductor, p)) {
        rep.status = "skipped-embedding";
        return rep;
    }
    rep.status = "ok";
    rep.embedding = embedding_description(chi.conductor, p);

    auto [z, zbar] = embed_unit(F, p, W);
    (void)zbar;
    PadicInt r = hensel_sqrt(F.d, p, W);
    PadicInt Rp = padic_regulator({{z}}, W);
    PadicInt lhs = cnf_lhs(2, F.h, Rp, r, W);
    PadicInt rhs = leopoldt_product({chi}, p, W);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();

    for (int sign : {+1, -1}) {
        PadicInt diff = (sign == 1) ? lhs - rhs : lhs + rhs;
        VariantResult v;
        v.sign = sign == 1 ? "plus" : "minus";
        v.euler = "plain";
        v.ppower = "-";
        v.valuation = diff.valuation();
        v.required = N;
        v.pass = v.valuation >= N;
        rep.variants.push_back(v);
        if (v.pass && !rep.passed) {
            rep.passed = true;
            rep.variant_passed = "sign=" + v.sign + ",euler=plain";
        }
    }
    return rep;
}

}  // namespace padicverify
