#include "padicverify/quadfield.hpp"

#include "padicverify/characters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace padicverify {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool fits_long(const mpz_class& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

// One step of the continued fraction of (P + sqrt(d))/Q; Q > 0 is
// maintained for every state reachable from the ideals used here.
struct CfState {
    long P;
    long Q;
    bool operator<(const CfState& o) const {
        return P != o.P ? P < o.P : Q < o.Q;
    }
    bool operator==(const CfState& o) const { return P == o.P && Q == o.Q; }
};

struct CfMachine {
    mpz_class d;
    long s;  // floor(sqrt(d))

    explicit CfMachine(const mpz_class& d_) : d(d_) {
        mpz_class r = isqrt(d);
        require(r * r != d, "discriminant must not be a square");
        require(fits_long(r), "discriminant too large for cycle search");
        s = mpz_get_si(r.get_mpz_t());
    }

    long partial_quotient(const CfState& st) const {
        require(st.Q > 0, "continued fraction state left the positive regime");
        long num = st.P + s;
        long q = num / st.Q;
        if (num < 0 && num % st.Q != 0) --q;  // floor for negative numerators
        return q;
    }

    CfState step(const CfState& st, long a) const {
        long P1 = a * st.Q - st.P;
        mpz_class num = d - mpz_class(P1) * P1;
        mpz_class Q1 = num / st.Q;
        require(Q1 * st.Q == num, "continued fraction invariant broken");
        require(fits_long(Q1), "state overflow");
        return CfState{P1, mpz_get_si(Q1.get_mpz_t())};
    }
};

}  // namespace

mpz_class fundamental_discriminant(const mpz_class& m) {
    require(m > 1, "need squarefree m > 1");
    mpz_class mm = m;
    for (mpz_class q = 2; q * q <= mm; ++q)
        require(mm % (q * q) != 0, "m is not squarefree");
    unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 4);
    return r == 1 ? m : 4 * m;
}

SplitType split_type(const mpz_class& d, long p) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
        return SplitType::ramified;
    return is_quadratic_residue(d, p) ? SplitType::split : SplitType::inert;
}

FundamentalUnit fundamental_unit(const mpz_class& d) {
    require(d > 1 && is_fundamental_discriminant(d), "d must be a fundamental discriminant > 1");
    CfMachine cf(d);
    CfState st{mpz_odd_p(d.get_mpz_t()) ? 1 : 0, 2};
    std::map<CfState, size_t> seen;
    std::vector<CfState> states;
    std::vector<long> quotients;
    size_t cycle_start;
    while (true) {
        auto it = seen.find(st);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen[st] = states.size();
        states.push_back(st);
        long a = cf.partial_quotient(st);
        quotients.push_back(a);
        st = cf.step(st, a);
    }
    // automorph of one period: M = prod [[a,1],[1,0]] over the cycle,
    // unit = q*alpha + q' at the cycle head alpha = (P + sqrt(d))/Q
    mpz_class p11 = 1, p12 = 0, p21 = 0, p22 = 1;
    for (size_t i = cycle_start; i < states.size(); ++i) {
        long a = quotients[i];
        mpz_class n11 = p11 * a + p12;
        mpz_class n21 = p21 * a + p22;
        p12 = p11;
        p22 = p21;
        p11 = n11;
        p21 = n21;
    }
    const CfState& head = states[cycle_start];
    mpz_class num_x = 2 * (p21 * head.P + p22 * head.Q);
    mpz_class num_y = 2 * p21;
    mpz_class Q = head.Q;
    require(num_x % Q == 0 && num_y % Q == 0, "automorph is not integral");
    FundamentalUnit u;
    u.x = num_x / Q;
    u.y = num_y / Q;
    mpz_class n4 = u.x * u.x - d * u.y * u.y;
    require(n4 == 4 || n4 == -4, "automorph does not solve the Pell equation");
    u.norm = (n4 == 4) ? 1 : -1;
    require(u.x > 0 && u.y > 0, "unit not normalized");
    return u;
}

namespace {

struct Form {
    long a, b, c;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

// reduced indefinite form: 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b
bool is_reduced(const Form& f, const mpz_class& d) {
    if (f.b <= 0) return false;
    mpz_class b2(f.b);
    if (b2 * b2 >= d) return false;
    long aa = std::abs(f.a);
    mpz_class lo(2 * aa + f.b), hi(2 * aa - f.b);
    if (lo * lo <= d) return false;          // need sqrt(d) < 2|a| + b
    if (hi > 0 && hi * hi >= d) return false;  // need 2|a| - b < sqrt(d)
    return true;
}

Form rho(const Form& f, const mpz_class& d, long s) {
    long ca = std::abs(f.c);
    long m = 2 * ca;
    long r = s - static_cast<long>(((static_cast<long long>(s) + f.b) % m + m) % m);
    mpz_class num = mpz_class(r) * r - d;
    mpz_class den = 4 * mpz_class(f.c);
    mpz_class cc = num / den;
    if (cc * den != num) throw std::logic_error("rho step not integral");
    return Form{f.c, r, static_cast<long>(mpz_get_si(cc.get_mpz_t()))};
}

std::vector<Form> reduced_forms(const mpz_class& d, long s) {
    std::vector<Form> forms;
    long dpar = mpz_odd_p(d.get_mpz_t()) ? 1 : 0;
    for (long b = 1; b <= s; ++b) {
        if ((b & 1) != dpar) continue;  // b^2 = d mod 4 needs b = d mod 2
        mpz_class t4 = (mpz_class(b) * b - d);
        mpz_class t = t4 / 4;  // negative
        for (long aa = 1; 2 * aa <= s + b; ++aa) {
            mpz_class lo(2 * aa + b), hi(2 * aa - b);
            if (lo * lo <= d) continue;
            if (hi > 0 && hi * hi >= d) break;
            if (t % aa != 0) continue;
            long c = static_cast<long>(mpz_get_si(mpz_class(t / aa).get_mpz_t()));
            forms.push_back(Form{aa, b, c});
            forms.push_back(Form{-aa, b, -c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

}  // namespace

std::pair<long, long> class_number(const mpz_class& d) {
    require(d > 1 && is_fundamental_discriminant(d), "d must be a fundamental discriminant > 1");
    CfMachine cf(d);  // validates size, provides s
    long s = cf.s;
    std::vector<Form> forms = reduced_forms(d, s);
    std::set<Form> unvisited(forms.begin(), forms.end());
    long cycles = 0;
    while (!unvisited.empty()) {
        Form start = *unvisited.begin();
        ++cycles;
        Form f = start;
        do {
            unvisited.erase(f);
            f = rho(f, d, s);
            if (!is_reduced(f, d)) throw std::logic_error("rho left the reduced cycle");
        } while (!(f == start));
    }
    long hplus = cycles;
    FundamentalUnit u = fundamental_unit(d);
    long h;
    if (u.norm == -1) {
        h = hplus;
    } else {
        require(hplus % 2 == 0, "narrow class number must be even when N(eps) = +1");
        h = hplus / 2;
    }
    return {h, hplus};
}

namespace {

// canonical key of the periodic (P,Q) cycle entered by theta = (b+sqrt(d))/(2a)
std::string cycle_key(const CfMachine& cf, long P0, long Q0) {
    CfState st{P0, Q0};
    std::map<CfState, size_t> seen;
    std::vector<CfState> states;
    while (true) {
        auto it = seen.find(st);
        if (it != seen.end()) {
            states.erase(states.begin(), states.begin() + static_cast<long>(it->second));
            break;
        }
        seen[st] = states.size();
        states.push_back(st);
        st = cf.step(st, cf.partial_quotient(st));
    }
    // lexicographically minimal rotation
    size_t n = states.size(), best = 0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const CfState& x = states[(i + k) % n];
            const CfState& y = states[(best + k) % n];
            if (x == y) continue;
            if (x < y) best = i;
            break;
        }
    }
    std::string key;
    for (size_t k = 0; k < n; ++k) {
        const CfState& x = states[(best + k) % n];
        key += std::to_string(x.P) + "," + std::to_string(x.Q) + ";";
    }
    return key;
}

}  // namespace

long class_number_by_ideals(const mpz_class& d) {
    require(d > 1 && is_fundamental_discriminant(d), "d must be a fundamental discriminant > 1");
    CfMachine cf(d);
    std::set<std::string> classes;
    // primitive ideals [a, (b+sqrt(d))/2] of norm a below the Minkowski bound
    for (long a = 1; 4 * mpz_class(a) * a <= d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            mpz_class r = mpz_class(b) * b - d;
            if (!mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(4 * a)))
                continue;
            classes.insert(cycle_key(cf, b, 2 * a));
        }
    }
    return static_cast<long>(classes.size());
}

QuadFieldData quad_field_from_disc(const mpz_class& d) {
    QuadFieldData F;
    F.d = d;
    FundamentalUnit u = fundamental_unit(d);
    F.x = u.x;
    F.y = u.y;
    F.norm = u.norm;
    auto [h, hplus] = class_number(d);
    F.h = h;
    F.hplus = hplus;
    return F;
}

std::pair<PadicInt, PadicInt> embed_unit(const QuadFieldData& F, long p, int prec) {
    switch (split_type(F.d, p)) {
        case SplitType::ramified:
            throw std::domain_error("p ramifies in the field");
        case SplitType::inert:
            throw std::domain_error("inert prime: unit embeddings leave Z_p");
        case SplitType::split:
            break;
    }
    PadicInt r = hensel_sqrt(F.d, p, prec);
    PadicInt inv2 = inverse(PadicInt(p, prec, 2));
    PadicInt z = PadicInt(p, prec, F.x + F.y * r.residue) * inv2;
    PadicInt zbar = PadicInt(p, prec, F.x - F.y * r.residue) * inv2;
    PadicInt prod = z * zbar;
    require(congruent_mod(prod, PadicInt(p, prec, F.norm), prec),
            "embedded conjugates do not multiply to the unit norm");
    return {z, zbar};
}

}  // namespace padicverify
