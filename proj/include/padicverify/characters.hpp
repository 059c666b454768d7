#pragma once

#include "padicverify/padic.hpp"
#include "padicverify/qext.hpp"

#include <optional>
#include <vector>

namespace padicverify {

/// Kronecker symbol (a/n), by quadratic reciprocity.
int kronecker_symbol(const mpz_class& a, const mpz_class& n);

/// True when d is a fundamental discriminant (d = 1 is excluded).
bool is_fundamental_discriminant(const mpz_class& d);

enum class CharKind { trivial, quadratic, tabulated };

/// A primitive Dirichlet character.  Quadratic characters are represented
/// by their fundamental discriminant and evaluate exactly to 0, +1, -1;
/// tabulated characters carry exponents into a root of unity of order m.
struct DirichletChar {
    CharKind kind = CharKind::trivial;
    long conductor = 1;
    long order = 1;
    int parity = 1;  // value at -1
    mpz_class disc;  // quadratic kind only
    std::vector<long> exponents;  // tabulated kind: e(a) for a in [0, f), -1 when gcd(a,f)>1

    bool is_trivial() const { return kind == CharKind::trivial; }
    bool exact_valued() const { return order <= 2; }
};

DirichletChar trivial_char();

/// The primitive even quadratic character attached to the real quadratic
/// field of fundamental discriminant d > 1.
DirichletChar kronecker_char(const mpz_class& d);

/// A primitive character given by exponents e(a) into a fixed root of unity
/// of order m: chi(a) = zeta_m^{e(a)}.  Multiplicativity, exact order and
/// primitivity are checked at construction.
DirichletChar tabulated_char(long f, long m, const std::vector<long>& exponents);

/// Exponent of chi(a) into zeta_order, or nullopt when chi(a) = 0.
std::optional<long> eval_char_exponent(const DirichletChar& chi, const mpz_class& a);

/// chi(a) as an exact integer in {-1, 0, +1}; requires an exact-valued chi.
int eval_char(const DirichletChar& chi, const mpz_class& a);

long least_primitive_root(long p);

struct EmbeddedRootOfUnity {
    long order = 1;
    PadicInt xi;
};

/// Canonical primitive m-th root of unity in Z_p: the Teichmuller lift of
/// g^((p-1)/m) for g the least primitive root mod p.  Requires m | p - 1.
EmbeddedRootOfUnity primitive_root_of_unity(long m, long p, int prec);

/// Gauss sum tau(chi) = sum chi(a) xi^a with the canonical embedded xi.
/// Requires f | p - 1 (and order | p - 1 for tabulated characters).
PadicInt gauss_sum(const DirichletChar& chi, long p, int prec);

/// Primitive m-th root of unity in the unramified quadratic extension,
/// for m | p^2 - 1.  The generator choice is deterministic and recorded
/// by embedding_description().
QuadExt primitive_root_of_unity_ext(long m, long p, int prec);

QuadExt gauss_sum_ext(const DirichletChar& chi, long p, int prec);

/// Human-readable record of the fixed embedding used for (f, p):
/// either the Teichmuller lift in Z_p or the quadratic-extension lift.
std::string embedding_description(long f, long p);

/// True when the canonical embedding for conductor f exists in Z_p.
bool embeds_in_zp(long f, long p);
/// True when it exists in the quadratic extension.
bool embeds_in_zp2(long f, long p);

}  // namespace padicverify
