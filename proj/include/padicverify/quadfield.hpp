#pragma once

#include "padicverify/padic.hpp"

#include <utility>
#include <vector>

namespace padicverify {

/// Invariants of a real quadratic field of fundamental discriminant d:
/// fundamental unit eps = (x + y sqrt(d))/2 normalized > 1, its norm, and
/// the (wide and narrow) class numbers.
struct QuadFieldData {
    mpz_class d;
    mpz_class x, y;
    int norm = 1;       // x^2 - d y^2 = 4 * norm
    long h = 1;         // class number
    long hplus = 1;     // narrow class number
};

/// Fundamental discriminant of Q(sqrt(m)) for squarefree m > 1.
mpz_class fundamental_discriminant(const mpz_class& m);

/// Minimal solution of x^2 - d y^2 = +-4 with x, y > 0, via the continued
/// fraction of the principal quadratic irrational (automorph of one period).
struct FundamentalUnit {
    mpz_class x, y;
    int norm;
};
FundamentalUnit fundamental_unit(const mpz_class& d);

/// (h, hplus): hplus is the number of cycles of reduced indefinite forms of
/// discriminant d; h follows from the unit norm (hplus = 2h iff norm = +1).
std::pair<long, long> class_number(const mpz_class& d);

/// Independent second algorithm: wide ideal classes counted by enumerating
/// primitive ideals of norm below the Minkowski bound and comparing
/// continued-fraction tail cycles.
long class_number_by_ideals(const mpz_class& d);

/// All invariants assembled.
QuadFieldData quad_field_from_disc(const mpz_class& d);

/// p-adic images (z, z') of eps under the two embeddings determined by the
/// canonical Hensel root of d.  Requires p > 3 unramified and d a quadratic
/// residue mod p (split).
std::pair<PadicInt, PadicInt> embed_unit(const QuadFieldData& F, long p, int prec);

/// Splitting type of p in Q(sqrt(d)).
enum class SplitType { split, inert, ramified };
SplitType split_type(const mpz_class& d, long p);

}  // namespace padicverify
