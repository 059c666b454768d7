#pragma once

#include "padicverify/bernoulli.hpp"
#include "padicverify/characters.hpp"
#include "padicverify/padic.hpp"

#include <vector>

namespace padicverify {

struct LpValue {
    DirichletChar chi;
    long p = 5;
    PadicInt value;
    std::string provenance;  // "defining-sum" | "bernoulli-interpolation"
    std::string embedding;
};

/// The defining sum -(tau(chi)/f) sum_a conj(chi)(a) log_p(1 - xi^a),
/// evaluated in Z_p when f | p-1 and in the unramified quadratic extension
/// when f | p^2-1 (the result is Galois-stable and returned in Z_p).
/// Requires chi primitive, even, nontrivial, p not dividing f.
LpValue leopoldt_Lp(const DirichletChar& chi, long p, int prec);

/// chi(p) embedded in Z_p (exact +-1 for quadratic characters).
PadicInt char_value_padic(const DirichletChar& chi, const mpz_class& a, long p, int prec);

/// Kubota-Leopoldt value L_p(1-s; chi) = -(1 - chi(p) p^{s-1}) B_{s,chi}/s
/// for (p-1) | s; the twist by omega^{-s} is then trivial.
LpValue kubota_leopoldt_special(const DirichletChar& chi, unsigned s, long p, int prec,
                                unsigned exact_bound = 400);

/// L_p(1; chi) = (1 - chi(p)/p) * LeopoldtSum(chi), the value the
/// Kubota-Leopoldt function actually takes at s = 1.
PadicInt kubota_leopoldt_at_1(const DirichletChar& chi, long p, int prec);

/// zeta_{K/Q,p}(1) = prod over nontrivial chi of L_p(1; chi).
PadicInt relative_zeta_p_at_1(const std::vector<DirichletChar>& nontrivial_chars,
                              long p, int prec);

/// prod over nontrivial chi of the defining-sum values (the right-hand side
/// of the p-adic class number formula).
PadicInt leopoldt_product(const std::vector<DirichletChar>& nontrivial_chars,
                          long p, int prec);

}  // namespace padicverify
