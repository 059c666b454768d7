#pragma once

#include "padicverify/padic.hpp"
#include "padicverify/quadfield.hpp"
#include "padicverify/report.hpp"

#include <vector>

namespace padicverify {

/// (g-1) x (g-1) matrix of embedded units sigma_j(eps_k).
using EmbeddingMatrix = std::vector<std::vector<PadicInt>>;

/// R^(p)(K) = det(Q_p(sigma_j(eps_k))) over Z/p.  Entries need precision >= 2.
long regulator_mod_p(const EmbeddingMatrix& units, long p);

/// R^(p,n)(K) = det(Q_{p,n}(sigma_j(eps_k))) mod p^{n+1}.
/// Entries need precision >= n + 2.
PadicInt regulator_mod_pn(const EmbeddingMatrix& units, int n);

/// R_p(K) = det(log_p(sigma_j(eps_k))) at the entry precision.
PadicInt padic_regulator(const EmbeddingMatrix& units, int prec);

/// All three regulators from one embedding matrix.
struct RegulatorBundle {
    int g = 2;
    int n = 1;
    PadicInt Rp;
    PadicInt Rpn;       // mod p^{n+1}
    long Rp_mod_p = 0;  // mod p
    std::string sign_choice = "canonical-row-order";
};
RegulatorBundle regulator_bundle(const EmbeddingMatrix& units, int n, int prec);

/// Reinterpret the canonical residue of a at a higher working precision
/// (a lift, not a precision claim).
PadicInt canonical_lift(const PadicInt& a, int prec);

/// 2^{g-1} h reg / sqrt(d) assembled at precision prec from the canonical
/// lift of the regulator value.
PadicInt cnf_lhs(int g, long h, const PadicInt& regulator_value, const PadicInt& sqrt_d,
                 int prec);

/// The p-adic class number formula: compares 2^{g-1} h R_p / sqrt(d)
/// against the product of the defining-sum values mod p^N, up to sign.
CongruenceReport cnf_exact_check(const QuadFieldData& F, long p, int N);

}  // namespace padicverify
