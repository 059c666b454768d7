#pragma once

#include "padicverify/padic.hpp"
#include "padicverify/quadfield.hpp"

#include <string>
#include <vector>

namespace padicverify {

/// Field data supplied by an external system: the unit-embedding residues
/// sigma_j(eps_k) mod p^N for a real abelian field of degree g, plus the
/// invariants needed by the congruence checks.  The only constructor for
/// degree g > 2 data.
struct ExternalFieldData {
    std::string label;
    int g = 2;
    mpz_class d;
    long h = 1;
    long p = 5;
    int N = 1;
    PadicInt sqrt_d;
    std::vector<std::vector<PadicInt>> units;  // (g-1) x (g-1)
};

/// Parse and validate a field document (JSON text with fields label, g, d,
/// h, p, N, sqrt_d, units).  Residues are decimal strings or numbers.
/// Throws std::invalid_argument on any schema or invariant violation.
ExternalFieldData load_external_field(const std::string& text);
ExternalFieldData load_external_field_file(const std::string& path);

/// Serialize field data to the same document format.
std::string dump_external_field(const ExternalFieldData& F);

/// Build the document for an internal quadratic field at (p, N); the
/// export-import round trip must reproduce the internal pipeline.
ExternalFieldData external_from_internal(const QuadFieldData& F, long p, int N,
                                         const std::string& label);

}  // namespace padicverify
