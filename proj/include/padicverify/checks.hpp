#pragma once

#include "padicverify/report.hpp"

#include <string>
#include <vector>

namespace padicverify {

/// A verification request: which claims over which (d, p, n) grid, at what
/// precision, under which variant policies.  Every (claim, d, p) pair is
/// classified before running (ok / skipped-inert / skipped-ramified /
/// skipped-embedding / skipped-p-divides-h).
struct CheckSpec {
    std::vector<std::string> checks;
    std::vector<long> ds;
    std::vector<long> ps;
    std::vector<int> ns;
    int precision = 0;  // 0: auto (required valuation + 3)
    std::string sign_policy = "either";    // either | plus | minus
    std::string euler_variant = "all";     // plain | chi-p | euler-inv | all
    std::string ppower_variant = "both";   // without | with | both
    std::string field_file;                // external field document (optional)
    int unit_samples = 50;                 // sample count for CHK-P13 / CHK-L22
};

/// The ten claim ids, in report order.
const std::vector<std::string>& all_check_ids();

/// The shipped grid: d in {5,8,12,13,40,316}, p in {5,7,11,13,19},
/// n in {1,2}, precision auto, all variants enabled.
CheckSpec default_grid();

/// Run every requested claim over the grid; one report per grid point.
/// Throws std::invalid_argument on configuration errors.
std::vector<CongruenceReport> run_check(const CheckSpec& spec);

}  // namespace padicverify
