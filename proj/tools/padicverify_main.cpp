#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "padicverify/bernoulli.hpp"
#include "padicverify/characters.hpp"
#include "padicverify/checks.hpp"
#include "padicverify/field_io.hpp"
#include "padicverify/lfunctions.hpp"
#include "padicverify/quadfield.hpp"
#include "padicverify/regulators.hpp"
#include "padicverify/report.hpp"

using namespace padicverify;

namespace {

// JSON config file mirroring the verify flags; command-line flags win.
void apply_config(CLI::App* verify, const std::string& path, CheckSpec& spec,
                  std::string& format, bool& stable) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json cfg = nlohmann::json::parse(ss.str());
    auto untouched = [&](const char* flag) {
        return verify->count(flag) == 0 && cfg.contains(flag + 2);
    };
    if (untouched("--checks")) spec.checks = cfg["checks"].get<std::vector<std::string>>();
    if (untouched("--d")) spec.ds = cfg["d"].get<std::vector<long>>();
    if (untouched("--p")) spec.ps = cfg["p"].get<std::vector<long>>();
    if (untouched("--n")) spec.ns = cfg["n"].get<std::vector<int>>();
    if (untouched("--prec")) spec.precision = cfg["prec"].get<int>();
    if (untouched("--sign-policy")) spec.sign_policy = cfg["sign-policy"].get<std::string>();
    if (untouched("--euler-variant"))
        spec.euler_variant = cfg["euler-variant"].get<std::string>();
    if (untouched("--p-power-variant"))
        spec.ppower_variant = cfg["p-power-variant"].get<std::string>();
    if (untouched("--field-file")) spec.field_file = cfg["field-file"].get<std::string>();
    if (untouched("--format")) format = cfg["format"].get<std::string>();
    if (verify->count("--stable") == 0 && cfg.contains("stable"))
        stable = cfg["stable"].get<bool>();
}

int run_verify(CLI::App* verify, CheckSpec& spec, const std::string& config,
               std::string& format, bool& stable, const std::string& out_path) {
    if (!config.empty()) apply_config(verify, config, spec, format, stable);
    std::vector<CongruenceReport> reports = run_check(spec);
    std::string rendered = emit_report(reports, report_format_from_string(format), stable);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << rendered;
    }
    return report_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of p-adic class number congruences "
                 "over real quadratic fields"};
    app.require_subcommand(1);

    // verify
    CheckSpec spec = default_grid();
    std::string format = "text";
    std::string config, out_path;
    bool stable = false;
    CLI::App* verify = app.add_subcommand("verify", "run congruence checks over a grid");
    verify->add_option("--checks", spec.checks, "claim ids (default: all)");
    verify->add_option("--d", spec.ds, "fundamental discriminants");
    verify->add_option("--p", spec.ps, "primes > 3");
    verify->add_option("--n", spec.ns, "congruence levels n >= 1");
    verify->add_option("--prec", spec.precision,
                       "working precision (0 = auto: required valuation + 3)");
    verify->add_option("--sign-policy", spec.sign_policy, "either|plus|minus");
    verify->add_option("--euler-variant", spec.euler_variant,
                       "plain|chi-p|euler-inv|all");
    verify->add_option("--p-power-variant", spec.ppower_variant, "without|with|both");
    verify->add_option("--format", format, "text|csv|json");
    verify->add_flag("--stable", stable, "omit timing fields (byte-identical reruns)");
    verify->add_option("--field-file", spec.field_file, "external field document");
    verify->add_option("--config", config, "JSON config mirroring these flags");
    verify->add_option("--out", out_path, "write the report to a file");

    // unit
    long unit_d = 0;
    CLI::App* unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(d))");
    unit->add_option("--d", unit_d, "fundamental discriminant")->required();

    // classnum
    long cn_d = 0;
    CLI::App* classnum = app.add_subcommand("classnum", "class number of Q(sqrt(d))");
    classnum->add_option("--d", cn_d, "fundamental discriminant")->required();

    // bernoulli
    unsigned b_n = 0;
    long b_chid = 0, b_p = 0;
    int b_prec = 4;
    CLI::App* bern = app.add_subcommand("bernoulli", "generalized Bernoulli numbers");
    bern->add_option("--n", b_n, "index n >= 0")->required();
    bern->add_option("--chi-d", b_chid, "quadratic character discriminant (0 = trivial)");
    bern->add_option("--p", b_p, "also reduce mod p^prec via the power-sum path");
    bern->add_option("--prec", b_prec, "p-adic precision for --p");

    // lp
    long lp_d = 0, lp_p = 0;
    int lp_prec = 4;
    CLI::App* lp = app.add_subcommand("lp", "Leopoldt sum and L_p(1; chi_d)");
    lp->add_option("--d", lp_d, "fundamental discriminant")->required();
    lp->add_option("--p", lp_p, "prime > 3")->required();
    lp->add_option("--prec", lp_prec, "p-adic precision");

    // regulator
    long rg_d = 0, rg_p = 0;
    int rg_n = 1, rg_prec = 0;
    CLI::App* reg = app.add_subcommand("regulator", "p-adic regulators of Q(sqrt(d))");
    reg->add_option("--d", rg_d, "fundamental discriminant")->required();
    reg->add_option("--p", rg_p, "prime > 3")->required();
    reg->add_option("--n", rg_n, "level for R^(p,n)");
    reg->add_option("--prec", rg_prec, "precision for R_p (default n + 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return run_verify(verify, spec, config, format, stable, out_path);
        if (unit->parsed()) {
            FundamentalUnit u = fundamental_unit(mpz_class(unit_d));
            std::cout << "eps = (" << u.x.get_str() << " + " << u.y.get_str()
                      << "*sqrt(" << unit_d << "))/2, norm = " << u.norm << "\n";
            return 0;
        }
        if (classnum->parsed()) {
            auto [h, hplus] = class_number(mpz_class(cn_d));
            long hi = class_number_by_ideals(mpz_class(cn_d));
            std::cout << "h = " << h << ", h+ = " << hplus
                      << " (ideal enumeration: h = " << hi
                      << (hi == h ? ", agrees" : ", MISMATCH") << ")\n";
            return hi == h ? 0 : 1;
        }
        if (bern->parsed()) {
            DirichletChar chi =
                b_chid == 0 ? trivial_char() : kronecker_char(mpz_class(b_chid));
            BigRational b = b_n == 0 ? BigRational(chi.is_trivial() ? 1 : 0)
                                     : gen_bernoulli_exact(b_n, chi);
            std::cout << "B_{" << b_n << ",chi} = " << b.get_str() << "\n";
            if (b_p > 0) {
                PadicScaled v = gen_bernoulli_padic(b_n, chi, b_p, b_prec);
                std::cout << "power-sum path: ";
                if (v.shift != 0) std::cout << b_p << "^" << v.shift << " * ";
                std::cout << v.value.str() << "\n";
            }
            return 0;
        }
        if (lp->parsed()) {
            DirichletChar chi = kronecker_char(mpz_class(lp_d));
            LpValue L = leopoldt_Lp(chi, lp_p, lp_prec);
            std::cout << "LeopoldtSum(chi_" << lp_d << ") = " << L.value.str()
                      << "   [embedding: " << L.embedding << "]\n";
            PadicInt at1 = kubota_leopoldt_at_1(chi, lp_p, lp_prec);
            std::cout << "L_p(1; chi_" << lp_d << ") = " << at1.str()
                      << "   [(1 - chi(p)/p) * LeopoldtSum]\n";
            return 0;
        }
        if (reg->parsed()) {
            int prec = rg_prec > 0 ? rg_prec : rg_n + 4;
            QuadFieldData F = quad_field_from_disc(mpz_class(rg_d));
            auto [z, zbar] = embed_unit(F, rg_p, prec);
            (void)zbar;
            EmbeddingMatrix units = {{z}};
            RegulatorBundle B = regulator_bundle(units, rg_n, prec);
            std::cout << "R_p      = " << B.Rp.str() << "\n";
            std::cout << "R^(p," << rg_n << ")  = " << B.Rpn.str() << "\n";
            std::cout << "R^(p)    = " << B.Rp_mod_p << " mod " << rg_p << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
