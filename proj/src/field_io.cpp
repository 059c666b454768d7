#include "padicverify/field_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace padicverify {

namespace {

using nlohmann::ordered_json;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("field document: " + msg);
}

mpz_class parse_mpz(const nlohmann::json& v, const char* what) {
    if (v.is_number_unsigned())
        return mpz_class(static_cast<unsigned long>(v.get<unsigned long long>()));
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), v.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument(std::string("field document: bad integer in ") + what);
        return z;
    }
    throw std::invalid_argument(std::string("field document: expected integer for ") + what);
}

}  // namespace

ExternalFieldData load_external_field(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("field document: parse error: ") + e.what());
    }
    for (const char* key : {"label", "g", "d", "h", "p", "N", "sqrt_d", "units"})
        require(doc.contains(key), std::string("missing field ") + key);

    ExternalFieldData F;
    require(doc["label"].is_string(), "label must be a string");
    F.label = doc["label"].get<std::string>();
    F.g = doc["g"].get<int>();
    require(F.g >= 2, "degree g must be >= 2");
    F.d = parse_mpz(doc["d"], "d");
    require(F.d > 1, "discriminant must be > 1");
    F.h = doc["h"].get<long>();
    require(F.h >= 1, "class number must be >= 1");
    F.p = doc["p"].get<long>();
    F.N = doc["N"].get<int>();
    require(F.N >= 1, "precision N must be >= 1");

    mpz_class modulus = pow_p(F.p, F.N);
    auto residue = [&](const nlohmann::json& v, const char* what) {
        mpz_class r = parse_mpz(v, what);
        require(r >= 0 && r < modulus, std::string(what) + " residue out of range");
        return PadicInt(F.p, F.N, r);
    };

    F.sqrt_d = residue(doc["sqrt_d"], "sqrt_d");
    mpz_class sq = F.sqrt_d.residue * F.sqrt_d.residue;
    require(mpz_congruent_p(sq.get_mpz_t(), F.d.get_mpz_t(), modulus.get_mpz_t()) != 0,
            "sqrt_d^2 != d mod p^N");
    require(F.sqrt_d.is_unit(), "sqrt_d must be a unit (p unramified)");

    require(doc["units"].is_array(), "units must be an array");
    require(doc["units"].size() == static_cast<size_t>(F.g - 1),
            "units must have g-1 rows");
    for (const auto& row : doc["units"]) {
        require(row.is_array() && row.size() == static_cast<size_t>(F.g - 1),
                "each unit row must have g-1 entries");
        std::vector<PadicInt> r;
        for (const auto& v : row) {
            PadicInt u = residue(v, "unit");
            require(u.is_unit(), "unit residue is not a p-adic unit");
            r.push_back(u);
        }
        F.units.push_back(std::move(r));
    }
    return F;
}

ExternalFieldData load_external_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open field document: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_external_field(ss.str());
}

std::string dump_external_field(const ExternalFieldData& F) {
    ordered_json doc;
    doc["label"] = F.label;
    doc["g"] = F.g;
    doc["d"] = F.d.get_str();
    doc["h"] = F.h;
    doc["p"] = F.p;
    doc["N"] = F.N;
    doc["sqrt_d"] = F.sqrt_d.residue.get_str();
    ordered_json rows = ordered_json::array();
    for (const auto& row : F.units) {
        ordered_json r = ordered_json::array();
        for (const auto& u : row) r.push_back(u.residue.get_str());
        rows.push_back(r);
    }
    doc["units"] = rows;
    return doc.dump(2);
}

ExternalFieldData external_from_internal(const QuadFieldData& F, long p, int N,
                                         const std::string& label) {
    ExternalFieldData E;
    E.label = label;
    E.g = 2;
    E.d = F.d;
    E.h = F.h;
    E.p = p;
    E.N = N;
    E.sqrt_d = hensel_sqrt(F.d, p, N);
    auto [z, zbar] = embed_unit(F, p, N);
    (void)zbar;
    E.units = {{z}};
    return E;
}

}  // namespace padicverify
