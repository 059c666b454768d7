#include "padicverify/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace padicverify {

using nlohmann::ordered_json;

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "text") return ReportFormat::text;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format: " + s);
}

void sort_reports(std::vector<CongruenceReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const CongruenceReport& a, const CongruenceReport& b) {
                  if (a.claim != b.claim) return a.claim < b.claim;
                  if (a.d != b.d) return a.d < b.d;
                  if (a.p != b.p) return a.p < b.p;
                  return a.n < b.n;
              });
}

namespace {

ordered_json to_json(const CongruenceReport& r, bool stable) {
    ordered_json j;
    j["claim"] = r.claim;
    j["d"] = r.d;
    j["p"] = r.p;
    j["n"] = r.n;
    j["f"] = r.f;
    j["g"] = r.g;
    j["status"] = r.status;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["required_valuation"] = r.required_valuation;
    j["working_precision"] = r.working_precision;
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.variants) {
        ordered_json vj;
        vj["sign"] = v.sign;
        vj["euler"] = v.euler;
        vj["ppower"] = v.ppower;
        vj["valuation"] = v.valuation;
        vj["required"] = v.required;
        vj["pass"] = v.pass;
        vs.push_back(vj);
    }
    j["variants"] = vs;
    j["passed"] = r.passed;
    j["variant_passed"] = r.variant_passed;
    j["embedding"] = r.embedding;
    j["note"] = r.note;
    if (!stable) j["time_ms"] = r.time_ms;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string emit_report(std::vector<CongruenceReport> reports, ReportFormat fmt,
                        bool stable) {
    sort_reports(reports);
    if (fmt == ReportFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, stable));
        return arr.dump(2) + "\n";
    }
    if (fmt == ReportFormat::csv) {
        std::ostringstream out;
        out << "claim,d,p,n,f,g,status,lhs,rhs,required_valuation,working_precision,"
               "passed,variant_passed,embedding,note";
        if (!stable) out << ",time_ms";
        out << "\n";
        for (const auto& r : reports) {
            out << r.claim << ',' << r.d << ',' << r.p << ',' << r.n << ',' << r.f << ','
                << r.g << ',' << r.status << ',' << csv_escape(r.lhs) << ','
                << csv_escape(r.rhs) << ',' << r.required_valuation << ','
                << r.working_precision << ',' << (r.passed ? "pass" : "fail") << ','
                << csv_escape(r.variant_passed) << ',' << csv_escape(r.embedding) << ','
                << csv_escape(r.note);
            if (!stable) out << ',' << r.time_ms;
            out << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    for (const auto& r : reports) {
        const char* tag = "SKIP ";
        if (r.status == "ok") tag = r.passed ? "PASS " : "FAIL ";
        if (r.status == "hypothesis-failed") tag = "HYPO ";
        out << tag << r.claim;
        if (r.d) out << " d=" << r.d;
        out << " p=" << r.p;
        if (r.n) out << " n=" << r.n;
        out << " [" << r.status << "]";
        if (r.status == "ok") {
            out << " v>=" << r.required_valuation;
            if (!r.variant_passed.empty()) out << " via " << r.variant_passed;
        }
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
    }
    out << variant_summary(reports);
    return out.str();
}

std::vector<CongruenceReport> parse_report_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<CongruenceReport> out;
    for (const auto& j : arr) {
        CongruenceReport r;
        r.claim = j.at("claim").get<std::string>();
        r.d = j.at("d").get<long>();
        r.p = j.at("p").get<long>();
        r.n = j.at("n").get<int>();
        r.f = j.at("f").get<long>();
        r.g = j.at("g").get<int>();
        r.status = j.at("status").get<std::string>();
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.required_valuation = j.at("required_valuation").get<int>();
        r.working_precision = j.at("working_precision").get<int>();
        for (const auto& vj : j.at("variants")) {
            VariantResult v;
            v.sign = vj.at("sign").get<std::string>();
            v.euler = vj.at("euler").get<std::string>();
            v.ppower = vj.at("ppower").get<std::string>();
            v.valuation = vj.at("valuation").get<int>();
            v.required = vj.at("required").get<int>();
            v.pass = vj.at("pass").get<bool>();
            r.variants.push_back(v);
        }
        r.passed = j.at("passed").get<bool>();
        r.variant_passed = j.at("variant_passed").get<std::string>();
        r.embedding = j.at("embedding").get<std::string>();
        r.note = j.at("note").get<std::string>();
        if (j.contains("time_ms")) r.time_ms = j.at("time_ms").get<double>();
        out.push_back(r);
    }
    return out;
}

std::string variant_summary(const std::vector<CongruenceReport>& reports) {
    // per claim: (euler, ppower) pairs passing every ok point, with the sign
    // dimension resolved per the policy that produced the reports
    std::map<std::string, std::set<std::string>> supported;
    std::map<std::string, bool> seeded;
    std::map<std::string, long> counts;
    for (const auto& r : reports) {
        if (r.status != "ok") continue;
        counts[r.claim]++;
        std::set<std::string> here;
        for (const auto& v : r.variants) {
            if (!v.pass) continue;
            here.insert("euler=" + v.euler + ",ppower=" + v.ppower);
        }
        auto& acc = supported[r.claim];
        if (!seeded[r.claim]) {
            acc = here;
            seeded[r.claim] = true;
        } else {
            std::set<std::string> keep;
            for (const auto& s : acc)
                if (here.count(s)) keep.insert(s);
            acc = keep;
        }
    }
    std::ostringstream out;
    for (const auto& [claim, combos] : supported) {
        out << "# " << claim << " (" << counts[claim] << " ok points): ";
        if (combos.empty()) {
            out << "no variant passes every point\n";
            continue;
        }
        bool first = true;
        for (const auto& s : combos) {
            if (!first) out << " | ";
            out << s;
            first = false;
        }
        if (combos.size() == 1) out << "  [uniquely supported]";
        out << "\n";
    }
    return out.str();
}

int report_exit_code(const std::vector<CongruenceReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "ok" && !r.passed) return 1;
    return 0;
}

}  // namespace padicverify
