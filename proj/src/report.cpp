#include "codekit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace codekit {

namespace {

nlohmann::json bounds_json(const BoundReport& b) {
    nlohmann::json j;
    j["griesmer_min_length"] = b.griesmer_min_length;
    j["griesmer_optimal"] = b.griesmer_optimal;
    j["sphere_packing_distance_optimal"] = b.sphere_packing_distance_optimal;
    j["cm_upper"] = b.cm_upper;
    j["cm_verdict"] = b.cm_verdict;
    return j;
}

}  // namespace

std::string report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["params"] = {{"p", r.p}, {"s", r.s}, {"q", r.q},  {"m", r.m},
                   {"m1", r.m1}, {"m2", r.m2}, {"e", r.e}, {"l", r.l}};
    j["case"] = r.case_tag;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["weight_enumerator"] = r.weight_enumerator;
    if (r.predicted_match)
        j["predicted_match"] = *r.predicted_match;
    else
        j["predicted_match"] = nullptr;
    j["self_orthogonal"] = r.self_orthogonal;
    j["divisor"] = r.divisor;
    j["dual_min_distance"] = r.dual_min_distance;
    j["dual_low_weights"] = r.dual_low_weights;
    j["bounds"] = bounds_json(r.bounds);
    j["locality"] = r.locality;
    if (r.repair_rules) {
        nlohmann::json rules = nlohmann::json::array();
        for (const auto& rule : *r.repair_rules)
            rules.push_back({{"target", rule.target},
                             {"helpers", {rule.helper1, rule.helper2}},
                             {"coefficients", {rule.coef1, rule.coef2}}});
        j["repair_rules"] = rules;
    } else {
        j["repair_rules"] = nullptr;
    }
    j["runtime_ms"] = r.runtime_ms;
    return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "tower: p=" << r.p << " s=" << r.s << " q=" << r.q << " m=" << r.m << " m1=" << r.m1
        << " m2=" << r.m2 << " e=" << r.e << " l=" << r.l << "\n";
    out << "case: " << r.case_tag << "\n";
    out << "code: [" << r.n << ", " << r.k << ", " << r.d << "]\n";
    out << "weight_enumerator: " << r.weight_enumerator << "\n";
    out << "predicted_match: "
        << (r.predicted_match ? (*r.predicted_match ? "true" : "false") : "n/a") << "\n";
    out << "self_orthogonal: " << (r.self_orthogonal ? "true" : "false") << "\n";
    out << "divisor: " << r.divisor << "\n";
    out << "dual_min_distance: " << r.dual_min_distance << "\n";
    out << "dual_low_weights:";
    for (const auto& w : r.dual_low_weights) out << ' ' << w;
    out << "\n";
    out << "griesmer_min_length: " << r.bounds.griesmer_min_length << "\n";
    out << "griesmer_optimal: " << (r.bounds.griesmer_optimal ? "true" : "false") << "\n";
    out << "sphere_packing_distance_optimal: "
        << (r.bounds.sphere_packing_distance_optimal ? "true" : "false") << "\n";
    out << "cm_upper: " << r.bounds.cm_upper << "\n";
    out << "cm_verdict: " << r.bounds.cm_verdict << "\n";
    out << "locality: " << r.locality << "\n";
    out << "repair_rules: " << (r.repair_rules ? std::to_string(r.repair_rules->size()) : "n/a")
        << "\n";
    out << "runtime_ms: " << r.runtime_ms << "\n";
    for (const auto& f : r.failures) out << "FAIL: " << f << "\n";
    for (const auto& f : r.flags) out << "note: " << f << "\n";
    out << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace codekit
