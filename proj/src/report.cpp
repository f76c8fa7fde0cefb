#include "pcodes/report.hpp"

#include <iomanip>
#include <sstream>

namespace pcodes {

using nlohmann::ordered_json;

namespace {

std::string hex(std::uint32_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

ordered_json table_json(const std::map<int, mpz_class>& tab) {
    ordered_json rows = ordered_json::array();
    for (const auto& [w, a] : tab) rows.push_back({w, a.get_str()});
    return rows;
}

}  // namespace

std::string params_to_string(const TheoremParams& p) {
    std::ostringstream os;
    os << "m=" << p.m;
    if (p.k) os << " k=" << p.k;
    if (p.t) os << " t=" << p.t;
    if (p.t1) os << " t1=" << p.t1 << " t2=" << p.t2;
    if (p.d) os << " d=" << p.d;
    if (p.lambda != 1 && p.lambda != 0) os << " lambda=" << hex(p.lambda);
    if (!p.function.empty()) os << " f=" << p.function;
    return os.str();
}

ordered_json report_to_json(const VerificationReport& r, bool include_runtime) {
    ordered_json j;
    j["theorem_id"] = to_string(r.prediction.id);
    ordered_json params;
    params["m"] = r.prediction.params.m;
    if (r.prediction.params.k) params["k"] = r.prediction.params.k;
    if (r.prediction.params.t) params["t"] = r.prediction.params.t;
    if (r.prediction.params.t1) {
        params["t1"] = r.prediction.params.t1;
        params["t2"] = r.prediction.params.t2;
    }
    if (r.prediction.params.d) params["d"] = r.prediction.params.d;
    params["lambda"] = hex(r.prediction.params.lambda);
    j["params"] = params;
    j["field"] = {{"m", r.m}, {"modulus", hex(r.modulus)}, {"gamma", hex(r.gamma)}};
    j["function"] = r.function;
    j["position_set"] = r.recipe;

    ordered_json pred;
    pred["n"] = r.prediction.n;
    pred["k"] = r.prediction.k;
    pred["d"] = r.prediction.d;
    pred["table"] = table_json(r.prediction.table);
    pred["dual"] = {r.prediction.dual_n, r.prediction.dual_k, r.prediction.dual_d};
    pred["self_complementary"] = r.prediction.self_complementary;
    pred["dual_sphere_packing_optimal_claim"] = r.prediction.dual_sp_optimal_claim;
    pred["griesmer_optimal_claim"] = r.prediction.griesmer_optimal_claim;
    j["predicted"] = pred;

    ordered_json en;
    en["n"] = r.enumerated.n;
    en["k"] = r.enumerated.k;
    en["d"] = r.enumerated.d;
    en["table"] = table_json(r.enumerated.wd.counts);
    en["dual_distance"] = r.enumerated.dual_d;
    en["self_complementary"] = r.enumerated.self_complementary;
    ordered_json bounds;
    bounds["dual_sphere_packing_optimal"] = r.enumerated.dual_sp_optimal_plain;
    bounds["dual_sphere_packing_optimal_even_step"] = r.enumerated.dual_sp_optimal_even;
    bounds["griesmer_equality"] = r.enumerated.griesmer_equality;
    en["bounds"] = bounds;
    ordered_json res = ordered_json::array();
    for (const auto& q : r.enumerated.pless_residuals) res.push_back(q.get_str());
    en["pless_residuals"] = res;
    j["enumerated"] = en;

    ordered_json rows = ordered_json::array();
    for (const auto& rv : r.rows)
        rows.push_back({{"weight", rv.weight},
                        {"predicted", rv.predicted.get_str()},
                        {"enumerated", rv.actual.get_str()},
                        {"match", rv.match}});
    j["rows"] = rows;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["notes"] = r.notes;
    if (include_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

std::string report_to_table(const VerificationReport& r) {
    std::ostringstream os;
    os << to_string(r.prediction.id) << "  " << params_to_string(r.prediction.params) << "\n";
    os << "  field: m=" << r.m << " modulus=" << hex(r.modulus) << " gamma=" << hex(r.gamma)
       << "\n";
    os << "  f = " << r.function << ",  D = " << r.recipe << "\n";
    os << "  predicted [" << r.prediction.n << "," << r.prediction.k << "," << r.prediction.d
       << "]  dual [" << r.prediction.dual_n << "," << r.prediction.dual_k << ","
       << r.prediction.dual_d << "]\n";
    os << "  enumerated [" << r.enumerated.n << "," << r.enumerated.k << "," << r.enumerated.d
       << "]  dual distance " << r.enumerated.dual_d
       << (r.enumerated.self_complementary ? "  self-complementary" : "") << "\n";
    os << "  " << std::setw(8) << "weight" << std::setw(16) << "predicted" << std::setw(16)
       << "enumerated" << "  match\n";
    for (const auto& rv : r.rows)
        os << "  " << std::setw(8) << rv.weight << std::setw(16) << rv.predicted.get_str()
           << std::setw(16) << rv.actual.get_str() << "  " << (rv.match ? "yes" : "NO") << "\n";
    os << "  bounds: dual sphere-packing optimal " << (r.enumerated.dual_sp_optimal_plain ? "yes" : "no")
       << " (even step " << (r.enumerated.dual_sp_optimal_even ? "yes" : "no") << "), Griesmer equality "
       << (r.enumerated.griesmer_equality ? "yes" : "no") << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    os << "  verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string summary_csv(const std::vector<VerificationReport>& rs, bool include_runtime) {
    std::ostringstream os;
    os << "theorem,params,n,k,d,dual_distance,verdict";
    if (include_runtime) os << ",runtime_ms";
    os << "\n";
    for (const auto& r : rs) {
        os << to_string(r.prediction.id) << ",\"" << params_to_string(r.prediction.params) << "\","
           << r.enumerated.n << "," << r.enumerated.k << "," << r.enumerated.d << ","
           << r.enumerated.dual_d << "," << (r.pass ? "pass" : "fail");
        if (include_runtime) os << "," << r.runtime_ms;
        os << "\n";
    }
    return os.str();
}

ordered_json spectrum_to_json(const FieldCtx& F, const FunctionSpec& f, const WalshSpectrum& sp,
                              int ab, bool apn) {
    ordered_json j;
    j["m"] = F.m();
    j["field"] = {{"modulus", hex(F.modulus())}, {"gamma", hex(F.gamma())}};
    j["function"] = f.to_string();
    ordered_json rows = ordered_json::array();
    for (const auto& [v, c] : sp.counts) rows.push_back({v, c});
    j["spectrum"] = rows;
    if (ab < 0) j["almost_bent"] = "refused: m even";
    else j["almost_bent"] = ab == 1;
    j["apn"] = apn;
    return j;
}

}  // namespace pcodes
