#include "pcodes/verify_cases.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pcodes/report.hpp"

namespace pcodes {

std::vector<VerifyCase> manifest_cases(const nlohmann::json& doc) {
    if (!doc.contains("cases") || !doc["cases"].is_array())
        throw std::runtime_error("manifest: expected top-level \"cases\" array");
    std::vector<VerifyCase> out;
    for (const auto& e : doc["cases"]) {
        auto name = e.at("theorem").get<std::string>();
        auto id = theorem_from_string(name);
        if (!id) throw std::runtime_error("manifest: unknown theorem id: " + name);
        TheoremParams p;
        p.m = e.at("m").get<int>();
        if (e.contains("k")) p.k = e["k"].get<int>();
        if (e.contains("t")) p.t = e["t"].get<std::uint32_t>();
        if (e.contains("t1")) p.t1 = e["t1"].get<long long>();
        if (e.contains("t2")) p.t2 = e["t2"].get<long long>();
        if (e.contains("lambda")) p.lambda = e["lambda"].get<std::uint32_t>();
        if (e.contains("function")) p.function = e["function"].get<std::string>();

        std::vector<long long> ds;
        if (e.contains("d")) {
            if (e["d"].is_string() && e["d"].get<std::string>() == "*")
                ds = ab_monomial_exponents(p.m);
            else
                ds.push_back(e["d"].get<long long>());
        } else {
            ds.push_back(0);
        }
        for (long long d : ds) {
            VerifyCase c;
            c.id = *id;
            c.params = p;
            c.params.d = d;
            std::ostringstream lbl;
            lbl << name << " " << params_to_string(c.params);
            c.label = lbl.str();
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<VerifyCase> default_cases() {
    return manifest_cases(nlohmann::json::parse(default_manifest_text()));
}

VerificationReport run_case(const VerifyCase& c,
                            const std::map<int, std::uint32_t>& field_overrides,
                            const VerifyOptions& opt) {
    FieldCtx F = field_from_config(c.params.m, field_overrides);
    TheoremParams p = c.params;
    if (p.function.rfind("ab-shift:", 0) == 0) {
        std::string s = p.function.substr(9);
        int sign = s == "+" ? 1 : (s == "-" ? -1 : 0);
        p.function = find_ab_with_walsh_sign(F, p.lambda, sign).to_string();
    }
    return verify(F, c.id, p, opt);
}

namespace {

// resource/hypothesis failures become failed entries so a batch still
// writes partial results
VerificationReport run_case_caught(const VerifyCase& c,
                                   const std::map<int, std::uint32_t>& field_overrides,
                                   const VerifyOptions& opt) {
    try {
        return run_case(c, field_overrides, opt);
    } catch (const std::exception& e) {
        VerificationReport r;
        r.prediction.id = c.id;
        r.prediction.params = c.params;
        r.m = c.params.m;
        r.pass = false;
        r.notes.push_back(std::string("error: ") + e.what());
        return r;
    }
}

}  // namespace

std::vector<VerificationReport> run_cases(const std::vector<VerifyCase>& cases,
                                          const std::map<int, std::uint32_t>& field_overrides,
                                          const VerifyOptions& opt, int jobs) {
    std::vector<VerificationReport> reports(cases.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            reports[i] = run_case_caught(cases[i], field_overrides, opt);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            reports[i] = run_case_caught(cases[i], field_overrides, opt);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace pcodes
