#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcodes/report.hpp"
#include "pcodes/verify_cases.hpp"

using nlohmann::ordered_json;
using namespace pcodes;

namespace {

struct CommonOpts {
    int m = 0;
    std::string family, function;
    std::vector<std::string> params;  // key=value
    std::string format;               // json | csv | table
    std::string out_path;
    std::string field_config_path;
    int jobs = 1;
    int guard_k = 26, guard_n = 4096;
    bool no_timestamp = false;
};

std::string effective_format(const CommonOpts& o) {
    if (!o.format.empty()) return o.format;
    return isatty(STDOUT_FILENO) ? "table" : "json";
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw std::runtime_error("cannot write " + o.out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

[[noreturn]] void fail(const CommonOpts& o, const std::string& type, const std::string& msg,
                       int code) {
    if (effective_format(o) == "json") {
        ordered_json err;
        err["error"] = {{"type", type}, {"message", msg}};
        std::cerr << err.dump() << "\n";
    } else {
        std::cerr << "error (" << type << "): " << msg << "\n";
    }
    std::exit(code);
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

FunctionSpec make_function(const CommonOpts& o) {
    if (!o.function.empty()) return FunctionSpec::parse(o.function, o.m);
    if (o.family.empty()) throw std::invalid_argument("need --function or --family");
    std::ostringstream text;
    text << o.family;
    if (!o.params.empty()) {
        text << "(";
        for (std::size_t i = 0; i < o.params.size(); ++i)
            text << (i ? "," : "") << o.params[i];
        text << ")";
    }
    return FunctionSpec::parse(text.str(), o.m);
}

std::map<int, std::uint32_t> field_overrides(const CommonOpts& o) {
    if (o.field_config_path.empty()) return {};
    return parse_field_config(o.field_config_path);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_function) {
    cmd->add_option("--m", o.m, "extension degree of GF(2^m)");
    if (with_function) {
        cmd->add_option("--family", o.family,
                        "function family: monomial|gold|kasami|welch|niho1|niho2|qps|rtq|cyclo");
        cmd->add_option("--param", o.params, "family parameter key=value (repeatable)");
        cmd->add_option("--function", o.function, "full function text, e.g. 'gold(h=1)' or 'x^3'");
    }
    cmd->add_option("--format", o.format, "output format: json|csv|table");
    cmd->add_option("--out", o.out_path, "write output to file instead of stdout");
    cmd->add_option("--field-config", o.field_config_path, "modulus override file (m = modulus)");
    cmd->add_option("--jobs", o.jobs, "worker count for batch verification");
    cmd->add_option("--guard-k", o.guard_k, "enumeration guard on dimension (default 26)");
    cmd->add_option("--guard-n", o.guard_n, "enumeration guard on length (default 4096)");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit timestamps and runtimes from output");
}

int cmd_list_functions(const CommonOpts& o) {
    if (o.m < 2) throw std::invalid_argument("list-functions: need --m");
    ordered_json j;
    j["m"] = o.m;
    ordered_json ab = ordered_json::array();
    if (o.m % 2 == 1) {
        for (const auto& e : ab_monomial_catalog(o.m))
            ab.push_back({{"d", e.d}, {"family", e.family}});
    }
    j["ab_monomials"] = ab;
    ordered_json quads = ordered_json::array();
    for (int h = 1; h < o.m; ++h) quads.push_back(FunctionSpec::gold(o.m, h).to_string());
    if (o.m % 3 == 0 && o.m >= 9) {
        long long a = (1ll << (o.m / 3)) + 1, b = (1ll << (2 * o.m / 3)) + 1,
                  c = (1ll << (2 * o.m / 3)) + (1ll << (o.m / 3));
        for (auto [x, y] : {std::pair{a, b}, {a, c}, {b, c}})
            quads.push_back(FunctionSpec::quadratic_pair_sum(o.m, x, y).to_string());
    }
    for (int k = 1; k < o.m; ++k)
        if (o.m % k == 0 && 2 * k != o.m) quads.push_back(FunctionSpec::rel_trace_quadratic(o.m, k).to_string());
    j["quadratic_families"] = quads;

    if (effective_format(o) == "table") {
        std::ostringstream os;
        os << "functions on GF(2^" << o.m << ")\n";
        if (o.m % 2 == 1) {
            os << "  almost bent monomials x^d:\n";
            for (const auto& e : j["ab_monomials"])
                os << "    d = " << e["d"].get<long long>() << "  (" << e["family"].get<std::string>()
                   << ")\n";
        } else {
            os << "  almost bent monomials: none (m even)\n";
        }
        os << "  quadratic families:\n";
        for (const auto& q : quads) os << "    " << q.get<std::string>() << "\n";
        emit(o, os.str());
    } else {
        emit(o, j.dump(2));
    }
    return 0;
}

int cmd_spectrum(const CommonOpts& o) {
    if (o.m < 2) throw std::invalid_argument("spectrum: need --m");
    if (o.m > 13) throw std::invalid_argument("spectrum: resource guard m <= 13 for full spectra");
    FieldCtx F = field_from_config(o.m, field_overrides(o));
    FunctionSpec f = make_function(o);
    WalshSpectrum sp = walsh_spectrum(F, f);
    int ab = o.m % 2 == 0 ? -1 : (is_ab(F, f) ? 1 : 0);
    bool apn = is_apn(F, f);
    std::string fmt = effective_format(o);
    if (fmt == "json") {
        emit(o, spectrum_to_json(F, f, sp, ab, apn).dump(2));
    } else if (fmt == "csv") {
        std::ostringstream os;
        os << "value,count\n";
        for (const auto& [v, c] : sp.counts) os << v << "," << c << "\n";
        emit(o, os.str());
    } else {
        std::ostringstream os;
        os << "Walsh spectrum of " << f.to_string() << " on GF(2^" << o.m << ") over a != 0\n";
        for (const auto& [v, c] : sp.counts)
            os << "  " << std::setw(8) << v << "  x " << c << "\n";
        os << "  AB: " << (ab < 0 ? "refused (m even)" : ab ? "true" : "false")
           << ", APN: " << (apn ? "true" : "false") << "\n";
        emit(o, os.str());
    }
    return 0;
}

struct BuildOpts {
    std::string recipe;
    std::string lambda = "1";
    int nu = 0;
    std::uint32_t t = 1;
};

int cmd_build(const CommonOpts& o, const BuildOpts& b) {
    if (o.m < 2) throw std::invalid_argument("build: need --m");
    FieldCtx F = field_from_config(o.m, field_overrides(o));
    FunctionSpec f = make_function(o);
    Recipe r;
    if (b.recipe == "trace-of-f")
        r = {RecipeKind::TraceOfF, static_cast<felem>(std::stoul(b.lambda, nullptr, 0)), b.nu, 1};
    else if (b.recipe == "trace-support")
        r = {RecipeKind::TraceSupport, 1, 0, 1};
    else if (b.recipe == "cyclotomic")
        r = {RecipeKind::Cyclotomic, 1, 0, b.t};
    else
        throw std::invalid_argument("build: --recipe is trace-of-f|trace-support|cyclotomic");

    PositionSet D = build_position_set(F, r, &f);
    BinaryLinearCode code = build_code(F, f, D);
    WeightDistribution wd = enumerate_weights(code, {o.guard_k, o.guard_n});
    int d = min_distance(wd);
    int dd = dual_min_distance(wd, code.n, code.k);
    bool selfc = is_self_complementary(code);

    std::string fmt = effective_format(o);
    if (fmt == "csv") {
        emit(o, weights_to_csv(wd));
        return 0;
    }
    ordered_json j;
    j["field"] = {{"m", o.m},
                  {"modulus", "0x" + mpz_class(F.modulus()).get_str(16)},
                  {"gamma", "0x" + mpz_class(F.gamma()).get_str(16)}};
    j["function"] = f.to_string();
    j["position_set"] = {{"recipe", r.to_string()}, {"size", D.size()}};
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = d;
    ordered_json rows = ordered_json::array();
    for (const auto& [w, a] : wd.counts) rows.push_back({w, a.get_str()});
    j["weights"] = rows;
    j["dual_distance"] = dd;
    j["self_complementary"] = selfc;
    j["bounds"] = {
        {"sphere_packing_distance_optimal", sphere_packing_distance_optimal(code.n, code.k, d, false)},
        {"dual_sphere_packing_optimal", sphere_packing_distance_optimal(code.n, code.n - code.k, dd, false)},
        {"dual_sphere_packing_optimal_even_step",
         sphere_packing_distance_optimal(code.n, code.n - code.k, dd, selfc)},
        {"griesmer_ok", griesmer_ok(code.n, code.k, d)},
        {"griesmer_equality", griesmer_equality(code.n, code.k, d)}};
    if (fmt == "json") {
        emit(o, j.dump(2));
    } else {
        std::ostringstream os;
        os << f.to_string() << " on GF(2^" << o.m << "), D = " << r.to_string() << " (size "
           << D.size() << ")\n";
        os << "  [" << code.n << "," << code.k << "," << d << "], dual distance " << dd
           << (selfc ? ", self-complementary" : "") << "\n";
        os << "  " << std::setw(8) << "weight" << std::setw(16) << "count" << "\n";
        for (const auto& [w, a] : wd.counts)
            os << "  " << std::setw(8) << w << std::setw(16) << a.get_str() << "\n";
        os << "  dual sphere-packing optimal: "
           << (j["bounds"]["dual_sphere_packing_optimal"].get<bool>() ? "yes" : "no")
           << " (even step: "
           << (j["bounds"]["dual_sphere_packing_optimal_even_step"].get<bool>() ? "yes" : "no")
           << ")\n";
        os << "  Griesmer equality: " << (j["bounds"]["griesmer_equality"].get<bool>() ? "yes" : "no")
           << "\n";
        emit(o, os.str());
    }
    return 0;
}

struct VerifyOpts_ {
    std::string theorem;
    int k = 0;
    std::uint32_t t = 0;
    long long t1 = 0, t2 = 0, d = 0;
    std::string lambda = "1";
    bool no_strict = false;
    std::string m_filter;  // verify-all: --m-max
    int m_max = 0;
    std::string manifest_path;
};

int cmd_verify(const CommonOpts& o, const VerifyOpts_& v) {
    auto id = theorem_from_string(v.theorem);
    if (!id) throw std::invalid_argument("unknown theorem id: " + v.theorem);
    if (o.m < 2) throw std::invalid_argument("verify: need --m");
    VerifyCase c;
    c.id = *id;
    c.params.m = o.m;
    c.params.k = v.k;
    c.params.t = v.t;
    c.params.t1 = v.t1;
    c.params.t2 = v.t2;
    c.params.d = v.d;
    c.params.lambda = static_cast<felem>(std::stoul(v.lambda, nullptr, 0));
    c.params.function = o.function;
    VerifyOptions opt;
    opt.guards = {o.guard_k, o.guard_n};
    opt.strict_hypotheses = !v.no_strict;
    VerificationReport r = run_case(c, field_overrides(o), opt);
    std::string fmt = effective_format(o);
    if (fmt == "json") {
        ordered_json j = report_to_json(r, !o.no_timestamp);
        if (!o.no_timestamp) j["timestamp"] = iso_timestamp();
        emit(o, j.dump(2));
    } else if (fmt == "csv") {
        emit(o, summary_csv({r}, !o.no_timestamp));
    } else {
        emit(o, report_to_table(r));
    }
    return r.pass ? 0 : 1;
}

int cmd_verify_all(const CommonOpts& o, const VerifyOpts_& v) {
    std::vector<VerifyCase> cases;
    if (v.manifest_path.empty()) {
        cases = default_cases();
    } else {
        std::ifstream f(v.manifest_path);
        if (!f) throw std::runtime_error("cannot open manifest: " + v.manifest_path);
        nlohmann::json doc = nlohmann::json::parse(f);
        cases = manifest_cases(doc);
    }
    if (v.m_max > 0) {
        std::vector<VerifyCase> kept;
        for (auto& c : cases)
            if (c.params.m <= v.m_max) kept.push_back(c);
        cases = std::move(kept);
    }
    VerifyOptions opt;
    opt.guards = {o.guard_k, o.guard_n};
    opt.strict_hypotheses = !v.no_strict;
    auto reports = run_cases(cases, field_overrides(o), opt, o.jobs);

    std::size_t passed = 0;
    for (const auto& r : reports)
        if (r.pass) ++passed;

    std::string fmt = effective_format(o);
    if (fmt == "json") {
        ordered_json j;
        if (!o.no_timestamp) j["timestamp"] = iso_timestamp();
        j["total"] = reports.size();
        j["passed"] = passed;
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, !o.no_timestamp));
        j["cases"] = arr;
        emit(o, j.dump(2));
    } else if (fmt == "csv") {
        emit(o, summary_csv(reports, !o.no_timestamp));
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            os << (r.pass ? "PASS" : "FAIL") << "  " << to_string(r.prediction.id) << "  "
               << params_to_string(r.prediction.params) << "  [" << r.enumerated.n << ","
               << r.enumerated.k << "," << r.enumerated.d << "] dual d " << r.enumerated.dual_d
               << "\n";
            for (const auto& note : r.notes)
                if (note.rfind("error:", 0) == 0) os << "      " << note << "\n";
        }
        os << passed << "/" << reports.size() << " cases passed\n";
        emit(o, os.str());
    }
    return passed == reports.size() ? 0 : 1;
}

int cmd_report(const CommonOpts& o, const std::string& in_path) {
    std::ifstream f(in_path);
    if (!f) throw std::runtime_error("cannot open report: " + in_path);
    nlohmann::json doc = nlohmann::json::parse(f);
    auto render_one = [](const nlohmann::json& j, std::ostream& os) {
        os << j.value("theorem_id", std::string("?")) << "  verdict "
           << j.value("verdict", std::string("?")) << "\n";
        if (j.contains("predicted"))
            os << "  predicted [" << j["predicted"]["n"] << "," << j["predicted"]["k"] << ","
               << j["predicted"]["d"] << "]\n";
        if (j.contains("enumerated"))
            os << "  enumerated [" << j["enumerated"]["n"] << "," << j["enumerated"]["k"] << ","
               << j["enumerated"]["d"] << "] dual distance " << j["enumerated"]["dual_distance"]
               << "\n";
        if (j.contains("rows")) {
            os << "  " << std::setw(8) << "weight" << std::setw(16) << "predicted" << std::setw(16)
               << "enumerated" << "  match\n";
            for (const auto& rv : j["rows"])
                os << "  " << std::setw(8) << rv["weight"].get<int>() << std::setw(16)
                   << rv["predicted"].get<std::string>() << std::setw(16)
                   << rv["enumerated"].get<std::string>() << "  "
                   << (rv["match"].get<bool>() ? "yes" : "NO") << "\n";
        }
        for (const auto& note : j.value("notes", nlohmann::json::array()))
            os << "  note: " << note.get<std::string>() << "\n";
    };
    std::ostringstream os;
    if (doc.contains("cases")) {
        for (const auto& c : doc["cases"]) {
            render_one(c, os);
            os << "\n";
        }
        os << doc.value("passed", 0) << "/" << doc.value("total", 0) << " cases passed\n";
    } else {
        render_one(doc, os);
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"punctured binary codes from functions on GF(2^m): build, enumerate, verify"};
    app.require_subcommand(1);

    CommonOpts o_list, o_spec, o_build, o_verify, o_all, o_report;
    BuildOpts b;
    VerifyOpts_ v, va;
    std::string report_in;

    auto* c_list = app.add_subcommand("list-functions", "list the function catalog for one m");
    add_common(c_list, o_list, false);

    auto* c_spec = app.add_subcommand("spectrum", "Walsh spectrum and AB/APN verdicts");
    add_common(c_spec, o_spec, true);

    auto* c_build = app.add_subcommand("build", "build one punctured code and enumerate it");
    add_common(c_build, o_build, true);
    c_build->add_option("--recipe", b.recipe, "position set: trace-of-f|trace-support|cyclotomic")
        ->required();
    c_build->add_option("--lambda", b.lambda, "lambda for trace-of-f (int, 0x.. ok)");
    c_build->add_option("--nu", b.nu, "nu in {0,1} for trace-of-f");
    c_build->add_option("--t", b.t, "t for cyclotomic");

    auto* c_verify = app.add_subcommand("verify", "verify one theorem instance");
    add_common(c_verify, o_verify, true);
    c_verify->add_option("--theorem", v.theorem, "theorem id, e.g. T4.2c1")->required();
    c_verify->add_option("--k", v.k, "family parameter k");
    c_verify->add_option("--t", v.t, "cyclotomic order t");
    c_verify->add_option("--t1", v.t1, "first exponent (T4.4)");
    c_verify->add_option("--t2", v.t2, "second exponent (T4.4)");
    c_verify->add_option("--d", v.d, "monomial exponent (C3.6)");
    c_verify->add_option("--lambda", v.lambda, "lambda (T3.3)");
    c_verify->add_flag("--no-strict", v.no_strict, "report hypothesis violations instead of refusing");

    auto* c_all = app.add_subcommand("verify-all", "run the whole verification matrix");
    add_common(c_all, o_all, false);
    c_all->add_option("--m-max", va.m_max, "only run cases with m <= m-max");
    c_all->add_option("--manifest", va.manifest_path, "case manifest (JSON), default embedded");
    c_all->add_flag("--no-strict", va.no_strict, "report hypothesis violations instead of refusing");

    auto* c_report = app.add_subcommand("report", "render a saved JSON report as text");
    add_common(c_report, o_report, false);
    c_report->add_option("--in", report_in, "report file from verify/verify-all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    CommonOpts* active = nullptr;
    try {
        if (c_list->parsed()) { active = &o_list; return cmd_list_functions(o_list); }
        if (c_spec->parsed()) { active = &o_spec; return cmd_spectrum(o_spec); }
        if (c_build->parsed()) { active = &o_build; return cmd_build(o_build, b); }
        if (c_verify->parsed()) { active = &o_verify; return cmd_verify(o_verify, v); }
        if (c_all->parsed()) { active = &o_all; return cmd_verify_all(o_all, va); }
        if (c_report->parsed()) { active = &o_report; return cmd_report(o_report, report_in); }
    } catch (const HypothesisError& e) {
        fail(active ? *active : o_verify, "hypothesis", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        fail(active ? *active : o_verify, "usage", e.what(), 2);
    } catch (const std::exception& e) {
        fail(active ? *active : o_verify, "runtime", e.what(), 1);
    }
    return 2;
}
