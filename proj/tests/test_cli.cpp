#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& redirect = "2>/dev/null") {
    std::string cmd = std::string(PCODES_CLI_PATH) + " " + args + " " + redirect;
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("spectrum reports AB and APN verdicts") {
    auto r = run("spectrum --m 7 --family gold --param h=1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["almost_bent"] == true);
    CHECK(j["apn"] == true);
    CHECK(j["function"] == "gold(h=1)");

    auto r6 = run("spectrum --m 6 --family gold --param h=1 --format json");
    REQUIRE(r6.exit_code == 0);
    auto j6 = json::parse(r6.out);
    CHECK(j6["almost_bent"] == "refused: m even");
    CHECK(j6["apn"] == true);

    auto rl = run("spectrum --m 5 --function x^1 --format json");
    REQUIRE(rl.exit_code == 0);
    CHECK(json::parse(rl.out)["almost_bent"] == false);
}

TEST_CASE("build emits parameters, weights and flags") {
    auto r = run("build --m 7 --function x^3 --recipe trace-of-f --lambda 1 --nu 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["n"] == 64);
    CHECK(j["k"] == 14);
    CHECK(j["d"] == 24);
    CHECK(j["dual_distance"] == 6);
    CHECK(j["self_complementary"] == true);
    CHECK(j["position_set"]["size"] == 64);

    auto rc = run("build --m 6 --function 'cyclo(d=21)' --recipe cyclotomic --t 3 --format csv");
    REQUIRE(rc.exit_code == 0);
    CHECK(rc.out == "weight,count\n0,1\n8,21\n9,42\n12,42\n13,21\n21,1\n");

    auto rq = run("build --m 9 --family qps --param t1=9 --param t2=65 --recipe trace-support "
                  "--format json");
    REQUIRE(rq.exit_code == 0);
    auto jq = json::parse(rq.out);
    CHECK(jq["n"] == 256);
    CHECK(jq["k"] == 15);
    CHECK(jq["d"] == 96);

    // x^3 on the cyclotomic positions of order 3 (3d = 9 mod 63 solves to d = 3)
    auto r3 = run("build --m 6 --function x^3 --recipe cyclotomic --t 3 --format json");
    REQUIRE(r3.exit_code == 0);
    auto j3 = json::parse(r3.out);
    CHECK(j3["n"] == 21);
    CHECK(j3["k"] == 9);
    CHECK(j3["d"] == 8);
}

TEST_CASE("verify single case") {
    auto r = run("verify --theorem T4.6 --m 5 --k 1 --format json --no-timestamp");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["predicted"]["n"] == 16);
    CHECK(j["predicted"]["k"] == 6);
    CHECK(j["predicted"]["d"] == 6);
    CHECK(j["enumerated"]["dual_distance"] == 4);

    // hypothesis violation: structured error, nonzero exit
    auto bad = run("verify --theorem T4.2c1 --m 6 --k 1 --format json --no-timestamp", "2>&1 1>/dev/null");
    CHECK(bad.exit_code == 2);
    auto je = json::parse(bad.out);
    CHECK(je.contains("error"));
    CHECK(je["error"]["type"] == "hypothesis");
}

TEST_CASE("verify-all subset and exit-code contract") {
    auto r = run("verify-all --m-max 5 --format csv --no-timestamp");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("theorem,params,n,k,d,dual_distance,verdict") == 0);
    CHECK(r.out.find("fail") == std::string::npos);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines >= 14);  // header + the m<=5 cases
}

TEST_CASE("identical config yields byte-identical json") {
    auto a = run("verify --theorem T5.3 --m 6 --k 1 --format json --no-timestamp");
    auto b = run("verify --theorem T5.3 --m 6 --k 1 --format json --no-timestamp");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("field config override changes the modulus but not the distribution") {
    std::string cfg = "cli_field_config.tmp";
    {
        std::ofstream f(cfg);
        f << "6 = 0x49\n";  // x^6+x^3+1, irreducible
    }
    auto a = run("build --m 6 --function x^21 --recipe cyclotomic --t 3 --format json "
                 "--field-config " + cfg);
    REQUIRE(a.exit_code == 0);
    auto ja = json::parse(a.out);
    CHECK(ja["field"]["modulus"] == "0x49");
    auto b = run("build --m 6 --function x^21 --recipe cyclotomic --t 3 --format json");
    CHECK(json::parse(b.out)["weights"] == ja["weights"]);

    {
        std::ofstream f(cfg);
        f << "6 = 12\n";  // degree mismatch
    }
    auto bad = run("build --m 6 --function x^21 --recipe cyclotomic --t 3 --format json "
                   "--field-config " + cfg, "2>&1 1>/dev/null");
    CHECK(bad.exit_code != 0);
    CHECK(json::parse(bad.out).contains("error"));
    std::remove(cfg.c_str());
}

TEST_CASE("verify-all with a bad field config fails with a structured error") {
    std::string cfg = "cli_bad_config.tmp";
    {
        std::ofstream f(cfg);
        f << "gibberish\n";
    }
    auto r = run("verify-all --m-max 5 --format json --field-config " + cfg, "2>&1 1>/dev/null");
    CHECK(r.exit_code != 0);
    CHECK(json::parse(r.out).contains("error"));
    std::remove(cfg.c_str());
}

TEST_CASE("report renders saved json") {
    std::string path = "cli_report.tmp.json";
    auto r = run("verify --theorem T5.2div3 --m 6 --t 3 --format json --no-timestamp --out " + path);
    REQUIRE(r.exit_code == 0);
    auto rep = run("report --in " + path);
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("T5.2div3") != std::string::npos);
    CHECK(rep.out.find("verdict pass") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("list-functions") {
    auto r = run("list-functions --m 7 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    bool has3 = false;
    for (const auto& e : j["ab_monomials"]) has3 = has3 || e["d"] == 3;
    CHECK(has3);
    auto r6 = run("list-functions --m 6 --format json");
    CHECK(json::parse(r6.out)["ab_monomials"].empty());
}

TEST_CASE("guard overrides are honored") {
    auto r = run("build --m 7 --function x^3 --recipe trace-support --guard-k 10 --format json",
                 "2>&1 1>/dev/null");
    CHECK(r.exit_code != 0);
    CHECK(r.out.find("guard") != std::string::npos);
}
