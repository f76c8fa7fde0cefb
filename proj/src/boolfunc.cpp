#include "pcodes/boolfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcodes {

namespace {

long long checked_pow2ll(int e) {
    if (e < 0 || e > 62) throw std::invalid_argument("2^e out of range");
    return 1ll << e;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

FunctionSpec FunctionSpec::monomial(int m, long long d, felem c) {
    require(m >= 2, "monomial: m >= 2");
    require(d >= 1, "monomial: exponent d >= 1 (f(0) = 0 requires d > 0)");
    FunctionSpec f;
    f.family = FuncFamily::Monomial;
    f.m = m;
    f.d = d;
    f.linear_c = c;
    return f;
}

FunctionSpec FunctionSpec::gold(int m, int h) {
    require(h >= 1 && h < m, "gold: 1 <= h < m");
    FunctionSpec f;
    f.family = FuncFamily::Gold;
    f.m = m;
    f.h = h;
    f.d = checked_pow2ll(h) + 1;
    return f;
}

FunctionSpec FunctionSpec::kasami(int m, int h) {
    require(h >= 2 && h < m, "kasami: 2 <= h < m");
    FunctionSpec f;
    f.family = FuncFamily::Kasami;
    f.m = m;
    f.h = h;
    long long order = checked_pow2ll(m) - 1;
    f.d = (checked_pow2ll(2 * h) - checked_pow2ll(h) + 1) % order;
    return f;
}

FunctionSpec FunctionSpec::welch(int m) {
    require(m % 2 == 1, "welch: m must be odd");
    FunctionSpec f;
    f.family = FuncFamily::Welch;
    f.m = m;
    f.d = checked_pow2ll((m - 1) / 2) + 3;
    return f;
}

FunctionSpec FunctionSpec::niho1(int m) {
    require(m % 4 == 1, "niho1: m = 1 mod 4");
    FunctionSpec f;
    f.family = FuncFamily::Niho1;
    f.m = m;
    f.d = checked_pow2ll((m - 1) / 2) + checked_pow2ll((m - 1) / 4) - 1;
    return f;
}

FunctionSpec FunctionSpec::niho2(int m) {
    require(m % 4 == 3, "niho2: m = 3 mod 4");
    FunctionSpec f;
    f.family = FuncFamily::Niho2;
    f.m = m;
    f.d = (checked_pow2ll((m - 1) / 2) + checked_pow2ll((3 * m - 1) / 4) - 1) % (checked_pow2ll(m) - 1);
    return f;
}

FunctionSpec FunctionSpec::quadratic_pair_sum(int m, long long t1, long long t2) {
    require(m % 3 == 0 && m >= 9, "qps: 3 | m and m >= 9");
    long long a = checked_pow2ll(m / 3) + 1;
    long long b = checked_pow2ll(2 * m / 3) + 1;
    long long c = checked_pow2ll(2 * m / 3) + checked_pow2ll(m / 3);
    auto ok = [&](long long t) { return t == a || t == b || t == c; };
    require(ok(t1) && ok(t2) && t1 != t2,
            "qps: t1 != t2, both in {2^(m/3)+1, 2^(2m/3)+1, 2^(2m/3)+2^(m/3)}");
    FunctionSpec f;
    f.family = FuncFamily::QuadraticPairSum;
    f.m = m;
    f.t1 = t1;
    f.t2 = t2;
    return f;
}

FunctionSpec FunctionSpec::rel_trace_quadratic(int m, int k) {
    require(k >= 1 && m % k == 0, "rtq: k | m");
    require(k != m && 2 * k != m, "rtq: k not in {m, m/2} (f vanishes at k = m/2)");
    FunctionSpec f;
    f.family = FuncFamily::RelTraceQuadratic;
    f.m = m;
    f.k = k;
    f.d = checked_pow2ll(k) + 1;
    return f;
}

FunctionSpec FunctionSpec::cyclotomic_power(int m, long long d) {
    FunctionSpec f = monomial(m, d);
    f.family = FuncFamily::CyclotomicPower;
    return f;
}

std::string FunctionSpec::to_string() const {
    std::ostringstream os;
    switch (family) {
        case FuncFamily::Monomial:
            os << "monomial(d=" << d;
            if (linear_c) os << ",c=0x" << std::hex << linear_c;
            os << ")";
            break;
        case FuncFamily::Gold: os << "gold(h=" << h << ")"; break;
        case FuncFamily::Kasami: os << "kasami(h=" << h << ")"; break;
        case FuncFamily::Welch: os << "welch"; break;
        case FuncFamily::Niho1: os << "niho1"; break;
        case FuncFamily::Niho2: os << "niho2"; break;
        case FuncFamily::QuadraticPairSum: os << "qps(t1=" << t1 << ",t2=" << t2 << ")"; break;
        case FuncFamily::RelTraceQuadratic: os << "rtq(k=" << k << ")"; break;
        case FuncFamily::CyclotomicPower: os << "cyclo(d=" << d << ")"; break;
    }
    return os.str();
}

namespace {

// "name(k=v,k=v)" -> (name, {k: v}); bare "name" allowed.
std::pair<std::string, std::map<std::string, std::string>> split_call(const std::string& text) {
    std::string s;
    for (char c : text) if (!isspace(static_cast<unsigned char>(c))) s += static_cast<char>(tolower(c));
    auto lp = s.find('(');
    if (lp == std::string::npos) return {s, {}};
    if (s.back() != ')') throw std::invalid_argument("function spec: missing ')': " + text);
    std::string name = s.substr(0, lp);
    std::string args = s.substr(lp + 1, s.size() - lp - 2);
    std::map<std::string, std::string> kv;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("function spec: expected key=value: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return {name, kv};
}

long long arg_ll(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("function spec: missing parameter '" + key + "'");
    return std::stoll(it->second, nullptr, 0);
}

}  // namespace

FunctionSpec FunctionSpec::parse(const std::string& text, int m) {
    if (text.rfind("x^", 0) == 0) return monomial(m, std::stoll(text.substr(2), nullptr, 0));
    auto [name, kv] = split_call(text);
    if (name == "monomial") {
        felem c = kv.count("c") ? static_cast<felem>(std::stoul(kv.at("c"), nullptr, 0)) : 0;
        return monomial(m, arg_ll(kv, "d"), c);
    }
    if (name == "gold") return gold(m, static_cast<int>(arg_ll(kv, "h")));
    if (name == "kasami") return kasami(m, static_cast<int>(arg_ll(kv, "h")));
    if (name == "welch") return welch(m);
    if (name == "niho1") return niho1(m);
    if (name == "niho2") return niho2(m);
    if (name == "qps") return quadratic_pair_sum(m, arg_ll(kv, "t1"), arg_ll(kv, "t2"));
    if (name == "rtq") return rel_trace_quadratic(m, static_cast<int>(arg_ll(kv, "k")));
    if (name == "cyclo") return cyclotomic_power(m, arg_ll(kv, "d"));
    throw std::invalid_argument("unknown function family: " + text);
}

felem eval(const FieldCtx& F, const FunctionSpec& f, felem x) {
    if (f.m != F.m()) throw std::invalid_argument("function degree does not match field");
    switch (f.family) {
        case FuncFamily::QuadraticPairSum:
            return F.pow(x, f.t1) ^ F.pow(x, f.t2);
        case FuncFamily::RelTraceQuadratic:
            return F.rel_trace(f.k, F.pow(x, f.d));
        default: {
            felem y = F.pow(x, f.d);
            if (f.linear_c) y ^= F.mul(f.linear_c, x);
            return y;
        }
    }
}

std::vector<felem> eval_table(const FieldCtx& F, const FunctionSpec& f) {
    std::vector<felem> t(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) t[x] = eval(F, f, x);
    return t;
}

long long walsh(const FieldCtx& F, const FunctionSpec& f, felem a, felem b) {
    long long s = 0;
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        int bit = F.trace(F.mul(a, eval(F, f, x))) ^ F.trace(F.mul(b, x));
        s += bit ? -1 : 1;
    }
    return s;
}

namespace {

// u(b) with Tr(bx) = <u(b), x> over bit vectors in the polynomial basis.
std::vector<std::uint32_t> dual_index_table(const FieldCtx& F) {
    std::vector<std::uint32_t> ub(F.size(), 0);
    std::vector<std::uint32_t> unit(F.m());
    for (int j = 0; j < F.m(); ++j) {
        std::uint32_t u = 0;
        for (int i = 0; i < F.m(); ++i)
            if (F.trace(F.mul(1u << j, 1u << i))) u |= 1u << i;
        unit[j] = u;
    }
    for (std::uint32_t b = 1; b < F.size(); ++b)
        ub[b] = ub[b & (b - 1)] ^ unit[__builtin_ctz(b)];
    return ub;
}

void wht_inplace(std::vector<long long>& v) {
    std::size_t n = v.size();
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                long long a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
}

}  // namespace

std::vector<long long> walsh_row(const FieldCtx& F, const std::vector<felem>& ftab, felem a) {
    std::vector<long long> buf(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x)
        buf[x] = F.trace(F.mul(a, ftab[x])) ? -1 : 1;
    wht_inplace(buf);
    auto ub = dual_index_table(F);
    std::vector<long long> out(F.size());
    for (std::uint32_t b = 0; b < F.size(); ++b) out[b] = buf[ub[b]];
    return out;
}

WalshSpectrum walsh_spectrum(const FieldCtx& F, const FunctionSpec& f) {
    if (F.m() > 16) throw std::invalid_argument("walsh_spectrum: resource guard m <= 16");
    auto ftab = eval_table(F, f);
    WalshSpectrum sp;
    std::vector<long long> buf(F.size());
    for (std::uint32_t a = 1; a < F.size(); ++a) {
        for (std::uint32_t x = 0; x < F.size(); ++x)
            buf[x] = F.trace(F.mul(a, ftab[x])) ? -1 : 1;
        wht_inplace(buf);
        // multiset over b equals multiset over the WHT index
        for (long long v : buf) ++sp.counts[v];
    }
    return sp;
}

bool is_ab(const FieldCtx& F, const FunctionSpec& f) {
    if (F.m() % 2 == 0)
        throw std::invalid_argument("is_ab: almost bent functions exist only for odd m");
    if (F.m() > 13) throw std::invalid_argument("is_ab: resource guard m <= 13");
    long long peak = 1ll << ((F.m() + 1) / 2);
    auto sp = walsh_spectrum(F, f);
    for (const auto& [v, cnt] : sp.counts)
        if (v != 0 && v != peak && v != -peak) return false;
    return true;
}

bool is_apn(const FieldCtx& F, const FunctionSpec& f) {
    if (F.m() > 13) throw std::invalid_argument("is_apn: resource guard m <= 13");
    auto ftab = eval_table(F, f);
    std::vector<std::uint32_t> cnt(F.size());
    for (std::uint32_t a = 1; a < F.size(); ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint32_t x = 0; x < F.size(); ++x)
            ++cnt[ftab[x ^ a] ^ ftab[x]];
        for (auto c : cnt)
            if (c > 2) return false;
    }
    return true;
}

std::vector<AbMonomial> ab_monomial_catalog(int m) {
    if (m % 2 == 0) throw std::invalid_argument("ab_monomial_catalog: m must be odd");
    long long order = checked_pow2ll(m) - 1;
    std::vector<AbMonomial> out;
    for (int h = 1; h < m; ++h)
        if (std::gcd(m, h) == 1)
            out.push_back({(checked_pow2ll(h) + 1) % order, "gold(h=" + std::to_string(h) + ")"});
    for (int h = 2; h < m; ++h)
        if (std::gcd(m, h) == 1)
            out.push_back({(checked_pow2ll(2 * h) - checked_pow2ll(h) + 1) % order,
                           "kasami(h=" + std::to_string(h) + ")"});
    out.push_back({checked_pow2ll((m - 1) / 2) + 3, "welch"});
    if (m % 4 == 1)
        out.push_back({checked_pow2ll((m - 1) / 2) + checked_pow2ll((m - 1) / 4) - 1, "niho1"});
    if (m % 4 == 3)
        out.push_back({(checked_pow2ll((m - 1) / 2) + checked_pow2ll((3 * m - 1) / 4) - 1) % order, "niho2"});
    return out;
}

std::vector<long long> ab_monomial_exponents(int m) {
    std::vector<long long> ds;
    for (const auto& e : ab_monomial_catalog(m)) ds.push_back(e.d);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

long long t_sum(const FieldCtx& F, const std::vector<felem>& D, long long d, felem a, felem b) {
    long long s = 0;
    for (felem x : D) {
        int bit = F.trace(F.mul(a, F.pow(x, d))) ^ F.trace(F.mul(b, x));
        s += bit ? -1 : 1;
    }
    return s;
}

}  // namespace pcodes
