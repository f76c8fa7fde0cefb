#include "pcodes/gf2m.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcodes {

int v2(unsigned long long n) {
    if (n == 0) return kV2Infinity;
    return __builtin_ctzll(n);
}

int poly_degree(std::uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
    int dp = poly_degree(p);
    int da;
    while ((da = poly_degree(a)) >= dp) a ^= p << (da - dp);
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    a = poly_mod(a, p);
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (poly_degree(a) >= poly_degree(p)) a ^= p;
    }
    return r;
}

// Trial division by every polynomial of degree 1..deg/2.
bool poly_irreducible(std::uint64_t p) {
    int d = poly_degree(p);
    if (d <= 0) return false;
    if ((p & 1) == 0) return d == 1;  // divisible by x
    for (int dd = 1; dd <= d / 2; ++dd) {
        for (std::uint64_t q = (1ull << dd) | 1; q < (1ull << (dd + 1)); q += 2) {
            // only odd q: even q are divisible by x, already covered
            if (poly_mod(p, q) == 0) return false;
        }
    }
    return true;
}

std::uint32_t smallest_irreducible(int m) {
    for (std::uint64_t p = (1ull << m) + 1; p < (1ull << (m + 1)); p += 2) {
        if (poly_irreducible(p)) return static_cast<std::uint32_t>(p);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Slow square-and-multiply used before tables exist.
felem slow_pow(felem x, std::uint64_t e, std::uint32_t modulus) {
    std::uint64_t r = 1, b = x;
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, modulus);
        b = poly_mulmod(b, b, modulus);
        e >>= 1;
    }
    return static_cast<felem>(r);
}

}  // namespace

FieldCtx FieldCtx::make(int m) { return make(m, smallest_irreducible(m)); }

FieldCtx FieldCtx::make(int m, std::uint32_t modulus) {
    if (m < 2 || m > 20) throw std::invalid_argument("extension degree m must be in 2..20");
    if (poly_degree(modulus) != m)
        throw std::invalid_argument("modulus must have degree m");
    if (!poly_irreducible(modulus))
        throw std::invalid_argument("modulus polynomial is reducible");

    FieldCtx F;
    F.m_ = m;
    F.modulus_ = modulus;
    F.size_ = 1u << m;
    F.order_ = F.size_ - 1;

    // Smallest-encoded element of full multiplicative order.
    auto ps = prime_factors(F.order_);
    for (felem c = 2; c < F.size_; ++c) {
        bool primitive = true;
        for (auto p : ps) {
            if (slow_pow(c, F.order_ / p, modulus) == 1) { primitive = false; break; }
        }
        if (primitive) { F.gamma_ = c; break; }
    }
    if (F.gamma_ == 0) throw std::logic_error("no primitive element found");

    F.exp_.assign(F.order_, 0);
    F.log_.assign(F.size_, 0);
    std::uint64_t cur = 1;
    for (std::uint32_t i = 0; i < F.order_; ++i) {
        F.exp_[i] = static_cast<felem>(cur);
        F.log_[cur] = i;
        cur = poly_mulmod(cur, F.gamma_, modulus);
    }
    if (cur != 1) throw std::logic_error("gamma order check failed");

    // Tr is F2-linear: Tr(x) = parity(x & mask), mask bit i = Tr(x^i).
    for (int i = 0; i < m; ++i) {
        felem e = 1u << i;
        felem acc = e, pw = e;
        for (int j = 1; j < m; ++j) {
            pw = static_cast<felem>(poly_mulmod(pw, pw, modulus));
            acc ^= pw;
        }
        if (acc != 0 && acc != 1) throw std::logic_error("trace not in GF(2)");
        if (acc) F.trace_mask_ |= e;
    }
    return F;
}

felem FieldCtx::inv(felem x) const {
    if (x == 0) throw std::invalid_argument("inverse of zero");
    std::uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : order_ - l];
}

felem FieldCtx::pow(felem x, long long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (x == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = (static_cast<std::uint64_t>(log_[x]) * (e % order_)) % order_;
    return exp_[r];
}

felem FieldCtx::rel_trace(int k, felem x) const {
    if (k <= 0 || m_ % k != 0) throw std::invalid_argument("k must divide m");
    felem acc = x, y = x;
    for (int i = 1; i < m_ / k; ++i) {
        for (int s = 0; s < k; ++s) y = mul(y, y);
        acc ^= y;
    }
    return acc;
}

std::uint32_t FieldCtx::log(felem x) const {
    if (x == 0) throw std::invalid_argument("log of zero");
    return log_[x];
}

std::map<int, std::uint32_t> parse_field_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field config: " + path);
    std::map<int, std::uint32_t> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'm = modulus'");
        try {
            int m = std::stoi(trimmed.substr(0, eq));
            std::uint32_t mod = static_cast<std::uint32_t>(std::stoul(trimmed.substr(eq + 1), nullptr, 0));
            out[m] = mod;
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed entry");
        }
    }
    return out;
}

FieldCtx field_from_config(int m, const std::map<int, std::uint32_t>& overrides) {
    auto it = overrides.find(m);
    if (it != overrides.end()) return FieldCtx::make(m, it->second);
    return FieldCtx::make(m);
}

}  // namespace pcodes
