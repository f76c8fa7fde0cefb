#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace pcodes {

// Element of GF(2^m), m <= 20, encoded in the polynomial basis of the field
// modulus: bit i is the coefficient of x^i.
using felem = std::uint32_t;

// v2(0) sentinel.
inline constexpr int kV2Infinity = std::numeric_limits<int>::max();

// 2-adic order: largest e with 2^e | n; v2(0) = kV2Infinity.
int v2(unsigned long long n);

// Polynomials over GF(2) encoded as integers (bit i = coeff of x^i).
int poly_degree(std::uint64_t p);
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
bool poly_irreducible(std::uint64_t p);

// Lexicographically smallest (by integer encoding) irreducible degree-m polynomial.
std::uint32_t smallest_irreducible(int m);

/// Concrete realization of GF(2^m): modulus, primitive element gamma,
/// eager log/exp tables. Immutable after construction, safe to share
/// across threads. All operations are pure functions of (ctx, inputs).
class FieldCtx {
public:
    // Default modulus: smallest irreducible of degree m. Gamma: smallest
    // encoding with multiplicative order 2^m - 1.
    static FieldCtx make(int m);
    static FieldCtx make(int m, std::uint32_t modulus);

    int m() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    felem gamma() const { return gamma_; }
    std::uint32_t size() const { return size_; }    // 2^m
    std::uint32_t order() const { return order_; }  // 2^m - 1

    bool is_valid(felem x) const { return x < size_; }

    felem add(felem x, felem y) const { return x ^ y; }
    felem mul(felem x, felem y) const {
        if (x == 0 || y == 0) return 0;
        std::uint32_t s = log_[x] + log_[y];
        if (s >= order_) s -= order_;
        return exp_[s];
    }
    felem inv(felem x) const;

    // x^e with 0^0 = 1, 0^e = 0 for e > 0; exponent reduced mod 2^m - 1
    // for nonzero x.
    felem pow(felem x, long long e) const;

    // Absolute trace GF(2^m) -> GF(2).
    int trace(felem x) const {
        return __builtin_parity(x & trace_mask_);
    }
    // Relative trace Tr_k^m, k | m; result lies in the subfield of size 2^k.
    felem rel_trace(int k, felem x) const;

    std::uint32_t log(felem x) const;       // discrete log base gamma, x != 0
    felem exp(std::uint32_t i) const { return exp_[i % order_]; }

private:
    FieldCtx() = default;
    int m_ = 0;
    std::uint32_t modulus_ = 0, size_ = 0, order_ = 0;
    felem gamma_ = 0;
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint32_t> log_, exp_;
};

// Field-config file: '#' comments, one "m = modulus" pair per line,
// modulus decimal or 0x-hex. Values are validated (degree, irreducibility)
// when a field is built from them.
std::map<int, std::uint32_t> parse_field_config(const std::string& path);

// Build GF(2^m) honoring a config override if present.
FieldCtx field_from_config(int m, const std::map<int, std::uint32_t>& overrides);

}  // namespace pcodes
