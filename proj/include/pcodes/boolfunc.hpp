#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcodes/gf2m.hpp"

namespace pcodes {

enum class FuncFamily {
    Monomial,           // x^d, optionally + c*x
    Gold,               // x^(2^h+1)
    Kasami,             // x^(2^(2h)-2^h+1)
    Welch,              // x^(2^((m-1)/2)+3), m odd
    Niho1,              // m = 1 mod 4
    Niho2,              // m = 3 mod 4
    QuadraticPairSum,   // x^t1 + x^t2, 3|m, m >= 9
    RelTraceQuadratic,  // Tr_k^m(x^(2^k+1)), k|m, k not in {m, m/2}
    CyclotomicPower,    // x^d used over a cyclotomic position set
};

/// Declarative description of a function f on GF(2^m) with f(0) = 0.
struct FunctionSpec {
    FuncFamily family = FuncFamily::Monomial;
    int m = 0;
    long long d = 0;          // effective exponent for monomial-type families
    int h = 0;                // Gold/Kasami parameter
    int k = 0;                // RelTraceQuadratic
    long long t1 = 0, t2 = 0; // QuadraticPairSum
    felem linear_c = 0;       // optional + c*x term (monomial-type only)

    static FunctionSpec monomial(int m, long long d, felem c = 0);
    static FunctionSpec gold(int m, int h);
    static FunctionSpec kasami(int m, int h);
    static FunctionSpec welch(int m);
    static FunctionSpec niho1(int m);
    static FunctionSpec niho2(int m);
    static FunctionSpec quadratic_pair_sum(int m, long long t1, long long t2);
    static FunctionSpec rel_trace_quadratic(int m, int k);
    static FunctionSpec cyclotomic_power(int m, long long d);

    // Canonical textual form, e.g. "gold(h=2)", "monomial(d=3,c=0x05)".
    std::string to_string() const;
    // Accepts the canonical forms plus the shorthand "x^D".
    static FunctionSpec parse(const std::string& text, int m);
};

felem eval(const FieldCtx& F, const FunctionSpec& f, felem x);

// f(x) for every x, indexed by encoding.
std::vector<felem> eval_table(const FieldCtx& F, const FunctionSpec& f);

// W_f(a,b) = sum_x (-1)^{Tr(a f(x) + b x)}, computed definitionally.
long long walsh(const FieldCtx& F, const FunctionSpec& f, felem a, felem b);

// All W_f(a,b) for fixed a, indexed by b. Fast transform, cost ~ m 2^m.
std::vector<long long> walsh_row(const FieldCtx& F, const std::vector<felem>& ftab, felem a);

/// Value distribution of W_f(a,b) over all a != 0 and all b.
struct WalshSpectrum {
    std::map<long long, std::uint64_t> counts;
};
WalshSpectrum walsh_spectrum(const FieldCtx& F, const FunctionSpec& f);

// Exact exhaustive tests; they gate theorem applicability.
bool is_ab(const FieldCtx& F, const FunctionSpec& f);   // refuses even m, m must be <= 13
bool is_apn(const FieldCtx& F, const FunctionSpec& f);  // m <= 13

struct AbMonomial {
    long long d;
    std::string family;  // "gold(h)", "kasami(h)", "welch", "niho1", "niho2"
};

// The known almost bent monomial exponents on GF(2^m), m odd, with each
// family's side condition applied. Exponents reduced mod 2^m - 1.
std::vector<AbMonomial> ab_monomial_catalog(int m);
std::vector<long long> ab_monomial_exponents(int m);  // sorted, deduplicated

// T(a,b) = sum_{x in D} (-1)^{Tr(a x^d + b x)}, definitional loop.
long long t_sum(const FieldCtx& F, const std::vector<felem>& D, long long d, felem a, felem b);

}  // namespace pcodes
