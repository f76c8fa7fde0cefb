#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pcodes/codegen.hpp"

namespace pcodes {

enum class TheoremId {
    T33nu0, T33nu1,       // AB position set Tr(lambda f(x)) = nu
    C36nu0, C36nu1,       // AB monomial (permutation) branch
    T42c1, T42c2, T42c3,  // f = x^(2^k+1), trace-support positions
    T44,                  // f = x^t1 + x^t2
    T46,                  // f = Tr_k^m(x^(2^k+1))
    T52div3, T52ndiv3,    // f = x^((2^m-1)/3), cyclotomic positions
    T53,                  // d(2^k+1) = 2^(m/2)+1, cyclotomic positions
    R5RM,                 // t = 2^(m/2)+1 special case
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);
std::vector<TheoremId> all_theorems();

struct TheoremParams {
    int m = 0;
    int k = 0;                 // T4.2*, T4.6, T5.3
    std::uint32_t t = 0;       // T5.2*
    long long t1 = 0, t2 = 0;  // T4.4
    long long d = 0;           // C3.6 exponent
    felem lambda = 1;          // T3.3
    std::string function;      // T3.3 function text ("" = monomial(d=3))
};

// Thrown when a theorem's hypotheses fail; names the failed condition.
struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Fully evaluated closed-form prediction for one theorem at one
/// parameter point. Table formulas are evaluated with exact rationals
/// and asserted integral.
struct Prediction {
    TheoremId id{};
    TheoremParams params;
    int n = 0, k = 0, d = 0;
    std::map<int, mpz_class> table;  // includes the A_0 = 1 row
    int dual_n = 0, dual_k = 0, dual_d = 0;
    bool self_complementary = false;
    bool dual_sp_optimal_claim = false;
    bool griesmer_optimal_claim = false;
    bool low_confidence_table = false;  // T3.3: row mismatches annotate, not abort
    std::vector<std::string> notes;
};

// For T33nu0/T33nu1 the computed W_f(lambda, 0) selects n and must be given.
// enforce_hypotheses = false evaluates the closed forms without the side
// conditions (used by the verifier's override mode); evaluation may still
// throw when a formula stops making sense.
Prediction predict(TheoremId id, const TheoremParams& p,
                   std::optional<long long> walsh_lambda_0 = std::nullopt,
                   bool enforce_hypotheses = true);

// Deviation parameter of the relative-trace quadratic family: the code's
// outer weights sit at 2^(m-2) +- this value, branching on v2(m) - v2(k).
long long rtq_weight_deviation(int m, int k);

/// Residuals of the first `depth` Pless power moments (exact; zero means
/// satisfied). When the supplied low dual counts are all zero the sixth
/// moment is solved for A_5^perp.
struct PlessResult {
    std::vector<mpq_class> residuals;
    std::optional<mpq_class> solved_a5_dual;
};
PlessResult pless_check(int n, int k, const WeightDistribution& wd, int depth = 5,
                        const std::array<mpz_class, 4>& dual_low = {});

bool sphere_packing_ok(int n, int k, int d);
// No better minimum distance passes the bound; the step is d+2 when the
// dual is even-weight (primal self-complementary), else d+1.
bool sphere_packing_distance_optimal(int n, int k, int d, bool even_weight_dual);
bool griesmer_ok(int n, int k, int d);
bool griesmer_equality(int n, int k, int d);

struct EnumeratedFacts {
    int n = 0, k = 0, d = 0;
    WeightDistribution wd;
    int dual_d = 0;
    bool self_complementary = false;
    bool dual_sp_optimal_plain = false;
    bool dual_sp_optimal_even = false;
    bool griesmer_equality = false;
    std::vector<mpq_class> pless_residuals;
};

struct RowVerdict {
    int weight = 0;
    mpz_class predicted, actual;
    bool match = false;
};

struct VerificationReport {
    Prediction prediction;
    EnumeratedFacts enumerated;
    std::vector<RowVerdict> rows;
    bool pass = false;
    std::vector<std::string> notes;
    double runtime_ms = 0;
    // field realization, for replay
    int m = 0;
    std::uint32_t modulus = 0;
    felem gamma = 0;
    std::string function;
    std::string recipe;
};

struct VerifyOptions {
    EnumGuards guards;
    bool strict_hypotheses = true;  // false: report instead of refuse
};

VerificationReport verify(const FieldCtx& F, TheoremId id, const TheoremParams& p,
                          const VerifyOptions& opt = {});

// The (f, D-recipe) pair a theorem instance is built from. Certifies AB
// hypotheses where required unless certify = false.
struct TheoremSetup {
    FunctionSpec f;
    Recipe recipe;
};
TheoremSetup theorem_setup(const FieldCtx& F, TheoremId id, const TheoremParams& p,
                           bool certify = true);

// Smallest c (by encoding) with sign(W_{x^3+cx}(lambda, 0)) as requested;
// sign 0 returns plain x^3. The shift preserves the per-a Walsh multiset,
// hence AB-ness.
FunctionSpec find_ab_with_walsh_sign(const FieldCtx& F, felem lambda, int sign);

// Smallest d with d (2^k+1) = 2^(m/2)+1 mod 2^m-1 (T5.3), if solvable.
std::optional<long long> solve_t53_exponent(int m, int k);

}  // namespace pcodes
