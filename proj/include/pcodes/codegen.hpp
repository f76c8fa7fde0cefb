#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pcodes/boolfunc.hpp"
#include "pcodes/gf2m.hpp"

namespace pcodes {

enum class RecipeKind { TraceOfF, TraceSupport, Cyclotomic };

struct Recipe {
    RecipeKind kind = RecipeKind::TraceSupport;
    felem lambda = 1;       // TraceOfF
    int nu = 0;             // TraceOfF
    std::uint32_t t = 1;    // Cyclotomic
    std::string to_string() const;
};

/// Ordered, duplicate-free set of nonzero field elements (ascending
/// encoding) together with its construction recipe.
struct PositionSet {
    std::vector<felem> elements;
    Recipe recipe;
    std::size_t size() const { return elements.size(); }
};

// TraceOfF requires f; lambda != 0. Cyclotomic requires t | 2^m - 1.
PositionSet build_position_set(const FieldCtx& F, const Recipe& r, const FunctionSpec* f = nullptr);

/// Packed GF(2) vector of fixed length n.
struct BitVec {
    int n = 0;
    std::vector<std::uint64_t> w;
    BitVec() = default;
    explicit BitVec(int len) : n(len), w((len + 63) / 64, 0) {}
    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void flip(int i) { w[i >> 6] ^= 1ull << (i & 63); }
    void xor_with(const BitVec& o) {
        for (std::size_t j = 0; j < w.size(); ++j) w[j] ^= o.w[j];
    }
    // acc ^= o, returning popcount of the result.
    int xor_popcount(const BitVec& o) {
        int s = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            w[j] ^= o.w[j];
            s += __builtin_popcountll(w[j]);
        }
        return s;
    }
    int popcount() const {
        int s = 0;
        for (auto x : w) s += __builtin_popcountll(x);
        return s;
    }
    bool is_zero() const {
        for (auto x : w) if (x) return false;
        return true;
    }
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

BitVec all_one_vec(int n);

/// Binary linear code held as a reduced-row-echelon generator matrix.
struct BinaryLinearCode {
    int n = 0;
    int k = 0;
    std::vector<BitVec> gen_rows;  // k rows, RREF, deterministic
    std::vector<int> pivots;       // pivot column of each row
    bool all_one_flag = false;
};

// RREF of arbitrary rows; zero rows dropped.
BinaryLinearCode code_from_rows(int n, std::vector<BitVec> rows);

// Reduce v against the RREF rows; true iff it lies in the row space.
bool in_row_space(const BinaryLinearCode& c, BitVec v);

// The punctured code C(f)^D-bar: spanned by (Tr(e_i f(d_j)))_j and
// (Tr(e_i d_j))_j over the polynomial basis {e_i}; k = rank.
BinaryLinearCode build_code(const FieldCtx& F, const FunctionSpec& f, const PositionSet& D);

// Direct codeword c(a,b) = (Tr(a f(d_j) + b d_j))_j, for cross-checks.
BitVec codeword(const FieldCtx& F, const FunctionSpec& f, const PositionSet& D, felem a, felem b);

// Cross-check oracle: build C(f) on all of GF(2^m)* (ascending encoding),
// delete coordinates outside `keep`, re-reduce.
BinaryLinearCode puncture_full_code(const FieldCtx& F, const FunctionSpec& f, const PositionSet& keep);

// Parity-check basis (n - k rows) derived from the RREF generator.
std::vector<BitVec> dual_basis(const BinaryLinearCode& c);

/// Exact weight distribution; counts are exact integers (the dual of a
/// large code can exceed any machine word).
struct WeightDistribution {
    std::map<int, mpz_class> counts;
    mpz_class total() const;
};

struct EnumGuards {
    int max_k = 26;
    int max_n = 4096;
};

// Exact A_w by a Gray-code walk over the 2^k messages.
WeightDistribution enumerate_weights(const BinaryLinearCode& c, const EnumGuards& g = {});

// Least w > 0 with A_w > 0; rejects the all-zero code.
int min_distance(const WeightDistribution& wd);

// Full dual distribution via the MacWilliams transform with Krawtchouk
// polynomials, exact integer arithmetic throughout. A non-integer or
// negative coefficient signals an upstream bug and throws.
WeightDistribution macwilliams_dual(const WeightDistribution& wd, int n, int k);

// A_j^perp for one j (exact).
mpz_class dual_weight_count(const WeightDistribution& wd, int n, int k, int j);

// Smallest j > 0 with A_j^perp > 0, computed incrementally.
int dual_min_distance(const WeightDistribution& wd, int n, int k);

bool is_self_complementary(const BinaryLinearCode& c);

std::string weights_to_csv(const WeightDistribution& wd);

}  // namespace pcodes
