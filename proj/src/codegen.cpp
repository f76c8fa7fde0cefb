#include "pcodes/codegen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcodes {

std::string Recipe::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case RecipeKind::TraceOfF:
            os << "trace-of-f(lambda=0x" << std::hex << lambda << std::dec << ",nu=" << nu << ")";
            break;
        case RecipeKind::TraceSupport: os << "trace-support"; break;
        case RecipeKind::Cyclotomic: os << "cyclotomic(t=" << t << ")"; break;
    }
    return os.str();
}

PositionSet build_position_set(const FieldCtx& F, const Recipe& r, const FunctionSpec* f) {
    PositionSet D;
    D.recipe = r;
    switch (r.kind) {
        case RecipeKind::TraceOfF: {
            if (!f) throw std::invalid_argument("trace-of-f recipe needs a function");
            if (r.lambda == 0) throw std::invalid_argument("trace-of-f: lambda must be nonzero");
            if (r.nu != 0 && r.nu != 1) throw std::invalid_argument("trace-of-f: nu in {0,1}");
            for (std::uint32_t x = 1; x < F.size(); ++x)
                if (F.trace(F.mul(r.lambda, eval(F, *f, x))) == r.nu) D.elements.push_back(x);
            break;
        }
        case RecipeKind::TraceSupport:
            for (std::uint32_t x = 1; x < F.size(); ++x)
                if (F.trace(x) == 1) D.elements.push_back(x);
            break;
        case RecipeKind::Cyclotomic: {
            if (r.t == 0 || F.order() % r.t != 0)
                throw std::invalid_argument("cyclotomic: t must divide 2^m - 1");
            for (std::uint32_t i = 0; i < F.order() / r.t; ++i)
                D.elements.push_back(F.exp(i * r.t));
            std::sort(D.elements.begin(), D.elements.end());
            break;
        }
    }
    if (D.elements.empty()) throw std::invalid_argument("position set is empty");
    return D;
}

BitVec all_one_vec(int n) {
    BitVec v(n);
    for (int i = 0; i < n; ++i) v.set(i);
    return v;
}

BinaryLinearCode code_from_rows(int n, std::vector<BitVec> rows) {
    BinaryLinearCode c;
    c.n = n;
    std::vector<BitVec> ref;
    std::vector<int> pivots;
    for (int col = 0; col < n && !rows.empty(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(col)) { sel = i; break; }
        if (sel == rows.size()) continue;
        BitVec piv = rows[sel];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(sel));
        for (auto& r : rows)
            if (r.get(col)) r.xor_with(piv);
        for (std::size_t i = 0; i < ref.size(); ++i)
            if (ref[i].get(col)) ref[i].xor_with(piv);
        ref.push_back(piv);
        pivots.push_back(col);
    }
    c.gen_rows = std::move(ref);
    c.pivots = std::move(pivots);
    c.k = static_cast<int>(c.gen_rows.size());
    c.all_one_flag = in_row_space(c, all_one_vec(n));
    return c;
}

bool in_row_space(const BinaryLinearCode& c, BitVec v) {
    for (int i = 0; i < c.k; ++i)
        if (v.get(c.pivots[i])) v.xor_with(c.gen_rows[i]);
    return v.is_zero();
}

BinaryLinearCode build_code(const FieldCtx& F, const FunctionSpec& f, const PositionSet& D) {
    const int n = static_cast<int>(D.size());
    std::vector<felem> fd(D.size());
    for (std::size_t j = 0; j < D.size(); ++j) fd[j] = eval(F, f, D.elements[j]);
    std::vector<BitVec> rows;
    rows.reserve(2 * static_cast<std::size_t>(F.m()));
    for (int i = 0; i < F.m(); ++i) {
        BitVec r(n);
        felem e = 1u << i;
        for (int j = 0; j < n; ++j)
            if (F.trace(F.mul(e, fd[j]))) r.set(j);
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < F.m(); ++i) {
        BitVec r(n);
        felem e = 1u << i;
        for (int j = 0; j < n; ++j)
            if (F.trace(F.mul(e, D.elements[j]))) r.set(j);
        rows.push_back(std::move(r));
    }
    return code_from_rows(n, std::move(rows));
}

BitVec codeword(const FieldCtx& F, const FunctionSpec& f, const PositionSet& D, felem a, felem b) {
    BitVec v(static_cast<int>(D.size()));
    for (std::size_t j = 0; j < D.size(); ++j) {
        felem x = D.elements[j];
        if (F.trace(F.mul(a, eval(F, f, x))) ^ F.trace(F.mul(b, x))) v.set(static_cast<int>(j));
    }
    return v;
}

BinaryLinearCode puncture_full_code(const FieldCtx& F, const FunctionSpec& f, const PositionSet& keep) {
    // full code C(f): coordinates are all of GF(2^m)*, ascending encoding
    PositionSet full;
    full.recipe = {RecipeKind::Cyclotomic, 1, 0, 1};
    for (std::uint32_t x = 1; x < F.size(); ++x) full.elements.push_back(x);
    BinaryLinearCode whole = build_code(F, f, full);

    std::vector<int> cols;
    cols.reserve(keep.size());
    for (felem x : keep.elements) cols.push_back(static_cast<int>(x) - 1);
    std::vector<BitVec> rows;
    for (const auto& r : whole.gen_rows) {
        BitVec p(static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (r.get(cols[j])) p.set(static_cast<int>(j));
        rows.push_back(std::move(p));
    }
    return code_from_rows(static_cast<int>(cols.size()), std::move(rows));
}

std::vector<BitVec> dual_basis(const BinaryLinearCode& c) {
    std::vector<bool> is_pivot(c.n, false);
    for (int p : c.pivots) is_pivot[p] = true;
    std::vector<BitVec> dual;
    for (int q = 0; q < c.n; ++q) {
        if (is_pivot[q]) continue;
        BitVec v(c.n);
        v.set(q);
        for (int i = 0; i < c.k; ++i)
            if (c.gen_rows[i].get(q)) v.set(c.pivots[i]);
        dual.push_back(std::move(v));
    }
    return dual;
}

mpz_class WeightDistribution::total() const {
    mpz_class s = 0;
    for (const auto& [w, a] : counts) s += a;
    return s;
}

WeightDistribution enumerate_weights(const BinaryLinearCode& c, const EnumGuards& g) {
    if (c.k > g.max_k)
        throw std::invalid_argument("enumerate_weights: dimension exceeds guard k <= " + std::to_string(g.max_k));
    if (c.n > g.max_n)
        throw std::invalid_argument("enumerate_weights: length exceeds guard n <= " + std::to_string(g.max_n));
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(c.n) + 1, 0);
    BitVec acc(c.n);
    ++hist[0];
    const std::uint64_t total = 1ull << c.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int r = __builtin_ctzll(i);
        ++hist[static_cast<std::size_t>(acc.xor_popcount(c.gen_rows[r]))];
    }
    WeightDistribution wd;
    for (int w = 0; w <= c.n; ++w)
        if (hist[w]) wd.counts[w] = mpz_class(static_cast<unsigned long>(hist[w]));
    return wd;
}

int min_distance(const WeightDistribution& wd) {
    for (const auto& [w, a] : wd.counts)
        if (w > 0 && a > 0) return w;
    throw std::invalid_argument("min_distance: all-zero code");
}

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// K_j(i; n) = sum_s (-1)^s C(i,s) C(n-i, j-s)
mpz_class krawtchouk(int j, int i, int n) {
    mpz_class s = 0;
    for (int t = 0; t <= j; ++t) {
        mpz_class term = binom(static_cast<unsigned long>(i), static_cast<unsigned long>(t)) *
                         binom(static_cast<unsigned long>(n - i), static_cast<unsigned long>(j - t));
        if (t & 1) s -= term; else s += term;
    }
    return s;
}

}  // namespace

mpz_class dual_weight_count(const WeightDistribution& wd, int n, int k, int j) {
    mpz_class s = 0;
    for (const auto& [i, a] : wd.counts) s += a * krawtchouk(j, i, n);
    mpz_class q, r;
    mpz_class den = mpz_class(1) << k;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
    if (r != 0 || q < 0)
        throw std::logic_error("macwilliams: non-integer or negative dual count at j=" + std::to_string(j));
    return q;
}

WeightDistribution macwilliams_dual(const WeightDistribution& wd, int n, int k) {
    if (wd.total() != mpz_class(1) << k)
        throw std::invalid_argument("macwilliams: distribution total differs from 2^k");
    WeightDistribution dual;
    for (int j = 0; j <= n; ++j) {
        mpz_class a = dual_weight_count(wd, n, k, j);
        if (a != 0) dual.counts[j] = a;
    }
    return dual;
}

int dual_min_distance(const WeightDistribution& wd, int n, int k) {
    for (int j = 1; j <= n; ++j)
        if (dual_weight_count(wd, n, k, j) > 0) return j;
    throw std::invalid_argument("dual_min_distance: dual code is trivial");
}

bool is_self_complementary(const BinaryLinearCode& c) { return c.all_one_flag; }

std::string weights_to_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, a] : wd.counts) os << w << "," << a.get_str() << "\n";
    return os.str();
}

}  // namespace pcodes
