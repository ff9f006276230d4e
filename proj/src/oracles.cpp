#include "zerorect/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>

namespace zr {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* v = std::getenv("ZERORECT_BUDGET_MB")) {
        char* end = nullptr;
        long mb = std::strtol(v, &end, 10);
        if (end && *end == '\0' && mb > 0) b.budget_mb = size_t(mb);
    }
    return b;
}

template <class T>
CutResult<T> cut_norm_exact(const Matrix<T>& M, const OracleBudget& budget) {
    const int m = M.rows(), n = M.cols();
    if (m > budget.max_rows || n > budget.max_cols)
        throw Error(Err::BudgetExceeded, "cut-norm oracle capped at " +
                                             std::to_string(budget.max_rows) + "x" +
                                             std::to_string(budget.max_cols));

    std::vector<T> colsum(n, T(0));
    T best(-1);
    uint32_t best_mask = 0;
    bool best_positive = true;

    // Gray-code walk over nonempty row subsets; one row flips per step.
    uint32_t gray = 0;
    for (uint32_t it = 1; it < (uint32_t(1) << m); ++it) {
        uint32_t next = it ^ (it >> 1);
        uint32_t flipped = gray ^ next;
        int row = std::countr_zero(flipped);
        bool added = next & flipped;
        gray = next;
        for (int j = 0; j < n; ++j) {
            if (added)
                colsum[j] += M(row, j);
            else
                colsum[j] -= M(row, j);
        }
        T pos(0), neg(0);
        for (int j = 0; j < n; ++j) {
            if (colsum[j] > T(0)) pos += colsum[j];
            if (colsum[j] < T(0)) neg -= colsum[j];
        }
        T val = std::max(pos, neg);
        if (val > best) {
            best = val;
            best_mask = gray;
            best_positive = pos >= neg;
        }
    }

    // Rebuild the witness columns for the winning row set.
    std::fill(colsum.begin(), colsum.end(), T(0));
    std::vector<int> rows;
    for (int i = 0; i < m; ++i)
        if (best_mask >> i & 1) {
            rows.push_back(i);
            for (int j = 0; j < n; ++j) colsum[j] += M(i, j);
        }
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
        if (best_positive ? colsum[j] > T(0) : colsum[j] < T(0)) cols.push_back(j);
    }
    if (cols.empty()) cols.push_back(0); // all column sums vanish; value is 0

    return {best, Selection(std::move(rows), std::move(cols))};
}

template <class T>
CutResult<T> disc_exact(const Matrix<T>& M, const OracleBudget& budget) {
    return cut_norm_exact(M.shifted(p_of(M)), budget);
}

namespace {

// Collect the sorted distinct entries of M (candidate constants).
template <class T>
std::vector<T> distinct_values(const Matrix<T>& M) {
    std::vector<T> v(M.data());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Row masks of the positions equal to `value`.
template <class T>
std::vector<uint64_t> equality_masks(const Matrix<T>& M, const T& value) {
    std::vector<uint64_t> masks(M.rows(), 0);
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (M(i, j) == value) masks[i] |= uint64_t(1) << j;
    return masks;
}

struct SquareSearch {
    const std::vector<uint64_t>& mask;
    const std::vector<int>& order;
    int m;
    int best = 0;
    std::vector<int> best_rows;
    uint64_t best_cols = 0;
    std::vector<int> chosen;

    void dfs(int idx, uint64_t colmask) {
        int pc = std::popcount(colmask);
        int cur = std::min(int(chosen.size()), pc);
        if (cur > best) {
            best = cur;
            best_rows = chosen;
            best_cols = colmask;
        }
        if (idx == m) return;
        if (std::min(int(chosen.size()) + (m - idx), pc) <= best) return;
        // include order[idx]
        uint64_t nm = colmask & mask[order[idx]];
        if (std::popcount(nm) > best) {
            chosen.push_back(order[idx]);
            dfs(idx + 1, nm);
            chosen.pop_back();
        }
        // exclude
        dfs(idx + 1, colmask);
    }
};

} // namespace

template <class T>
ConstantSquare<T> max_constant_square(const Matrix<T>& M, const std::optional<T>& value,
                                      const OracleBudget& budget) {
    const int m = M.rows(), n = M.cols();
    if (m > budget.max_bnb || n > budget.max_bnb || n > 63)
        throw Error(Err::BudgetExceeded,
                    "constant-square oracle capped at " + std::to_string(budget.max_bnb));

    std::vector<T> candidates =
        value ? std::vector<T>{*value} : distinct_values(M);

    ConstantSquare<T> out;
    for (const T& v : candidates) {
        auto masks = equality_masks(M, v);
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(masks[a]) > std::popcount(masks[b]);
        });
        SquareSearch s{masks, order, m};
        s.best = out.side; // values later in the scan must strictly improve
        s.dfs(0, ~uint64_t(0) >> (64 - n));
        if (s.best > out.side) {
            out.side = s.best;
            out.value = v;
            std::vector<int> rows(s.best_rows.begin(), s.best_rows.begin() + s.best);
            std::vector<int> cols;
            for (int j = 0; j < n && int(cols.size()) < s.best; ++j)
                if (s.best_cols >> j & 1) cols.push_back(j);
            out.sel = Selection(std::move(rows), std::move(cols));
        }
    }

    // certify
    for (int i : out.sel.rows)
        for (int j : out.sel.cols)
            if (M(i, j) != out.value)
                throw Error(Err::VerificationFailed, "constant-square witness recheck failed");
    return out;
}

namespace {

struct RectSearch {
    const std::vector<uint64_t>& mask;
    int m, need_rows, need_cols;
    std::vector<int> chosen;
    std::optional<std::pair<std::vector<int>, uint64_t>> found;

    void dfs(int idx, uint64_t colmask) {
        if (found) return;
        int pc = std::popcount(colmask);
        if (pc < need_cols) return;
        if (int(chosen.size()) >= need_rows) {
            found = {chosen, colmask};
            return;
        }
        if (idx == m || int(chosen.size()) + (m - idx) < need_rows) return;
        uint64_t nm = colmask & mask[idx];
        if (std::popcount(nm) >= need_cols) {
            chosen.push_back(idx);
            dfs(idx + 1, nm);
            chosen.pop_back();
        }
        dfs(idx + 1, colmask);
    }
};

} // namespace

template <class T>
std::optional<Selection> find_constant_rect(const Matrix<T>& M, const std::optional<T>& value,
                                            int min_rows, int min_cols,
                                            const OracleBudget& budget) {
    int m = M.rows(), n = M.cols();
    if (std::max(m, n) > budget.max_exist || std::min(m, n) > 63)
        throw Error(Err::BudgetExceeded,
                    "constant-rectangle search capped at " + std::to_string(budget.max_exist));
    if (min_rows > m || min_cols > n) return std::nullopt;

    // search over the smaller side for tighter pruning
    bool transposed = m > n;
    Matrix<T> W = M;
    if (transposed) {
        Matrix<T> Tm(n, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) Tm(j, i) = M(i, j);
        W = Tm;
        std::swap(m, n);
        std::swap(min_rows, min_cols);
    }

    std::vector<T> candidates = value ? std::vector<T>{*value} : distinct_values(W);
    for (const T& v : candidates) {
        auto masks = equality_masks(W, v);
        RectSearch s{masks, m, min_rows, min_cols};
        s.dfs(0, ~uint64_t(0) >> (64 - n));
        if (s.found) {
            std::vector<int> rows = s.found->first;
            std::vector<int> cols;
            for (int j = 0; j < n; ++j)
                if (s.found->second >> j & 1) cols.push_back(j);
            if (transposed) std::swap(rows, cols);
            return Selection(std::move(rows), std::move(cols));
        }
    }
    return std::nullopt;
}

namespace {

struct BicliqueSearch {
    const std::vector<BitSet>& adj;
    int m;
    long long best = 0;
    std::vector<int> best_left;
    BitSet best_nb;
    std::vector<int> chosen;

    void dfs(int idx, const BitSet& nb) {
        int nbc = nb.count();
        if (!chosen.empty()) {
            long long v = (long long)chosen.size() * nbc;
            if (v > best && nbc > 0) {
                best = v;
                best_left = chosen;
                best_nb = nb;
            }
        }
        if (idx == m) return;
        if ((long long)(chosen.size() + size_t(m - idx)) * nbc <= best) return;
        BitSet nn = nb & adj[idx];
        if (!nn.none()) {
            chosen.push_back(idx);
            dfs(idx + 1, nn);
            chosen.pop_back();
        }
        dfs(idx + 1, nb);
    }
};

} // namespace

BicliqueResult max_edge_biclique(const std::vector<BitSet>& adj, int right_size,
                                 const OracleBudget& budget) {
    int m = int(adj.size());
    if (m > budget.max_family || right_size > budget.max_family)
        throw Error(Err::BudgetExceeded,
                    "biclique oracle capped at family size " + std::to_string(budget.max_family));
    BitSet all(right_size);
    all = all.complement();
    BicliqueSearch s{adj, m};
    s.dfs(0, all);
    BicliqueResult out;
    out.product = s.best;
    out.left = s.best_left;
    if (s.best > 0) out.right = s.best_nb.elements();
    return out;
}

BicliqueResult max_cross_disjoint_biclique(const SetFamily& A, const SetFamily& B,
                                           const OracleBudget& budget) {
    require_same_universe(A, B);
    if (A.size() > budget.max_family || B.size() > budget.max_family)
        throw Error(Err::BudgetExceeded,
                    "biclique oracle capped at family size " + std::to_string(budget.max_family));
    auto G = build_graph(A, B);
    // enumerate over the smaller side
    BicliqueResult r;
    if (A.size() <= B.size()) {
        r = max_edge_biclique(G.adj_left, B.size(), budget);
    } else {
        r = max_edge_biclique(G.adj_right, A.size(), budget);
        std::swap(r.left, r.right);
    }
    for (int i : r.left)
        for (int j : r.right)
            if (A.sets[i].intersects(B.sets[j]))
                throw Error(Err::VerificationFailed, "biclique witness not cross-disjoint");
    return r;
}

template <class T>
BicliqueResult max_zero_rectangle(const Matrix<T>& M, const OracleBudget& budget) {
    int m = M.rows(), n = M.cols();
    if (std::max(m, n) > budget.max_family)
        throw Error(Err::BudgetExceeded, "zero-rectangle oracle capped at " +
                                             std::to_string(budget.max_family));
    bool transposed = m > n;
    std::vector<BitSet> adj;
    int left = transposed ? n : m, right = transposed ? m : n;
    adj.assign(left, BitSet(right));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (M(i, j) == T(0)) {
                if (transposed)
                    adj[j].set(i);
                else
                    adj[i].set(j);
            }
    auto r = max_edge_biclique(adj, right, budget);
    if (transposed) std::swap(r.left, r.right);
    return r;
}

namespace {

struct BitSetHash {
    size_t operator()(const BitSet& b) const { return size_t(b.hash()); }
};

} // namespace

Rat covering_probability_exact(const Distribution& mu, int r, CoverMode mode,
                               const OracleBudget& budget) {
    if (r < 1) throw Error(Err::InvalidParams, "covering oracle needs r >= 1");
    const int s = mu.support_size();

    double direct_cost = 1;
    for (int i = 0; i < r; ++i) direct_cost *= s;
    if (mode == CoverMode::Auto) mode = direct_cost <= 200'000 ? CoverMode::Direct : CoverMode::UnionDp;

    if (mode == CoverMode::Direct) {
        if (direct_cost > double(budget.max_cover_states))
            throw Error(Err::BudgetExceeded, "covering oracle: support^r too large");
        Rat total(0);
        std::vector<int> idx(r, 0);
        while (true) {
            BitSet u(mu.n);
            Rat w(1);
            for (int i = 0; i < r; ++i) {
                u |= mu.atoms[idx[i]];
                w *= mu.weights[idx[i]];
            }
            total += w * mu.mass_below(u);
            int pos = r - 1;
            while (pos >= 0 && idx[pos] == s - 1) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
        return total;
    }

    // DP over the distribution of the running union.
    std::unordered_map<BitSet, Rat, BitSetHash> dist;
    for (int i = 0; i < s; ++i) dist[mu.atoms[i]] += mu.weights[i];
    for (int step = 1; step < r; ++step) {
        std::unordered_map<BitSet, Rat, BitSetHash> next;
        if ((long long)dist.size() * s > budget.max_cover_states)
            throw Error(Err::BudgetExceeded, "covering oracle: union DP too large");
        for (const auto& [u, w] : dist)
            for (int i = 0; i < s; ++i) next[u | mu.atoms[i]] += w * mu.weights[i];
        dist = std::move(next);
    }
    Rat total(0);
    for (const auto& [u, w] : dist) total += w * mu.mass_below(u);
    return total;
}

// explicit instantiations for the two entry modes
template CutResult<double> cut_norm_exact<double>(const MatrixD&, const OracleBudget&);
template CutResult<Rat> cut_norm_exact<Rat>(const MatrixQ&, const OracleBudget&);
template CutResult<double> disc_exact<double>(const MatrixD&, const OracleBudget&);
template CutResult<Rat> disc_exact<Rat>(const MatrixQ&, const OracleBudget&);
template ConstantSquare<double> max_constant_square<double>(const MatrixD&,
                                                            const std::optional<double>&,
                                                            const OracleBudget&);
template ConstantSquare<Rat> max_constant_square<Rat>(const MatrixQ&, const std::optional<Rat>&,
                                                      const OracleBudget&);
template std::optional<Selection> find_constant_rect<double>(const MatrixD&,
                                                             const std::optional<double>&, int,
                                                             int, const OracleBudget&);
template std::optional<Selection> find_constant_rect<Rat>(const MatrixQ&,
                                                          const std::optional<Rat>&, int, int,
                                                          const OracleBudget&);
template BicliqueResult max_zero_rectangle<double>(const MatrixD&, const OracleBudget&);
template BicliqueResult max_zero_rectangle<Rat>(const MatrixQ&, const OracleBudget&);

} // namespace zr
