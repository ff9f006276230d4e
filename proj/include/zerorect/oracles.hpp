#pragma once

#include <optional>
#include <vector>

#include "zerorect/distribution.hpp"
#include "zerorect/family.hpp"
#include "zerorect/matrix.hpp"

namespace zr {

// Hard caps enforced before any enumeration begins. Oracles are exact or
// refuse; they never approximate.
struct OracleBudget {
    int max_rows = 12;        // cut-norm / discrepancy enumeration, per side
    int max_cols = 12;
    int max_bnb = 20;         // branch-and-bound constant-square search
    int max_exist = 24;       // constant-rectangle existence search
    int max_family = 22;      // biclique enumeration, per family
    long long max_cover_states = 4'000'000; // covering DP/direct state cap
    size_t budget_mb = 512;   // coarse memory cap (ZERORECT_BUDGET_MB)

    static OracleBudget from_env();
};

template <class T>
struct CutResult {
    T value;
    Selection sel;
};

// ||M||_C = max over nonempty rectangles A x B of |<M[AxB], J>|, with an
// optimal witness. The empty rectangle would contribute 0 and never wins.
template <class T>
CutResult<T> cut_norm_exact(const Matrix<T>& M, const OracleBudget& budget = {});

// disc(M) = ||M - p(M)J||_C, exact, with witness in the original index space.
template <class T>
CutResult<T> disc_exact(const Matrix<T>& M, const OracleBudget& budget = {});

template <class T>
struct ConstantSquare {
    int side = 0;
    Selection sel;
    T value{};
};

// Largest s x s submatrix whose entries all equal `value` (or any single
// value when unset). Branch and bound over row subsets; the returned
// selection is re-checked entry by entry.
template <class T>
ConstantSquare<T> max_constant_square(const Matrix<T>& M, const std::optional<T>& value,
                                      const OracleBudget& budget = {});

// Is there a constant rectangle with at least min_rows x min_cols entries?
template <class T>
std::optional<Selection> find_constant_rect(const Matrix<T>& M, const std::optional<T>& value,
                                            int min_rows, int min_cols,
                                            const OracleBudget& budget = {});

struct BicliqueResult {
    long long product = 0;
    std::vector<int> left;
    std::vector<int> right;
};

// Max |L|*|R| complete bipartite subgraph of the given adjacency (rows are
// left-indexed bitsets over the right side). Empty sides count as 0.
BicliqueResult max_edge_biclique(const std::vector<BitSet>& adj, int right_size,
                                 const OracleBudget& budget = {});

// Exact maximiser of |R||S| over cross-disjoint pairs R subseteq A,
// S subseteq B, certified by a pairwise disjointness recheck.
BicliqueResult max_cross_disjoint_biclique(const SetFamily& A, const SetFamily& B,
                                           const OracleBudget& budget = {});

// Largest all-zero rectangle of M by |rows|*|cols|.
template <class T>
BicliqueResult max_zero_rectangle(const Matrix<T>& M, const OracleBudget& budget = {});

enum class CoverMode { Auto, Direct, UnionDp };

// P[A_0 subseteq A_1 cup ... cup A_r] for independent draws from mu, as an
// exact rational. Direct enumeration of support^r tuples and a DP over
// distinct unions are both available and cross-checked in tests.
Rat covering_probability_exact(const Distribution& mu, int r, CoverMode mode = CoverMode::Auto,
                               const OracleBudget& budget = {});

} // namespace zr
