#include "zerorect/family.hpp"

#include "zerorect/error.hpp"

namespace zr {

void SetFamily::add(const BitSet& s) {
    if (s.universe() != n) throw Error(Err::UniverseMismatch, "set universe differs from family");
    sets.push_back(s);
}

SetFamily SetFamily::dedup() const {
    SetFamily out(n);
    for (const auto& s : sets) {
        bool seen = false;
        for (const auto& t : out.sets)
            if (s == t) {
                seen = true;
                break;
            }
        if (!seen) out.sets.push_back(s);
    }
    return out;
}

SetFamily SetFamily::power_set(int n, const std::vector<int>& elements) {
    if (elements.size() > 26)
        throw Error(Err::BudgetExceeded, "power set over more than 26 elements");
    SetFamily out(n);
    uint64_t k = elements.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        BitSet s(n);
        for (uint64_t b = 0; b < k; ++b)
            if (mask >> b & 1) s.set(elements[b]);
        out.sets.push_back(s);
    }
    return out;
}

SetFamily SetFamily::full_power_set(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return power_set(n, all);
}

void require_same_universe(const SetFamily& A, const SetFamily& B) {
    if (A.n != B.n)
        throw Error(Err::UniverseMismatch,
                    "families live on universes of size " + std::to_string(A.n) + " and " +
                        std::to_string(B.n));
}

PairStats disjoint_pairs(const SetFamily& A, const SetFamily& B) {
    require_same_universe(A, B);
    PairStats st;
    for (const auto& a : A.sets)
        for (const auto& b : B.sets)
            if (!a.intersects(b)) ++st.count;
    PairCount tot = PairCount(A.size()) * PairCount(B.size());
    st.density = tot == 0 ? 0.0 : to_double(st.count) / to_double(tot);
    return st;
}

PairCount lambda_pairs(const SetFamily& A, const SetFamily& B, int lambda) {
    require_same_universe(A, B);
    if (lambda < 0 || lambda > A.n)
        throw Error(Err::InvalidLambda, "lambda=" + std::to_string(lambda) + " outside [0,n]");
    PairCount c = 0;
    for (const auto& a : A.sets)
        for (const auto& b : B.sets)
            if (a.intersection_count(b) == lambda) ++c;
    return c;
}

DisjointnessGraph build_graph(const SetFamily& A, const SetFamily& B) {
    require_same_universe(A, B);
    DisjointnessGraph G;
    G.left = A;
    G.right = B;
    G.adj_left.assign(A.size(), BitSet(B.size()));
    G.adj_right.assign(B.size(), BitSet(A.size()));
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < B.size(); ++j)
            if (!A.sets[i].intersects(B.sets[j])) {
                G.adj_left[i].set(j);
                G.adj_right[j].set(i);
                ++G.edges;
            }
    return G;
}

BitSet DisjointnessGraph::common_neighborhood_left(const std::vector<int>& leftIdx) const {
    BitSet nb(right.size());
    nb = nb.complement();
    for (int i : leftIdx) nb &= adj_left[i];
    return nb;
}

BitSet DisjointnessGraph::common_neighborhood_right(const std::vector<int>& rightIdx) const {
    BitSet nb(left.size());
    nb = nb.complement();
    for (int j : rightIdx) nb &= adj_right[j];
    return nb;
}

} // namespace zr
