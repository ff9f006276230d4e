#pragma once

#include <string>
#include <vector>

#include "zerorect/bitset.hpp"
#include "zerorect/rat.hpp"

namespace zr {

// Ordered collection of subsets of [n]. Duplicates are allowed and order is
// significant: the counting arguments are over multisets of choices, and
// graph/matrix rows are indexed by position.
struct SetFamily {
    int n = 0;
    std::vector<BitSet> sets;

    SetFamily() = default;
    explicit SetFamily(int universe) : n(universe) {}

    int size() const { return int(sets.size()); }

    void add(const BitSet& s);
    void add_mask(uint64_t mask) { add(BitSet::from_mask(n, mask)); }

    SetFamily dedup() const;

    // All 2^k subsets of the given elements, in mask (= colex) order.
    static SetFamily power_set(int n, const std::vector<int>& elements);
    static SetFamily full_power_set(int n);
};

struct PairStats {
    PairCount count = 0;
    double density = 0.0;
};

// #{(a,b) in A x B : a and b disjoint} over ordered pairs, plus the density
// d(A,B) = count / (|A||B|).
PairStats disjoint_pairs(const SetFamily& A, const SetFamily& B);

// #{(a,b) : |a cap b| = lambda}. lambda = 0 agrees with disjoint_pairs.
PairCount lambda_pairs(const SetFamily& A, const SetFamily& B, int lambda);

// Bipartite graph with an edge exactly at each disjoint pair. Adjacency is
// stored in both directions so common-neighbourhood queries are word-parallel
// from either side.
struct DisjointnessGraph {
    SetFamily left, right;
    std::vector<BitSet> adj_left;  // indexed by left, bitset over right
    std::vector<BitSet> adj_right; // indexed by right, bitset over left
    PairCount edges = 0;

    int left_size() const { return left.size(); }
    int right_size() const { return right.size(); }
    double density() const {
        PairCount tot = PairCount(left.size()) * PairCount(right.size());
        return tot == 0 ? 0.0 : to_double(edges) / to_double(tot);
    }

    int degree_left(int i) const { return adj_left[i].count(); }
    int degree_right(int j) const { return adj_right[j].count(); }

    // Common neighbourhood in `right` of a set of left vertices.
    BitSet common_neighborhood_left(const std::vector<int>& leftIdx) const;
    BitSet common_neighborhood_right(const std::vector<int>& rightIdx) const;
};

DisjointnessGraph build_graph(const SetFamily& A, const SetFamily& B);

void require_same_universe(const SetFamily& A, const SetFamily& B);

} // namespace zr
