#pragma once

#include <optional>
#include <vector>

#include "zerorect/distribution.hpp"
#include "zerorect/family.hpp"

namespace zr {

struct ExtractionParams {
    int trials = 64;
    uint64_t seed = 0;
    int k_override = 0; // 0: derive k from the measured density
    int jobs = 1;
};

struct ExtractTrial {
    int trial = 0;
    int k = 0;
    int union_size = 0;
    long long r_size = 0, s_size = 0;
};

struct ExtractResult {
    SetFamily R, S;
    std::vector<int> r_idx, s_idx; // indices into A resp. B
    long long product = 0;
    int k = 0;
    double delta_measured = 0;
    bool fallback_used = false; // single-vertex max-degree candidate won
    std::vector<ExtractTrial> trace;
};

// Random-union extraction: draw k sets from A, let U be their union, keep
// R = {a in A : a subseteq U} and S = {b in B : b cap U = 0}. Best trial by
// |R||S| wins; a max-degree single-vertex candidate is always in the running.
// Cross-disjointness of the output is re-verified, never assumed.
ExtractResult random_union_extract(const SetFamily& A, const SetFamily& B,
                                   const ExtractionParams& params);

struct BadSetResult {
    bool bad = false;
    long long covered = 0;
};

// U is bad for F at `threshold` if it covers fewer than threshold*|F| sets.
BadSetResult is_bad_set(const BitSet& U, const SetFamily& F, double threshold);

struct McEstimate {
    double estimate = 0;
    double ci_low = 0, ci_high = 0; // Wilson 95% interval
    long long successes = 0;
    long long trials = 0;
};

// Monte Carlo estimate of P[A_0 subseteq A_1 cup ... cup A_r]; trial i draws
// from the stream seed^i, so any parallel split reproduces the serial run.
McEstimate covering_probability_mc(const Distribution& mu, int r, long long trials,
                                   uint64_t seed, int jobs = 1);

struct CleanResult {
    std::vector<int> left, right;
    int passes = 0;
};

// Iteratively delete vertices of degree below eps|Y|/4 (left) or eps|X|/4
// (right); all currently deficient vertices go in one pass, which makes the
// output order-free. The surviving product is at least (eps/2)|X||Y|.
CleanResult clean_min_degree(const DisjointnessGraph& G, double eps);

enum class Side { Left, Right };

struct TupleWitness {
    Side side = Side::Left;
    std::vector<int> picks;
    std::vector<long long> nbhd_sizes;
    std::vector<int> union_sizes;
    std::vector<double> nbhd_thresholds;  // (eps/64)^i * |other side|
    std::vector<double> union_thresholds; // (1/2 - rho^i) * n
    bool all_hold = true;
};

// Greedy growth of a tuple whose prefixes keep a large common neighbourhood
// and a large union. Extensions are ranked lexicographically by
// (neighbourhood size, union size); growth stops when no extension meets
// both thresholds. t >= 1 always.
TupleWitness grow_tuple(const DisjointnessGraph& G, Side side, double eps, double rho = 0.9);

bool verify_tuple_witness(const DisjointnessGraph& G, const TupleWitness& w);

struct DrcParams {
    double theta = 0.1;
    uint64_t seed = 0;
    int attempts = 400;
    double c_run = 8;    // run constant; the proof's constant is log2(e^40)
    bool paper_c = false;
};

struct DrcWitness {
    std::vector<int> conditioning; // indices into B
    std::vector<int> tuple;        // indices into A (drawn from A_0)
    int t = 0, k = 0;
    double m_param = 0, s_param = 0;
    long long nbhd_size = 0;
    int union_size = 0;
    double friendly_threshold = 0; // 2^s
    double wide_threshold = 0;     // n - s + 1
};

// Randomized search for a friendly-and-wide k-tuple: common neighbourhood of
// size >= 2^s and union of size >= n-s+1. Exhausting the attempt budget is
// not a disproof.
std::optional<DrcWitness> drc_witness_search(const SetFamily& A, const SetFamily& B,
                                             const DrcParams& params);

} // namespace zr
