#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerorect/matrix.hpp"
#include "zerorect/oracles.hpp"

namespace zr {

// One record holding every tunable constant of the discrepancy stack. The
// paper-faithful set keeps the lemmas' alpha = 2^-100 / 2^-200 and derives
// the step constant c from them, which makes the steps astronomically small;
// the practical set (c = 0.1, alpha = 1/2) is what the pipelines run with.
struct ConstantSet {
    std::string name;
    double kg = 1.8;             // Grothendieck constant bound used for rounding
    double c0 = 1.0 / (8 * 1.8); // disc lower-bound constant of the SVD witness chain
    double c_main = 0.1;         // step constant, sqrt(p/r)-type rules
    double c_variant = 0.1;      // step constant, c/r rule
    Rat alpha_main = Rat(1, 2);
    Rat alpha_variant = Rat(1, 2);
    double half_div = 3.0;       // the 3 in disc/(3mn)

    static ConstantSet practical();
    static ConstantSet paper();
};

// gamma2* lower-bound witness built from the SVD: vectors u_i, v_j with
// <u_i, v_j> = M(i,j), row/column halves I, J keeping the short vectors, and
// value = sum_{IxJ} M(i,j) <x_i, y_j> = (sqrt(mn)/2 sigma) ||M[IxJ]||_F^2.
struct Gamma2Witness {
    Selection sel;                       // I x J, |I| = ceil(m/2), |J| = ceil(n/2)
    std::vector<std::vector<double>> x;  // m vectors of dim r, zero outside I
    std::vector<std::vector<double>> y;  // n vectors of dim r, zero outside J
    double value = 0;                    // bilinear form at (x, y)
    double value_identity = 0;           // closed form, equal within 1e-6 rel.
    double sigma = 0;                    // nuclear norm
    int rank = 0;
    double max_xnorm_sq = 0, max_ynorm_sq = 0;
};

Gamma2Witness gamma2_witness(const MatrixD& M);

// Sign-rounding of the witness vectors to a concrete rectangle; the
// constructive stand-in for Grothendieck's inequality.
struct RoundedRectangle {
    Selection sel;
    double abs_sum = 0; // |sum of M over the rectangle|
};
RoundedRectangle round_witness_rectangle(const MatrixD& M, const Gamma2Witness& w, int samples,
                                         uint64_t seed);

// Discrepancy lower bound from the gamma2 witness of the centered matrix.
struct DiscWitness {
    Selection sel;           // the half-sized submatrix M'
    double gamma2_value = 0; // gamma2 value of M - p(M)J
    double bound = 0;        // gamma2_value / kg <= disc(M)
    double lemma_bound = 0;  // c0 * mn * q(M') / sqrt(r q(M))
    double q_sub = 0;        // q(M')
};

DiscWitness disc_lower_witness(const MatrixD& M, const ConstantSet& consts = ConstantSet::practical());

// Exact extremes of p(M') over all ceil(m/2) x ceil(n/2) submatrices. For a
// fixed row set the optimal columns are the smallest/largest column sums, so
// only row subsets are enumerated.
template <class T>
struct HalfExtremes {
    T min_avg, max_avg;
    Selection argmin, argmax;
};

template <class T>
HalfExtremes<T> half_average_extremes(const Matrix<T>& M, const OracleBudget& budget = {});

// max |p(M') - p(M)| over all half-sized M'; Claim "half" bounds it by
// 4 disc(M)/mn.
template <class T>
T half_average_deviation_check(const Matrix<T>& M, const OracleBudget& budget = {});

template <class T>
struct HalveResult {
    Selection sel;
    T achieved_avg;
    bool exhaustive = false;
};

// Half-sized selection with small average: exhaustive argmin within budget,
// otherwise alternating row/column trimming seeded from the witness.
HalveResult<double> halve_reduce_average(const MatrixD& M,
                                         const std::optional<Selection>& witness = std::nullopt,
                                         uint64_t seed = 0,
                                         long long exhaustive_cap = 2'000'000);

enum class VarianceFloorMode {
    SeparatedSmallP,       // separated, p <= 0.9:        q >= p/100
    SeparatedGeneral,      // separated:                  q >= p(1-p)/100
    IntegerNoHalfConstant, // integer, no half constant:  q >= 1/(128 r)
};

template <class T>
struct VarianceFloorResult {
    T q, floor;
    bool holds = false;
};

template <class T>
VarianceFloorResult<T> variance_floor(const Matrix<T>& M, VarianceFloorMode mode,
                                      int rank_hint = 0, const OracleBudget& budget = {});

enum class StepRule { SqrtPOverR, SqrtP1MinusPOverR, OneOverR };

struct StepConfig {
    ConstantSet consts = ConstantSet::practical();
    StepRule rule = StepRule::SqrtPOverR;
    int rank = 0;                         // 0: compute from the matrix
    long long exhaustive_cap = 2'000'000; // row x column subset pairs
    uint64_t seed = 0;
    bool skip_precondition_checks = false; // caller already validated
};

// Half-sized step of the two-outcome dichotomy. Case 1: the average drops by
// the step; case 2: the variance drops by the factor alpha while the average
// rises at most 12 steps. Certificates are evaluated in exact rational
// arithmetic. At exhaustive scale a failure of both cases is a counterexample
// to the configured constants and raises ConstantsFalsified.
struct StepOutcome {
    Selection sel;
    int case_tag = 0; // 1 or 2
    double p_before = 0, q_before = 0;
    double p_after = 0, q_after = 0;
    double step = 0;
    bool exhaustive = false;
};

StepOutcome two_cases_step(const MatrixD& M, const StepConfig& cfg);

// Permutation-stable row/column signatures via two rounds of multiset
// refinement; heuristics sort with these as tie-breaks so that relabeled
// inputs make the same choices.
std::pair<std::vector<uint64_t>, std::vector<uint64_t>> canonical_signatures(const MatrixD& M);

} // namespace zr
