#pragma once

#include <optional>
#include <vector>

#include "zerorect/family.hpp"
#include "zerorect/oracles.hpp"

namespace zr {

// H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);
long double binary_entropy_l(long double p);

// (1 - (1-p)^k + C/2^k) - H(p); nonnegative for C = e^40 per the entropy
// inequality. Evaluated in 80-bit precision to stay honest near p -> 0.
long double entropy_gap(long double p, int k, long double C);

inline long double entropy_inequality_constant() { return expl(40.0L); }

struct EntropyScanResult {
    long double min_gap;
    double arg_p;
    int arg_k;
    long long evaluations;
};

// Minimum of entropy_gap over the grid p in {0, step, 2*step, ..., 1},
// k in {1, ..., k_max}.
EntropyScanResult entropy_gap_scan(double p_step, int k_max, long double C, int jobs = 1);

// Per-coordinate membership frequencies p_i of a family.
std::vector<Rat> coordinate_marginals(const SetFamily& F);

// E[|F_1 cup ... cup F_k|] = sum_i (1 - (1-p_i)^k), computed from the
// marginals; no sampling involved.
double expected_union_exact(const SetFamily& F, int k);
Rat expected_union_exact_rat(const SetFamily& F, int k);

// (sum_i H(p_i), log2 |F|); subadditivity of entropy makes first >= second.
std::pair<double, double> subadditivity_bound(const SetFamily& F);

bool is_prime(int p);

// f(x) = P[|a cap b| = x mod p] over uniform ordered pairs, exact.
struct IntersectionDistribution {
    int p = 0;
    std::vector<Rat> f;
};

IntersectionDistribution intersection_distribution(const SetFamily& A, const SetFamily& B,
                                                   int p);

// |f_hat(j)| for a nonzero residue j: the bias D_omega(A,B) at
// omega = exp(2 pi i j / p).
double bias(const SetFamily& A, const SetFamily& B, int p, int j);
double bias(const IntersectionDistribution& d, int j);

// p = 2 specialisation |f(0) - f(1)|, exact.
Rat bias_exact_p2(const SetFamily& A, const SetFamily& B);

// Exact Parseval check sum_j |f_hat(j)|^2 = p * sum_x f(x)^2, carried out in
// Q[x]/(x^p - 1) and reduced modulo the p-th cyclotomic polynomial, so both
// sides are exact rationals.
struct ParsevalCheck {
    Rat lhs; // sum of |f_hat(j)|^2 as an element of Q (after reduction)
    Rat rhs; // p * sum f(x)^2
    bool reduced_to_rational; // the cyclotomic reduction left a constant
    bool holds;
};

ParsevalCheck parseval_exact(const IntersectionDistribution& d);

// Even/odd intersection bound: with delta = |even fraction - 1/2|, any pair
// of families satisfies |A||B| <= 2^n / (4 delta^2) when delta > 0.
struct EvenOddResult {
    Rat even_fraction;
    bool odd_side;  // analysed under the odd-complement symmetry
    Rat delta;      // clamped at 0
    std::optional<Rat> bound; // 2^n / (4 delta^2), absent when delta == 0
    bool holds;     // |A||B| <= bound (true vacuously when delta == 0)
    PairCount even_pairs = 0;
    PairCount total_pairs = 0;
};

EvenOddResult even_odd_check(const SetFamily& A, const SetFamily& B);

// Brute-force largest |A'||B'| with <a,b> constant mod p, plus the Sgall
// bound |A'||B'| <= 2^n recorded as a checkable predicate.
struct ModBicliqueResult {
    std::vector<int> a_idx, b_idx;
    int residue = 0;
    long long product = 0;          // multiset product |A'||B'|
    long long distinct_product = 0; // over distinct sets, the Sgall quantity
    bool sgall_ok = true;           // distinct_product <= 2^n
};

std::optional<ModBicliqueResult> constant_mod_biclique_search(const SetFamily& A,
                                                              const SetFamily& B, int p,
                                                              const OracleBudget& budget = {});

} // namespace zr
