#include "zerorect/spectral.hpp"

#include <cmath>
#include <complex>

#include "zerorect/parallel.hpp"

namespace zr {

double binary_entropy(double p) { return double(binary_entropy_l((long double)p)); }

long double binary_entropy_l(long double p) {
    if (p < 0.0L || p > 1.0L)
        throw Error(Err::InvalidProbability, "entropy argument outside [0,1]");
    if (p == 0.0L || p == 1.0L) return 0.0L;
    return -p * log2l(p) - (1.0L - p) * log2l(1.0L - p);
}

long double entropy_gap(long double p, int k, long double C) {
    if (k < 1) throw Error(Err::InvalidParams, "entropy_gap needs k >= 1");
    long double lhs = 1.0L - powl(1.0L - p, k) + C / powl(2.0L, k);
    return lhs - binary_entropy_l(p);
}

EntropyScanResult entropy_gap_scan(double p_step, int k_max, long double C, int jobs) {
    if (p_step <= 0 || k_max < 1) throw Error(Err::InvalidParams, "bad entropy scan grid");
    long long steps = llround(1.0 / p_step);

    struct Acc {
        long double min_gap = 1e30L;
        double arg_p = 0;
        int arg_k = 1;
        long long evals = 0;
    };
    Acc init;
    auto res = parallel_reduce<Acc>(
        steps + 1, jobs, init,
        [&](long long i, Acc& a) {
            long double p = i >= steps ? 1.0L : (long double)i * p_step;
            for (int k = 1; k <= k_max; ++k) {
                long double g = entropy_gap(p, k, C);
                ++a.evals;
                if (g < a.min_gap) {
                    a.min_gap = g;
                    a.arg_p = double(p);
                    a.arg_k = k;
                }
            }
        },
        [](Acc x, Acc y) {
            if (y.min_gap < x.min_gap) {
                y.evals += x.evals;
                return y;
            }
            x.evals += y.evals;
            return x;
        });
    return {res.min_gap, res.arg_p, res.arg_k, res.evals};
}

std::vector<Rat> coordinate_marginals(const SetFamily& F) {
    if (F.size() == 0) throw Error(Err::EmptyFamily, "marginals of an empty family");
    std::vector<int> cnt(F.n, 0);
    for (const auto& s : F.sets) s.for_each([&](int e) { ++cnt[e]; });
    std::vector<Rat> p(F.n);
    for (int i = 0; i < F.n; ++i) p[i] = Rat(cnt[i], F.size());
    return p;
}

Rat expected_union_exact_rat(const SetFamily& F, int k) {
    if (k < 1) throw Error(Err::InvalidParams, "expected union needs k >= 1");
    auto marg = coordinate_marginals(F);
    Rat s(0);
    for (const Rat& p : marg) s += Rat(1) - rat_pow(Rat(1) - p, unsigned(k));
    return s;
}

double expected_union_exact(const SetFamily& F, int k) {
    return to_double(expected_union_exact_rat(F, k));
}

std::pair<double, double> subadditivity_bound(const SetFamily& F) {
    auto marg = coordinate_marginals(F);
    long double hs = 0;
    for (const Rat& p : marg) hs += binary_entropy_l(to_long_double(p));
    return {double(hs), std::log2(double(F.size()))};
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

IntersectionDistribution intersection_distribution(const SetFamily& A, const SetFamily& B,
                                                   int p) {
    require_same_universe(A, B);
    if (!is_prime(p)) throw Error(Err::InvalidPrime, std::to_string(p) + " is not prime");
    if (A.size() == 0 || B.size() == 0) throw Error(Err::EmptyFamily, "empty family");
    std::vector<PairCount> counts(p, 0);
    for (const auto& a : A.sets)
        for (const auto& b : B.sets) ++counts[a.intersection_count(b) % p];
    IntersectionDistribution d;
    d.p = p;
    d.f.resize(p);
    BigInt tot = BigInt(A.size()) * B.size();
    for (int x = 0; x < p; ++x) d.f[x] = Rat(BigInt(to_string(counts[x])), tot);
    return d;
}

double bias(const IntersectionDistribution& d, int j) {
    if (j < 1 || j >= d.p)
        throw Error(Err::InvalidFrequency, "bias frequency must be a nonzero residue");
    std::complex<long double> acc(0, 0);
    for (int x = 0; x < d.p; ++x) {
        long double ang = 2.0L * M_PIl * (long double)((long long)j * x % d.p) / d.p;
        acc += to_long_double(d.f[x]) * std::complex<long double>(cosl(ang), sinl(ang));
    }
    return double(std::abs(acc));
}

double bias(const SetFamily& A, const SetFamily& B, int p, int j) {
    return bias(intersection_distribution(A, B, p), j);
}

Rat bias_exact_p2(const SetFamily& A, const SetFamily& B) {
    auto d = intersection_distribution(A, B, 2);
    Rat v = d.f[0] - d.f[1];
    return v < 0 ? -v : v;
}

ParsevalCheck parseval_exact(const IntersectionDistribution& d) {
    const int p = d.p;
    // sum_j f_hat(j) conj(f_hat(j)) as a polynomial in Q[x]/(x^p - 1),
    // where x stands for the root of unity.
    std::vector<Rat> poly(p, Rat(0));
    for (int j = 0; j < p; ++j)
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                int e = int((((long long)j * (x - y)) % p + p) % p);
                poly[e] += d.f[x] * d.f[y];
            }
    // reduce modulo the cyclotomic polynomial 1 + x + ... + x^{p-1}
    for (int i = 0; i + 1 < p; ++i) poly[i] -= poly[p - 1];
    ParsevalCheck out;
    out.reduced_to_rational = true;
    for (int i = 1; i + 1 < p; ++i)
        if (poly[i] != 0) out.reduced_to_rational = false;
    out.lhs = poly[0];
    Rat rhs(0);
    for (const Rat& v : d.f) rhs += v * v;
    out.rhs = rhs * p;
    out.holds = out.reduced_to_rational && out.lhs == out.rhs;
    return out;
}

EvenOddResult even_odd_check(const SetFamily& A, const SetFamily& B) {
    require_same_universe(A, B);
    EvenOddResult out;
    if (A.size() == 0 || B.size() == 0) throw Error(Err::EmptyFamily, "empty family");
    for (const auto& a : A.sets)
        for (const auto& b : B.sets) {
            ++out.total_pairs;
            if (a.intersection_count(b) % 2 == 0) ++out.even_pairs;
        }
    BigInt tot(to_string(out.total_pairs)), ev(to_string(out.even_pairs));
    out.even_fraction = Rat(ev, tot);
    out.odd_side = out.even_fraction < Rat(1, 2);
    Rat frac = out.odd_side ? Rat(1) - out.even_fraction : out.even_fraction;
    out.delta = frac - Rat(1, 2);
    if (out.delta > 0) {
        Rat two_n = rat_pow(Rat(2), unsigned(A.n));
        out.bound = two_n / (4 * out.delta * out.delta);
        out.holds = Rat(BigInt(A.size()) * BigInt(B.size())) <= *out.bound;
    } else {
        out.holds = true; // no bias measured; the theorem is vacuous
    }
    return out;
}

std::optional<ModBicliqueResult> constant_mod_biclique_search(const SetFamily& A,
                                                              const SetFamily& B, int p,
                                                              const OracleBudget& budget) {
    require_same_universe(A, B);
    if (!is_prime(p)) throw Error(Err::InvalidPrime, std::to_string(p) + " is not prime");
    if (A.size() > budget.max_family || B.size() > budget.max_family)
        throw Error(Err::BudgetExceeded, "mod-biclique search capped at family size " +
                                             std::to_string(budget.max_family));
    if (A.size() == 0 || B.size() == 0) return std::nullopt;

    ModBicliqueResult best;
    for (int rho = 0; rho < p; ++rho) {
        std::vector<BitSet> adj(A.size(), BitSet(B.size()));
        for (int i = 0; i < A.size(); ++i)
            for (int j = 0; j < B.size(); ++j)
                if (A.sets[i].intersection_count(B.sets[j]) % p == rho) adj[i].set(j);
        auto r = max_edge_biclique(adj, B.size(), budget);
        if (r.product > best.product) {
            best.product = r.product;
            best.a_idx = r.left;
            best.b_idx = r.right;
            best.residue = rho;
        }
    }
    if (best.product == 0) return std::nullopt;
    // Sgall's bound speaks about families of distinct sets; duplicated
    // members inflate the multiset product without adding new sets.
    auto distinct_count = [](const SetFamily& F, const std::vector<int>& idx) {
        SetFamily sub(F.n);
        for (int i : idx) sub.sets.push_back(F.sets[i]);
        return (long long)sub.dedup().size();
    };
    best.distinct_product = distinct_count(A, best.a_idx) * distinct_count(B, best.b_idx);
    best.sgall_ok = Rat(best.distinct_product) <= rat_pow(Rat(2), unsigned(A.n));
    return best;
}

} // namespace zr
