#include "zerorect/extract.hpp"

#include <algorithm>
#include <cmath>

#include "zerorect/parallel.hpp"
#include "zerorect/rng.hpp"

namespace zr {

namespace {

// k = floor(sqrt(n / log2(1/delta))), clamped into [1, n]. At delta = 1 the
// union of any k sets keeps all of B available, so the clamp k = n is safe.
int derive_k(int n, double delta) {
    if (n < 1) return 1;
    if (delta >= 1.0) return n;
    double lg = std::log2(1.0 / delta);
    int k = int(std::floor(std::sqrt(double(n) / lg)));
    return std::clamp(k, 1, n);
}

} // namespace

ExtractResult random_union_extract(const SetFamily& A, const SetFamily& B,
                                   const ExtractionParams& params) {
    require_same_universe(A, B);
    if (params.trials < 1) throw Error(Err::InvalidParams, "trials must be >= 1");
    auto G = build_graph(A, B);
    if (G.edges == 0) throw Error(Err::NoDisjointPairs, "zero disjointness density");
    double delta = G.density();
    int n = A.n;
    int k = params.k_override > 0 ? params.k_override : derive_k(n, delta);

    struct Best {
        long long product = -1;
        std::vector<int> r_idx, s_idx;
        bool fallback = false;
        std::vector<ExtractTrial> trace;
    };

    Best init;
    auto run_trial = [&](long long trial, Best& best) {
        Rng rng = Rng::stream(params.seed, uint64_t(trial));
        BitSet U(n);
        for (int i = 0; i < k; ++i) U |= A.sets[rng.below(uint64_t(A.size()))];
        std::vector<int> r_idx, s_idx;
        for (int i = 0; i < A.size(); ++i)
            if (A.sets[i].is_subset_of(U)) r_idx.push_back(i);
        for (int j = 0; j < B.size(); ++j)
            if (!B.sets[j].intersects(U)) s_idx.push_back(j);
        long long prod = (long long)r_idx.size() * (long long)s_idx.size();
        best.trace.push_back(
            {int(trial), k, U.count(), (long long)r_idx.size(), (long long)s_idx.size()});
        if (prod > best.product) {
            best.product = prod;
            best.r_idx = std::move(r_idx);
            best.s_idx = std::move(s_idx);
            best.fallback = false;
        }
    };
    Best best = parallel_reduce<Best>(params.trials, params.jobs, init, run_trial,
                                      [](Best x, Best y) {
                                          // merge trial logs; keep the larger product,
                                          // ties to the earlier chunk
                                          if (y.product > x.product) {
                                              for (auto& t : x.trace) y.trace.push_back(t);
                                              std::swap(x, y);
                                          } else {
                                              for (auto& t : y.trace) x.trace.push_back(t);
                                          }
                                          return x;
                                      });
    std::sort(best.trace.begin(), best.trace.end(),
              [](const ExtractTrial& a, const ExtractTrial& b) { return a.trial < b.trial; });

    // The proof's small-family fallback: a maximum-degree vertex with its
    // whole neighbourhood, from either side.
    {
        int bi = 0;
        for (int j = 1; j < B.size(); ++j)
            if (G.degree_right(j) > G.degree_right(bi)) bi = j;
        long long prod = G.degree_right(bi);
        if (prod > best.product) {
            best.product = prod;
            best.r_idx = G.adj_right[bi].elements();
            best.s_idx = {bi};
            best.fallback = true;
        }
        int ai = 0;
        for (int i = 1; i < A.size(); ++i)
            if (G.degree_left(i) > G.degree_left(ai)) ai = i;
        prod = G.degree_left(ai);
        if (prod > best.product) {
            best.product = prod;
            best.r_idx = {ai};
            best.s_idx = G.adj_left[ai].elements();
            best.fallback = true;
        }
    }

    ExtractResult out;
    out.k = k;
    out.delta_measured = delta;
    out.product = best.product;
    out.fallback_used = best.fallback;
    out.trace = std::move(best.trace);
    out.r_idx = best.r_idx;
    out.s_idx = best.s_idx;
    out.R = SetFamily(n);
    out.S = SetFamily(n);
    for (int i : best.r_idx) out.R.sets.push_back(A.sets[i]);
    for (int j : best.s_idx) out.S.sets.push_back(B.sets[j]);

    // hard guarantee: d(R,S) = 1, re-verified pair by pair
    for (const auto& r : out.R.sets)
        for (const auto& s : out.S.sets)
            if (r.intersects(s))
                throw Error(Err::VerificationFailed, "extracted pair is not disjoint");
    return out;
}

BadSetResult is_bad_set(const BitSet& U, const SetFamily& F, double threshold) {
    if (threshold < 0)
        throw Error(Err::InvalidProbability, "threshold must be nonnegative");
    BadSetResult out;
    for (const auto& s : F.sets)
        if (s.is_subset_of(U)) ++out.covered;
    out.bad = double(out.covered) < threshold * double(F.size());
    return out;
}

McEstimate covering_probability_mc(const Distribution& mu, int r, long long trials,
                                   uint64_t seed, int jobs) {
    if (trials < 1 || r < 1) throw Error(Err::InvalidParams, "need trials >= 1 and r >= 1");
    long long succ = parallel_reduce<long long>(
        trials, jobs, 0,
        [&](long long t, long long& acc) {
            Rng rng = Rng::stream(seed, uint64_t(t));
            BitSet u(mu.n);
            for (int i = 0; i < r; ++i) u |= mu.sample(rng);
            if (mu.sample(rng).is_subset_of(u)) ++acc;
        },
        [](long long a, long long b) { return a + b; });

    McEstimate out;
    out.successes = succ;
    out.trials = trials;
    double phat = double(succ) / double(trials);
    out.estimate = phat;
    const double z = 1.959963984540054; // 95%
    double nn = double(trials);
    double denom = 1.0 + z * z / nn;
    double center = (phat + z * z / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
    out.ci_low = succ == 0 ? 0.0 : std::max(0.0, center - half);
    out.ci_high = succ == trials ? 1.0 : std::min(1.0, center + half);
    return out;
}

CleanResult clean_min_degree(const DisjointnessGraph& G, double eps) {
    const int nx = G.left_size(), ny = G.right_size();
    if (eps <= 0) throw Error(Err::InvalidParams, "cleaning needs eps > 0");
    if (to_double(G.edges) < eps * double(nx) * double(ny) - 1e-12)
        throw Error(Err::DensityTooLow, "edge count below eps |X||Y|");

    const double tl = eps * ny / 4.0, tr = eps * nx / 4.0;
    std::vector<char> ax(nx, 1), ay(ny, 1);
    BitSet alive_y(ny);
    alive_y = alive_y.complement();
    BitSet alive_x(nx);
    alive_x = alive_x.complement();

    CleanResult out;
    while (true) {
        std::vector<int> dropx, dropy;
        for (int i = 0; i < nx; ++i)
            if (ax[i] && double((G.adj_left[i] & alive_y).count()) < tl) dropx.push_back(i);
        for (int j = 0; j < ny; ++j)
            if (ay[j] && double((G.adj_right[j] & alive_x).count()) < tr) dropy.push_back(j);
        if (dropx.empty() && dropy.empty()) break;
        for (int i : dropx) {
            ax[i] = 0;
            alive_x.reset(i);
        }
        for (int j : dropy) {
            ay[j] = 0;
            alive_y.reset(j);
        }
        ++out.passes;
    }
    for (int i = 0; i < nx; ++i)
        if (ax[i]) out.left.push_back(i);
    for (int j = 0; j < ny; ++j)
        if (ay[j]) out.right.push_back(j);

    // the lemma's three conclusions, checked on every run
    if (double(out.left.size()) * double(out.right.size()) <
        (eps / 2.0) * double(nx) * double(ny) - 1e-9)
        throw Error(Err::VerificationFailed, "cleaning lost too many vertices");
    for (int i : out.left)
        if (double((G.adj_left[i] & alive_y).count()) < tl)
            throw Error(Err::VerificationFailed, "left min-degree violated after cleaning");
    for (int j : out.right)
        if (double((G.adj_right[j] & alive_x).count()) < tr)
            throw Error(Err::VerificationFailed, "right min-degree violated after cleaning");
    return out;
}

TupleWitness grow_tuple(const DisjointnessGraph& G, Side side, double eps, double rho) {
    const int m = side == Side::Left ? G.left_size() : G.right_size();
    const int other = side == Side::Left ? G.right_size() : G.left_size();
    if (m == 0 || other == 0) throw Error(Err::EmptyFamily, "tuple growth on empty graph");
    const auto& fam = side == Side::Left ? G.left : G.right;
    const auto& adj = side == Side::Left ? G.adj_left : G.adj_right;
    const int n = fam.n;

    TupleWitness w;
    w.side = side;

    BitSet nb(other);
    nb = nb.complement();
    BitSet uni(n);
    std::vector<char> used(m, 0);

    double nb_thr = double(other);
    double rho_i = 1.0;
    while (true) {
        int i = int(w.picks.size()) + 1;
        nb_thr *= eps / 64.0;         // (eps/64)^i |other|
        rho_i *= rho;
        double un_thr = (0.5 - rho_i) * n;

        int best = -1;
        long long best_nb = -1;
        int best_un = -1;
        for (int v = 0; v < m; ++v) {
            if (used[v]) continue;
            long long nbc = (nb & adj[v]).count();
            int unc = (uni | fam.sets[v]).count();
            if (double(nbc) < nb_thr || double(unc) < un_thr) continue;
            if (nbc > best_nb || (nbc == best_nb && unc > best_un)) {
                best = v;
                best_nb = nbc;
                best_un = unc;
            }
        }
        if (best < 0 && i == 1) {
            // fall back to the max-degree vertex; the paper's setting makes
            // every 1-tuple qualify, arbitrary graphs may not
            for (int v = 0; v < m; ++v) {
                long long nbc = adj[v].count();
                int unc = fam.sets[v].count();
                if (nbc > best_nb || (nbc == best_nb && unc > best_un)) {
                    best = v;
                    best_nb = nbc;
                    best_un = unc;
                }
            }
            w.all_hold = double(best_nb) >= nb_thr && double(best_un) >= un_thr;
        }
        if (best < 0) break;
        used[best] = 1;
        w.picks.push_back(best);
        nb &= adj[best];
        uni |= fam.sets[best];
        w.nbhd_sizes.push_back((nb).count());
        w.union_sizes.push_back(uni.count());
        w.nbhd_thresholds.push_back(nb_thr);
        w.union_thresholds.push_back(un_thr);
        if (int(w.picks.size()) == m) break;
    }
    return w;
}

bool verify_tuple_witness(const DisjointnessGraph& G, const TupleWitness& w) {
    const auto& fam = w.side == Side::Left ? G.left : G.right;
    const auto& adj = w.side == Side::Left ? G.adj_left : G.adj_right;
    const int other = w.side == Side::Left ? G.right_size() : G.left_size();
    BitSet nb(other);
    nb = nb.complement();
    BitSet uni(fam.n);
    for (size_t i = 0; i < w.picks.size(); ++i) {
        nb &= adj[w.picks[i]];
        uni |= fam.sets[w.picks[i]];
        if (nb.count() != w.nbhd_sizes[i]) return false;
        if (uni.count() != w.union_sizes[i]) return false;
        if (double(nb.count()) < w.nbhd_thresholds[i]) return false;
        if (double(uni.count()) < w.union_thresholds[i]) return false;
    }
    return !w.picks.empty();
}

std::optional<DrcWitness> drc_witness_search(const SetFamily& A, const SetFamily& B,
                                             const DrcParams& params) {
    require_same_universe(A, B);
    if (params.theta <= 0 || params.theta >= 1)
        throw Error(Err::InvalidParams, "theta must lie in (0,1)");
    if (A.size() == 0 || B.size() == 0) throw Error(Err::EmptyFamily, "empty family");
    const int n = A.n;
    if (n < 1) throw Error(Err::InvalidParams, "universe must be nonempty");

    auto G = build_graph(A, B);

    const double theta = params.theta;
    const double c = params.paper_c ? 40.0 / std::log(2.0) : params.c_run;
    const double lg_n = std::log2(double(n));
    const int t = std::max(1, int(std::ceil(std::sqrt(lg_n / (theta * n)))));
    const int k = std::max(1, int(std::llround(std::log2(1.0 / theta) + c)));
    const double m_param = std::max(theta * n, std::sqrt(theta * n * lg_n));
    const double s = n - std::log2(double(A.size())) + 5 * m_param;
    const double friendly_thr = std::pow(2.0, s);
    const double wide_thr = n - s + 1;

    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        Rng rng = Rng::stream(params.seed, uint64_t(attempt));
        std::vector<int> cond(t);
        BitSet a0(A.size());
        a0 = a0.complement();
        for (int i = 0; i < t; ++i) {
            cond[i] = int(rng.below(uint64_t(B.size())));
            a0 &= G.adj_right[cond[i]];
        }
        auto pool = a0.elements();
        if (pool.empty()) continue;
        std::vector<int> tuple(k);
        BitSet nb(B.size());
        nb = nb.complement();
        BitSet uni(n);
        for (int i = 0; i < k; ++i) {
            tuple[i] = pool[rng.below(pool.size())];
            nb &= G.adj_left[tuple[i]];
            uni |= A.sets[tuple[i]];
        }
        long long nbc = nb.count();
        int unc = uni.count();
        if (double(nbc) >= friendly_thr && double(unc) >= wide_thr) {
            DrcWitness w;
            w.conditioning = cond;
            w.tuple = tuple;
            w.t = t;
            w.k = k;
            w.m_param = m_param;
            w.s_param = s;
            w.nbhd_size = nbc;
            w.union_size = unc;
            w.friendly_threshold = friendly_thr;
            w.wide_threshold = wide_thr;
            return w;
        }
    }
    return std::nullopt; // attempts exhausted; not a disproof
}

} // namespace zr
