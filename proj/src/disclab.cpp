#include "zerorect/disclab.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "zerorect/rng.hpp"

namespace zr {

ConstantSet ConstantSet::practical() {
    ConstantSet c;
    c.name = "practical";
    return c;
}

ConstantSet ConstantSet::paper() {
    ConstantSet c;
    c.name = "paper";
    c.alpha_main = Rat(1, BigInt(1) << 100);
    c.alpha_variant = Rat(1, BigInt(1) << 200);
    // c = min(alpha c0 / 30, 1e-4) with alpha = 2^-100 lands around 1.8e-33:
    // the proof's derivation, taken literally.
    c.c_main = std::min(to_double(c.alpha_main) * c.c0 / 30.0, 1e-4);
    c.c_variant = to_double(c.alpha_variant) * c.c0;
    return c;
}

namespace {

std::vector<int> smallest_half(const std::vector<double>& key, int want) {
    std::vector<int> idx(key.size());
    for (size_t i = 0; i < key.size(); ++i) idx[i] = int(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

Gamma2Witness gamma2_witness(const MatrixD& M) {
    const int m = M.rows(), n = M.cols();
    auto dec = svd(M);
    if (dec.rank == 0) throw Error(Err::InvalidParams, "gamma2 witness of the zero matrix");
    const int r = dec.rank;
    const double sigma = dec.nuclear;

    double fro = std::sqrt(frobenius_sq(M));
    if (sigma > std::sqrt(double(r)) * fro * (1 + 1e-9))
        throw Error(Err::VerificationFailed, "nuclear norm exceeds sqrt(r)||M||_F");

    // u_i(k) = sqrt(sigma_k) U(i,k); sum_i ||u_i||^2 = sigma
    std::vector<double> unorm(m, 0), vnorm(n, 0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < r; ++k) unorm[i] += dec.sigma[k] * dec.U(i, k) * dec.U(i, k);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < r; ++k) vnorm[j] += dec.sigma[k] * dec.V(j, k) * dec.V(j, k);

    // Markov: at most m/2 rows have ||u_i||^2 >= 2 sigma / m, so the
    // ceil(m/2) smallest all sit below the threshold. Ties break by index.
    const int hm = (m + 1) / 2, hn = (n + 1) / 2;
    auto I = smallest_half(unorm, hm);
    auto J = smallest_half(vnorm, hn);

    Gamma2Witness w;
    w.sel = Selection(I, J);
    w.sigma = sigma;
    w.rank = r;

    const double xs = std::sqrt(double(m) / (2 * sigma)), ys = std::sqrt(double(n) / (2 * sigma));
    w.x.assign(m, std::vector<double>(r, 0.0));
    w.y.assign(n, std::vector<double>(r, 0.0));
    for (int i : I)
        for (int k = 0; k < r; ++k) w.x[i][k] = xs * std::sqrt(dec.sigma[k]) * dec.U(i, k);
    for (int j : J)
        for (int k = 0; k < r; ++k) w.y[j][k] = ys * std::sqrt(dec.sigma[k]) * dec.V(j, k);

    for (int i : I) w.max_xnorm_sq = std::max(w.max_xnorm_sq, unorm[i] * xs * xs);
    for (int j : J) w.max_ynorm_sq = std::max(w.max_ynorm_sq, vnorm[j] * ys * ys);
    if (w.max_xnorm_sq > 1 + 1e-9 || w.max_ynorm_sq > 1 + 1e-9)
        throw Error(Err::VerificationFailed, "witness vectors left the unit ball");

    double val = 0, fro_sub = 0;
    for (int i : I)
        for (int j : J) {
            double dot = 0;
            for (int k = 0; k < r; ++k) dot += w.x[i][k] * w.y[j][k];
            val += M(i, j) * dot;
            fro_sub += M(i, j) * M(i, j);
        }
    w.value = val;
    w.value_identity = std::sqrt(double(m) * n) / (2 * sigma) * fro_sub;
    double scale = std::max(1e-12, std::abs(w.value_identity));
    if (std::abs(w.value - w.value_identity) > 1e-6 * scale)
        throw Error(Err::VerificationFailed, "gamma2 witness identity drifted");
    return w;
}

RoundedRectangle round_witness_rectangle(const MatrixD& M, const Gamma2Witness& w, int samples,
                                         uint64_t seed) {
    const int m = M.rows(), n = M.cols(), r = w.rank;
    RoundedRectangle best;
    for (int s = 0; s < samples; ++s) {
        Rng rng = Rng::stream(seed, uint64_t(s));
        std::vector<double> g(r);
        for (int k = 0; k < r; ++k) {
            double u1 = (double(rng.next() >> 11) + 1.0) * 0x1.0p-53;
            double u2 = rng.uniform01();
            g[k] = std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
        }
        std::vector<int> rp, rn, cp, cn;
        for (int i = 0; i < m; ++i) {
            double d = 0;
            for (int k = 0; k < r; ++k) d += w.x[i][k] * g[k];
            if (d > 0)
                rp.push_back(i);
            else if (d < 0)
                rn.push_back(i);
        }
        for (int j = 0; j < n; ++j) {
            double d = 0;
            for (int k = 0; k < r; ++k) d += w.y[j][k] * g[k];
            if (d > 0)
                cp.push_back(j);
            else if (d < 0)
                cn.push_back(j);
        }
        for (const auto* rows : {&rp, &rn})
            for (const auto* cols : {&cp, &cn}) {
                if (rows->empty() || cols->empty()) continue;
                double sum = 0;
                for (int i : *rows)
                    for (int j : *cols) sum += M(i, j);
                if (std::abs(sum) > best.abs_sum) {
                    best.abs_sum = std::abs(sum);
                    best.sel = Selection(*rows, *cols);
                }
            }
    }
    return best;
}

DiscWitness disc_lower_witness(const MatrixD& M, const ConstantSet& consts) {
    const int m = M.rows(), n = M.cols();
    double q = q_of(M);
    if (q == 0) throw Error(Err::ZeroVariance, "constant matrix has no discrepancy witness");
    MatrixD centered = M.shifted(p_of(M));
    auto w = gamma2_witness(centered);

    DiscWitness out;
    out.sel = w.sel;
    out.gamma2_value = w.value;
    out.bound = w.value / consts.kg;
    out.q_sub = q_of(M.submatrix(w.sel));
    out.lemma_bound =
        consts.c0 * double(m) * n * out.q_sub / std::sqrt(double(w.rank) * q);
    return out;
}

namespace {

// Walk over k-combinations of {0..m-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int m) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < m - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <class T>
void check_half_budget(int m, int n, const OracleBudget& budget) {
    BigInt combs = binomial(unsigned(m), unsigned((m + 1) / 2));
    if (combs > 2'000'000 || n > 64)
        throw Error(Err::BudgetExceeded, "half-submatrix enumeration too large for " +
                                             std::to_string(m) + " rows");
    (void)budget;
}

} // namespace

template <class T>
HalfExtremes<T> half_average_extremes(const Matrix<T>& M, const OracleBudget& budget) {
    const int m = M.rows(), n = M.cols();
    check_half_budget<T>(m, n, budget);
    const int hm = (m + 1) / 2, hn = (n + 1) / 2;

    HalfExtremes<T> out{T(0), T(0), {}, {}};
    bool first = true;

    std::vector<int> comb(hm);
    for (int i = 0; i < hm; ++i) comb[i] = i;
    std::vector<T> colsum(n);
    std::vector<int> order(n);
    const T area = T(hm) * T(hn);
    do {
        std::fill(colsum.begin(), colsum.end(), T(0));
        for (int i : comb)
            for (int j = 0; j < n; ++j) colsum[j] += M(i, j);
        for (int j = 0; j < n; ++j) order[j] = j;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return colsum[a] < colsum[b]; });
        T lo(0), hi(0);
        for (int t = 0; t < hn; ++t) {
            lo += colsum[order[t]];
            hi += colsum[order[n - 1 - t]];
        }
        T lo_avg = lo / area, hi_avg = hi / area;
        if (first || lo_avg < out.min_avg) {
            out.min_avg = lo_avg;
            out.argmin = Selection(comb, std::vector<int>(order.begin(), order.begin() + hn));
        }
        if (first || hi_avg > out.max_avg) {
            out.max_avg = hi_avg;
            out.argmax = Selection(comb, std::vector<int>(order.end() - hn, order.end()));
        }
        first = false;
    } while (next_combination(comb, m));
    return out;
}

template <class T>
T half_average_deviation_check(const Matrix<T>& M, const OracleBudget& budget) {
    auto ex = half_average_extremes(M, budget);
    T p = p_of(M);
    T up = ex.max_avg - p, down = p - ex.min_avg;
    return std::max(up, down);
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> canonical_signatures(const MatrixD& M) {
    const int m = M.rows(), n = M.cols();
    auto mix = [](uint64_t h, uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ull;
        return h ^ (h >> 29);
    };
    auto bits = [](double d) {
        uint64_t u;
        std::memcpy(&u, &d, 8);
        return u;
    };
    auto hash_sorted = [&](std::vector<uint64_t>& v) {
        std::sort(v.begin(), v.end());
        uint64_t h = 0x2545f4914f6cdd1dull;
        for (uint64_t x : v) h = mix(h, x);
        return h;
    };

    std::vector<uint64_t> rs(m), cs(n);
    for (int i = 0; i < m; ++i) {
        std::vector<uint64_t> v(n);
        for (int j = 0; j < n; ++j) v[j] = bits(M(i, j));
        rs[i] = hash_sorted(v);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<uint64_t> v(m);
        for (int i = 0; i < m; ++i) v[i] = bits(M(i, j));
        cs[j] = hash_sorted(v);
    }
    for (int round = 0; round < 2; ++round) {
        std::vector<uint64_t> rs2(m), cs2(n);
        for (int i = 0; i < m; ++i) {
            std::vector<uint64_t> v(n);
            for (int j = 0; j < n; ++j) v[j] = mix(bits(M(i, j)), cs[j]);
            rs2[i] = hash_sorted(v);
        }
        for (int j = 0; j < n; ++j) {
            std::vector<uint64_t> v(m);
            for (int i = 0; i < m; ++i) v[i] = mix(bits(M(i, j)), rs[i]);
            cs2[j] = hash_sorted(v);
        }
        rs = std::move(rs2);
        cs = std::move(cs2);
    }
    return {rs, cs};
}

namespace {

// One alternating pass: rows by ascending key over the current columns, then
// columns by ascending key over the chosen rows.
struct AltMin {
    const MatrixD& M;
    const std::vector<uint64_t>& rsig;
    const std::vector<uint64_t>& csig;
    int hm, hn;

    std::vector<int> pick(const std::vector<double>& key, const std::vector<uint64_t>& sig,
                          int want) const {
        std::vector<int> idx(key.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (key[a] != key[b]) return key[a] < key[b];
            if (sig[a] != sig[b]) return sig[a] < sig[b];
            return a < b;
        });
        idx.resize(want);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

    // minimize the average
    Selection run_avg(std::vector<int> cols, int rounds) const {
        const int m = M.rows(), n = M.cols();
        std::vector<int> rows;
        for (int t = 0; t < rounds; ++t) {
            std::vector<double> rkey(m, 0);
            for (int i = 0; i < m; ++i)
                for (int j : cols) rkey[i] += M(i, j);
            rows = pick(rkey, rsig, hm);
            std::vector<double> ckey(n, 0);
            for (int j = 0; j < n; ++j)
                for (int i : rows) ckey[j] += M(i, j);
            cols = pick(ckey, csig, hn);
        }
        return Selection(rows, cols);
    }

    // minimize the variance about the running average
    Selection run_var(std::vector<int> cols, int rounds) const {
        const int m = M.rows(), n = M.cols();
        std::vector<int> rows;
        for (int t = 0; t < rounds; ++t) {
            double c = 0;
            long long cnt = 0;
            if (rows.empty()) {
                for (int i = 0; i < m; ++i)
                    for (int j : cols) c += M(i, j), ++cnt;
            } else {
                for (int i : rows)
                    for (int j : cols) c += M(i, j), ++cnt;
            }
            c /= double(cnt);
            std::vector<double> rkey(m, 0);
            for (int i = 0; i < m; ++i)
                for (int j : cols) rkey[i] += (M(i, j) - c) * (M(i, j) - c);
            rows = pick(rkey, rsig, hm);
            std::vector<double> ckey(n, 0);
            for (int j = 0; j < n; ++j)
                for (int i : rows) ckey[j] += (M(i, j) - c) * (M(i, j) - c);
            cols = pick(ckey, csig, hn);
        }
        return Selection(rows, cols);
    }
};

double avg_of(const MatrixD& M, const Selection& s) {
    double v = 0;
    for (int i : s.rows)
        for (int j : s.cols) v += M(i, j);
    return v / double(s.area());
}

double var_of(const MatrixD& M, const Selection& s) {
    double p = avg_of(M, s), v = 0;
    for (int i : s.rows)
        for (int j : s.cols) v += (M(i, j) - p) * (M(i, j) - p);
    return v / double(s.area());
}

std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<int> seeded_half(int n, int want, Rng& rng) {
    auto v = all_indices(n);
    for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng.below(uint64_t(i + 1))]);
    v.resize(want);
    std::sort(v.begin(), v.end());
    return v;
}

bool half_exhaustive_feasible(int m, int n, long long cap) {
    BigInt total = binomial(unsigned(m), unsigned((m + 1) / 2)) *
                   binomial(unsigned(n), unsigned((n + 1) / 2));
    return total <= cap;
}

} // namespace

HalveResult<double> halve_reduce_average(const MatrixD& M, const std::optional<Selection>& witness,
                                         uint64_t seed, long long exhaustive_cap) {
    const int m = M.rows(), n = M.cols();
    if (m < 2 && n < 2) {
        HalveResult<double> triv{Selection::full(m, n), p_of(M), true};
        return triv;
    }
    const int hm = (m + 1) / 2, hn = (n + 1) / 2;

    if (half_exhaustive_feasible(m, n, exhaustive_cap)) {
        auto ex = half_average_extremes(M);
        return {ex.argmin, ex.min_avg, true};
    }

    auto [rsig, csig] = canonical_signatures(M);
    AltMin alt{M, rsig, csig, hm, hn};

    std::vector<Selection> cands;
    cands.push_back(alt.run_avg(all_indices(n), 4));
    if (witness && !witness->cols.empty()) {
        std::vector<int> c = witness->cols;
        if (int(c.size()) > hn) c.resize(hn);
        auto s = alt.run_avg(c.empty() ? all_indices(n) : c, 4);
        cands.push_back(s);
    }
    for (int t = 0; t < 2; ++t) {
        Rng rng = Rng::stream(seed, 1000 + t);
        cands.push_back(alt.run_avg(seeded_half(n, hn, rng), 4));
    }

    HalveResult<double> best{cands[0], avg_of(M, cands[0]), false};
    for (size_t i = 1; i < cands.size(); ++i) {
        double a = avg_of(M, cands[i]);
        if (a < best.achieved_avg) best = {cands[i], a, false};
    }
    return best;
}

template <class T>
static bool integer_entries(const Matrix<T>& M) {
    if constexpr (std::is_same_v<T, double>) {
        for (double v : M.data())
            if (v != std::floor(v)) return false;
        return true;
    } else {
        for (const auto& v : M.data())
            if (denominator(v) != 1) return false;
        return true;
    }
}

template <class T>
VarianceFloorResult<T> variance_floor(const Matrix<T>& M, VarianceFloorMode mode, int rank_hint,
                                      const OracleBudget& budget) {
    VarianceFloorResult<T> out{q_of(M), T(0), false};
    T p = p_of(M);
    switch (mode) {
        case VarianceFloorMode::SeparatedSmallP: {
            if (!is_separated(M) || p < T(0) || p > T(9) / T(10))
                throw Error(Err::PreconditionFailed, "needs a separated matrix with p in [0,0.9]");
            out.floor = p / T(100);
            break;
        }
        case VarianceFloorMode::SeparatedGeneral: {
            if (!is_separated(M))
                throw Error(Err::PreconditionFailed, "needs a separated matrix");
            out.floor = p * (T(1) - p) / T(100);
            break;
        }
        case VarianceFloorMode::IntegerNoHalfConstant: {
            if (!integer_entries(M))
                throw Error(Err::PreconditionFailed, "needs integer entries");
            int hm = (M.rows() + 1) / 2, hn = (M.cols() + 1) / 2;
            if (find_constant_rect<T>(M, std::nullopt, hm, hn, budget))
                throw Error(Err::PreconditionFailed, "matrix has a half-sized constant submatrix");
            int r = rank_hint;
            if (r == 0) {
                if constexpr (std::is_same_v<T, double>)
                    r = exact_rank(to_rational(M));
                else
                    r = exact_rank(M);
            }
            out.floor = T(1) / (T(128) * T(r));
            break;
        }
    }
    out.holds = out.q >= out.floor;
    return out;
}

namespace {

Rat p_rat_of_sel(const MatrixD& M, const Selection& s) {
    Rat v(0);
    for (int i : s.rows)
        for (int j : s.cols) v += rat_from_double(M(i, j));
    return v / Rat(s.area());
}

Rat q_rat_of_sel(const MatrixD& M, const Selection& s) {
    Rat p = p_rat_of_sel(M, s);
    Rat v(0);
    for (int i : s.rows)
        for (int j : s.cols) {
            Rat d = rat_from_double(M(i, j)) - p;
            v += d * d;
        }
    return v / Rat(s.area());
}

struct StepContext {
    Rat p, q;          // of the full matrix, exact
    Rat step_sq;       // (c * rule)^2, exact; unused for the linear rule
    Rat step_lin;      // c/r for the linear rule
    bool linear_rule;
    Rat alpha;
};

// case 1: p' <= p - step  (and q' <= 4q, which always holds for halves)
bool certify_case1(const StepContext& cx, const Rat& p_sub, const Rat& q_sub) {
    if (p_sub > cx.p) return false;
    Rat d = cx.p - p_sub;
    bool step_ok = cx.linear_rule ? d >= cx.step_lin : d * d >= cx.step_sq;
    return step_ok && q_sub <= 4 * cx.q;
}

// case 2: p' <= p + 12 step and q' <= alpha q
bool certify_case2(const StepContext& cx, const Rat& p_sub, const Rat& q_sub) {
    if (q_sub > cx.alpha * cx.q) return false;
    if (p_sub <= cx.p) return true;
    Rat d = p_sub - cx.p;
    return cx.linear_rule ? d <= 12 * cx.step_lin : d * d <= 144 * cx.step_sq;
}

} // namespace

StepOutcome two_cases_step(const MatrixD& M, const StepConfig& cfg) {
    const int m = M.rows(), n = M.cols();
    if (m < 2 || n < 2)
        throw Error(Err::PreconditionFailed, "two-cases step needs m, n >= 2");
    const double p = p_of(M), q = q_of(M);

    if (!cfg.skip_precondition_checks) {
        switch (cfg.rule) {
            case StepRule::SqrtPOverR:
                if (!is_separated(M) || p <= 0 || p >= 0.9)
                    throw Error(Err::PreconditionFailed, "needs separated M with p in (0,0.9)");
                break;
            case StepRule::SqrtP1MinusPOverR:
                if (!is_separated(M) || p <= 0 || p >= 1)
                    throw Error(Err::PreconditionFailed, "needs separated M with p in (0,1)");
                break;
            case StepRule::OneOverR: {
                if (!integer_entries(M))
                    throw Error(Err::PreconditionFailed, "needs integer entries");
                int qm = (m + 3) / 4, qn = (n + 3) / 4;
                if (std::max(m, n) <= 16) {
                    if (find_constant_rect<double>(M, std::nullopt, qm, qn))
                        throw Error(Err::PreconditionFailed,
                                    "matrix has a quarter-sized constant submatrix");
                }
                break;
            }
        }
    }

    int r = cfg.rank > 0 ? cfg.rank : numerical_rank(M);
    if (r == 0) throw Error(Err::PreconditionFailed, "zero matrix");

    const bool linear = cfg.rule == StepRule::OneOverR;
    const double c = linear ? cfg.consts.c_variant : cfg.consts.c_main;
    double step;
    switch (cfg.rule) {
        case StepRule::SqrtPOverR: step = c * std::sqrt(p / r); break;
        case StepRule::SqrtP1MinusPOverR: step = c * std::sqrt(p * (1 - p) / r); break;
        default: step = c / r; break;
    }

    StepContext cx;
    cx.p = p_rat_of_sel(M, Selection::full(m, n));
    cx.q = q_rat_of_sel(M, Selection::full(m, n));
    cx.linear_rule = linear;
    cx.alpha = cfg.rule == StepRule::SqrtPOverR ? cfg.consts.alpha_main : cfg.consts.alpha_variant;
    Rat c_rat = rat_from_double(c);
    if (linear)
        cx.step_lin = c_rat / r;
    else {
        Rat p_part = cfg.rule == StepRule::SqrtPOverR ? cx.p : cx.p * (Rat(1) - cx.p);
        cx.step_sq = c_rat * c_rat * p_part / r;
    }

    auto outcome = [&](const Selection& sel, int tag, bool exhaustive) {
        StepOutcome o;
        o.sel = sel;
        o.case_tag = tag;
        o.p_before = p;
        o.q_before = q;
        auto S = M.submatrix(sel);
        o.p_after = p_of(S);
        o.q_after = q_of(S);
        o.step = step;
        o.exhaustive = exhaustive;
        return o;
    };

    const int hm = (m + 1) / 2, hn = (n + 1) / 2;
    if (half_exhaustive_feasible(m, n, cfg.exhaustive_cap)) {
        // full scan: track the minimum-average half and the smallest-variance
        // halves inside the case-2 average window
        Selection best1;
        double best1_avg = 0;
        bool have1 = false;
        std::vector<std::pair<double, Selection>> best2; // (q', sel), small heap
        const double window = p + 12 * step + 1e-12;

        std::vector<int> rcomb(hm);
        for (int i = 0; i < hm; ++i) rcomb[i] = i;
        std::vector<double> colsum(n), colsq(n);
        do {
            std::fill(colsum.begin(), colsum.end(), 0.0);
            std::fill(colsq.begin(), colsq.end(), 0.0);
            for (int i : rcomb)
                for (int j = 0; j < n; ++j) {
                    colsum[j] += M(i, j);
                    colsq[j] += M(i, j) * M(i, j);
                }
            std::vector<int> ccomb(hn);
            for (int j = 0; j < hn; ++j) ccomb[j] = j;
            do {
                double s = 0, s2 = 0;
                for (int j : ccomb) {
                    s += colsum[j];
                    s2 += colsq[j];
                }
                double area = double(hm) * hn;
                double pa = s / area, qa = s2 / area - pa * pa;
                if (!have1 || pa < best1_avg) {
                    best1_avg = pa;
                    best1 = Selection(rcomb, ccomb);
                    have1 = true;
                }
                if (pa <= window) {
                    best2.emplace_back(qa, Selection(rcomb, ccomb));
                    std::sort(best2.begin(), best2.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    if (best2.size() > 8) best2.resize(8);
                }
            } while (next_combination(ccomb, n));
        } while (next_combination(rcomb, m));

        if (have1 && certify_case1(cx, p_rat_of_sel(M, best1), q_rat_of_sel(M, best1)))
            return outcome(best1, 1, true);
        for (const auto& [qa, sel] : best2)
            if (certify_case2(cx, p_rat_of_sel(M, sel), q_rat_of_sel(M, sel)))
                return outcome(sel, 2, true);
        throw Error(Err::ConstantsFalsified,
                    "exhaustive search certified neither case at c=" + std::to_string(c) +
                        ", alpha=" + format_rat(cx.alpha) + " on a " + std::to_string(m) + "x" +
                        std::to_string(n) + " matrix with p=" + std::to_string(p) +
                        ", q=" + std::to_string(q));
    }

    // heuristic scale: candidate halves from average- and variance-directed
    // alternating minimization plus the rounded discrepancy witness
    auto [rsig, csig] = canonical_signatures(M);
    AltMin alt{M, rsig, csig, hm, hn};
    std::vector<Selection> avg_cands, var_cands;
    avg_cands.push_back(alt.run_avg(all_indices(n), 4));
    var_cands.push_back(alt.run_var(all_indices(n), 4));
    if (q > 0) {
        auto dw = disc_lower_witness(M, cfg.consts);
        auto g = gamma2_witness(M.shifted(p));
        auto rect = round_witness_rectangle(M.shifted(p), g, 64, cfg.seed);
        if (!rect.sel.cols.empty()) avg_cands.push_back(alt.run_avg(rect.sel.cols, 4));
        var_cands.push_back(alt.run_var(dw.sel.cols, 4));
    }
    for (int t = 0; t < 3; ++t) {
        Rng rng = Rng::stream(cfg.seed, 2000 + t);
        avg_cands.push_back(alt.run_avg(seeded_half(n, hn, rng), 4));
        var_cands.push_back(alt.run_var(seeded_half(n, hn, rng), 4));
    }

    std::sort(avg_cands.begin(), avg_cands.end(), [&](const Selection& a, const Selection& b) {
        return avg_of(M, a) < avg_of(M, b);
    });
    for (const auto& sel : avg_cands)
        if (certify_case1(cx, p_rat_of_sel(M, sel), q_rat_of_sel(M, sel)))
            return outcome(sel, 1, false);
    std::sort(var_cands.begin(), var_cands.end(), [&](const Selection& a, const Selection& b) {
        return var_of(M, a) < var_of(M, b);
    });
    for (const auto& sel : var_cands)
        if (certify_case2(cx, p_rat_of_sel(M, sel), q_rat_of_sel(M, sel)))
            return outcome(sel, 2, false);
    throw Error(Err::ConstantsFalsified,
                "heuristic search certified neither case (not a counterexample) on a " +
                    std::to_string(m) + "x" + std::to_string(n) + " matrix");
}

template HalfExtremes<double> half_average_extremes<double>(const MatrixD&, const OracleBudget&);
template HalfExtremes<Rat> half_average_extremes<Rat>(const MatrixQ&, const OracleBudget&);
template double half_average_deviation_check<double>(const MatrixD&, const OracleBudget&);
template Rat half_average_deviation_check<Rat>(const MatrixQ&, const OracleBudget&);
template VarianceFloorResult<double> variance_floor<double>(const MatrixD&, VarianceFloorMode, int,
                                                            const OracleBudget&);
template VarianceFloorResult<Rat> variance_floor<Rat>(const MatrixQ&, VarianceFloorMode, int,
                                                      const OracleBudget&);

} // namespace zr
