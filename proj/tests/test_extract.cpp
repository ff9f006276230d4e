#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zerorect/extract.hpp"
#include "zerorect/oracles.hpp"
#include "zerorect/rng.hpp"

using namespace zr;

namespace {

// Construction-1 style pair on [n]: A has at most d elements in the first
// half, B at most d in the second half.
std::pair<SetFamily, SetFamily> c1_style(int n, int d) {
    SetFamily A(n), B(n);
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        int lo = __builtin_popcountll(mask & ((1ull << (n / 2)) - 1));
        int hi = __builtin_popcountll(mask >> (n / 2));
        if (lo <= d) A.add_mask(mask);
        if (hi <= d) B.add_mask(mask);
    }
    return {A, B};
}

} // namespace

TEST_CASE("random union extraction on a split universe keeps everything") {
    auto A = SetFamily::power_set(6, {0, 1, 2});
    auto B = SetFamily::power_set(6, {3, 4, 5});
    ExtractionParams prm;
    prm.trials = 64;
    prm.seed = 1;
    auto r = random_union_extract(A, B, prm);
    CHECK(r.delta_measured == 1.0);
    CHECK(r.k == 6);
    CHECK(r.product == 64);
    CHECK(r.R.size() == 8);
    CHECK(r.S.size() == 8);
}

TEST_CASE("zero density input is rejected") {
    SetFamily A(1), B(1);
    A.add_mask(1);
    B.add_mask(1);
    ExtractionParams prm;
    CHECK_THROWS_AS(random_union_extract(A, B, prm), Error);
}

TEST_CASE("extraction output is always cross-disjoint and deterministic in the seed") {
    Rng rng(5);
    for (int rep = 0; rep < 12; ++rep) {
        int n = 3 + int(rng.below(5));
        SetFamily A(n), B(n);
        for (int i = 0; i < 12; ++i) A.add_mask(rng.below(uint64_t(1) << n) & rng.below(uint64_t(1) << n));
        for (int i = 0; i < 12; ++i) B.add_mask(rng.below(uint64_t(1) << n) & rng.below(uint64_t(1) << n));
        if (disjoint_pairs(A, B).count == 0) continue;
        ExtractionParams prm;
        prm.trials = 16;
        prm.seed = rep;
        auto r1 = random_union_extract(A, B, prm); // verification is built in
        auto r2 = random_union_extract(A, B, prm);
        CHECK(r1.product == r2.product);
        CHECK(r1.r_idx == r2.r_idx);
        // parallel split changes nothing
        prm.jobs = 3;
        auto r3 = random_union_extract(A, B, prm);
        CHECK(r3.product == r1.product);
    }
}

TEST_CASE("extraction is competitive with the exact biclique oracle on C1-style input") {
    auto [A, B] = c1_style(4, 1); // 12 sets per side, within oracle budget
    auto opt = max_cross_disjoint_biclique(A, B);
    REQUIRE(opt.product > 0);
    double delta = disjoint_pairs(A, B).density;
    double slack = std::pow(2.0, -4.0 * std::sqrt(4.0 * std::log2(1.0 / delta)));
    int good = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        ExtractionParams prm;
        prm.trials = 32;
        prm.seed = seed;
        auto r = random_union_extract(A, B, prm);
        if (double(r.product) >= double(opt.product) * slack) ++good;
    }
    CHECK(good >= 50);
}

TEST_CASE("bad set predicate") {
    auto F = SetFamily::full_power_set(2);
    BitSet full(2);
    full.set(0);
    full.set(1);
    auto r = is_bad_set(full, F, 1.0);
    CHECK(r.covered == 4);
    CHECK(!r.bad);
    CHECK(is_bad_set(full, F, 1.0001).bad);

    CHECK(is_bad_set(BitSet(2), F, 0.5).covered == 1); // only the empty set

    auto F3 = SetFamily::full_power_set(3);
    BitSet u12(3);
    u12.set(0);
    u12.set(1);
    CHECK(is_bad_set(u12, F3, 0.0).covered == 4);
}

TEST_CASE("Monte Carlo covering estimate brackets the exact oracle") {
    // point mass at the empty set
    auto d0 = Distribution::point_mass(3, BitSet(3));
    auto e0 = covering_probability_mc(d0, 2, 2000, 9);
    CHECK(e0.estimate == 1.0);
    CHECK(e0.ci_high == 1.0);

    // uniform on {{1},{2}}, r = 1: exact 1/2
    SetFamily F(2);
    F.add_mask(0b01);
    F.add_mask(0b10);
    auto mu = Distribution::uniform_on(F);
    auto est = covering_probability_mc(mu, 1, 100000, 4);
    CHECK(est.ci_low <= 0.5);
    CHECK(est.ci_high >= 0.5);

    // p-biased n=6, p=1/3, r=2 against (23/27)^6
    int n = 6;
    Rat p(1, 3);
    std::vector<BitSet> atoms;
    std::vector<Rat> w;
    for (uint64_t mask = 0; mask < 64; ++mask) {
        BitSet s = BitSet::from_mask(n, mask);
        atoms.push_back(s);
        w.push_back(rat_pow(p, unsigned(s.count())) * rat_pow(1 - p, unsigned(n - s.count())));
    }
    Distribution pb(n, atoms, w);
    double exact = to_double(rat_pow(Rat(23, 27), 6));
    auto e2 = covering_probability_mc(pb, 2, 100000, 11);
    CHECK(e2.ci_low <= exact);
    CHECK(e2.ci_high >= exact);

    // deterministic given the seed, for any job split
    auto a = covering_probability_mc(mu, 2, 5000, 42, 1);
    auto b = covering_probability_mc(mu, 2, 5000, 42, 4);
    CHECK(a.successes == b.successes);
}

TEST_CASE("min-degree cleaning") {
    // complete bipartite graph survives fully at eps = 1
    auto A = SetFamily::power_set(4, {0, 1});
    auto B = SetFamily::power_set(4, {2, 3});
    auto G = build_graph(A, B);
    auto r = clean_min_degree(G, 1.0);
    CHECK(r.left.size() == 4);
    CHECK(r.right.size() == 4);

    // perfect matching on 4+4 at eps = 1/4: conclusions re-checked internally
    SetFamily X(8), Y(8);
    for (int i = 0; i < 4; ++i) {
        X.add_mask(1ull << i);
        Y.add_mask(0b1111 ^ (1ull << i)); // Y_i misses exactly X_i's element
    }
    // X_i is disjoint from Y_i only: a perfect matching
    auto GM = build_graph(X, Y);
    CHECK(GM.edges == 4);
    auto rm = clean_min_degree(GM, 0.25);
    CHECK(rm.left.size() * rm.right.size() >= 2);

    // empty graph
    SetFamily E(2);
    E.add_mask(0b11);
    auto GE = build_graph(E, E);
    CHECK_THROWS_AS(clean_min_degree(GE, 0.5), Error);
}

TEST_CASE("greedy tuple growth") {
    auto A = SetFamily::power_set(4, {0, 1});
    auto B = SetFamily::power_set(4, {2, 3});
    auto G = build_graph(A, B);
    auto w = grow_tuple(G, Side::Left, G.density());
    CHECK(w.picks.size() >= 1);
    CHECK(w.all_hold);
    CHECK(verify_tuple_witness(G, w));

    // single-edge graph: t = 1 with neighbourhood size 1
    SetFamily X(2), Y(2);
    X.add_mask(0b01);
    Y.add_mask(0b10);
    auto G1 = build_graph(X, Y);
    auto w1 = grow_tuple(G1, Side::Left, 1.0);
    CHECK(w1.picks.size() == 1);
    CHECK(w1.nbhd_sizes[0] == 1);
    CHECK(verify_tuple_witness(G1, w1));
}

TEST_CASE("tuple growth on a C1-style instance, prefixes re-verified") {
    auto [A, B] = c1_style(8, 1);
    auto G = build_graph(A, B);
    double eps = G.density();
    for (Side side : {Side::Left, Side::Right}) {
        auto w = grow_tuple(G, side, eps);
        CHECK(w.picks.size() >= 1);
        CHECK(verify_tuple_witness(G, w));
    }
}

TEST_CASE("drc witness search") {
    // single-set A against a fat multiset of empty sets: the found tuple is
    // that set repeated, certified friendly and wide
    SetFamily A(1), B(1);
    A.add_mask(1);
    for (int i = 0; i < 16; ++i) B.add_mask(0);
    DrcParams prm;
    prm.theta = 0.5;
    prm.seed = 3;
    auto w = drc_witness_search(A, B, prm);
    REQUIRE(w.has_value());
    for (int idx : w->tuple) CHECK(idx == 0);
    CHECK(double(w->nbhd_size) >= w->friendly_threshold);
    CHECK(double(w->union_size) >= w->wide_threshold);

    // zero-density input exhausts
    SetFamily C(2);
    C.add_mask(0b11);
    DrcParams prm2;
    prm2.theta = 0.5;
    prm2.attempts = 50;
    CHECK(!drc_witness_search(C, C, prm2).has_value());

    // cross power sets on [8]: friendliness demands 2^s > |B| here, so the
    // search exhausts; if it ever returned, the certificates must hold
    auto P = SetFamily::power_set(8, {0, 1, 2, 3});
    auto Q = SetFamily::power_set(8, {4, 5, 6, 7});
    DrcParams prm3;
    prm3.theta = 0.5;
    prm3.attempts = 60;
    auto w3 = drc_witness_search(P, Q, prm3);
    if (w3) {
        CHECK(double(w3->nbhd_size) >= w3->friendly_threshold);
        CHECK(double(w3->union_size) >= w3->wide_threshold);
    }
}
