#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zerorect/rng.hpp"
#include "zerorect/spectral.hpp"

using namespace zr;

namespace {

SetFamily random_family(int n, int size, Rng& rng) {
    SetFamily F(n);
    for (int i = 0; i < size; ++i) F.add_mask(rng.below(uint64_t(1) << n));
    return F;
}

} // namespace

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), Error);
    CHECK_THROWS_AS(binary_entropy(1.1), Error);
}

TEST_CASE("entropy gap closed forms") {
    long double C = entropy_inequality_constant();
    // p = 1/2, k = 1: 1/2 + C/2 - 1 > 0
    CHECK(entropy_gap(0.5L, 1, C) == doctest::Approx(double(0.5L + C / 2 - 1)).epsilon(1e-12));
    CHECK(entropy_gap(0.5L, 1, C) > 0);
    // p = 0: gap is C / 2^k
    for (int k : {1, 7, 40}) CHECK(entropy_gap(0.0L, k, C) == doctest::Approx(double(C / powl(2, k))));
}

TEST_CASE("entropy gap scan stays nonnegative on a coarse grid") {
    auto res = entropy_gap_scan(1e-2, 80, entropy_inequality_constant(), 1);
    CHECK(res.min_gap >= 0.0L);
    CHECK(res.evaluations == 101 * 80);
    // the scan result does not depend on the parallel split
    auto res2 = entropy_gap_scan(1e-2, 80, entropy_inequality_constant(), 3);
    CHECK(res2.min_gap == res.min_gap);
    CHECK(res2.arg_p == res.arg_p);
    CHECK(res2.arg_k == res.arg_k);
}

TEST_CASE("expected union from marginals") {
    auto P2 = SetFamily::full_power_set(2);
    CHECK(expected_union_exact_rat(P2, 1) == Rat(1));
    CHECK(expected_union_exact_rat(P2, 2) == Rat(3, 2));

    SetFamily full(5);
    full.add_mask(0b11111);
    for (int k : {1, 3, 9}) CHECK(expected_union_exact_rat(full, k) == Rat(5));

    CHECK_THROWS_AS(expected_union_exact(SetFamily(3), 1), Error);
}

TEST_CASE("subadditivity bound") {
    for (int n : {1, 2, 4}) {
        auto [hs, lg] = subadditivity_bound(SetFamily::full_power_set(n));
        CHECK(hs == doctest::Approx(double(n)));
        CHECK(lg == doctest::Approx(double(n)));
    }
    SetFamily F(3);
    F.add_mask(0);
    F.add_mask(1);
    auto [hs, lg] = subadditivity_bound(F);
    CHECK(hs == doctest::Approx(1.0));
    CHECK(lg == doctest::Approx(1.0));

    // random families: sum H(p_i) >= log2 |F| throughout
    Rng rng(71);
    for (int rep = 0; rep < 1000; ++rep) {
        auto R = random_family(10, 20, rng);
        auto [a, b] = subadditivity_bound(R);
        CHECK(a >= b - 1e-9);
    }
}

TEST_CASE("entropy chain: expected union vs subadditivity minus C n / 2^k") {
    Rng rng(73);
    long double C = entropy_inequality_constant();
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + int(rng.below(7));
        auto F = random_family(n, 1 + int(rng.below(30)), rng);
        auto marg = coordinate_marginals(F);
        long double hsum = 0;
        for (const auto& p : marg) hsum += binary_entropy_l(to_long_double(p));
        for (int k = 1; k <= 60; k += 7) {
            long double lhs = to_long_double(expected_union_exact_rat(F, k));
            CHECK(lhs >= double(hsum - C * n / powl(2, k)) - 1e-9);
        }
    }
}

TEST_CASE("intersection distribution") {
    SetFamily E(0);
    E.add(BitSet(0));
    auto d = intersection_distribution(E, E, 2);
    CHECK(d.f[0] == 1);
    CHECK(d.f[1] == 0);

    // derived from lambda-pair counts
    auto P1 = SetFamily::full_power_set(1);
    auto d1 = intersection_distribution(P1, P1, 2);
    CHECK(d1.f[0] == Rat(3, 4));
    CHECK(d1.f[1] == Rat(1, 4));

    auto P2 = SetFamily::full_power_set(2);
    auto d2 = intersection_distribution(P2, P2, 2);
    Rat even = Rat(BigInt(to_string(lambda_pairs(P2, P2, 0) + lambda_pairs(P2, P2, 2))),
                   BigInt(16));
    CHECK(d2.f[0] == even);

    Rng rng(79);
    for (int p : {2, 3, 5}) {
        auto A = random_family(5, 6, rng), B = random_family(5, 7, rng);
        auto dd = intersection_distribution(A, B, p);
        Rat sum(0);
        for (auto& v : dd.f) sum += v;
        CHECK(sum == 1);
    }
    CHECK_THROWS_AS(intersection_distribution(P2, P2, 4), Error);
}

TEST_CASE("bias") {
    SetFamily single(1);
    single.add_mask(1);
    CHECK(bias(single, single, 2, 1) == doctest::Approx(1.0));

    auto P1 = SetFamily::full_power_set(1);
    CHECK(bias(P1, P1, 2, 1) == doctest::Approx(0.5));
    CHECK(bias_exact_p2(P1, P1) == Rat(1, 2));

    CHECK_THROWS_AS(bias(P1, P1, 2, 0), Error);
    CHECK_THROWS_AS(bias(P1, P1, 2, 2), Error);
}

TEST_CASE("Parseval identity, exact in the cyclotomic ring") {
    Rng rng(83);
    for (int p : {2, 3, 5}) {
        for (int rep = 0; rep < 30; ++rep) {
            int n = 1 + int(rng.below(6));
            auto A = random_family(n, 1 + int(rng.below(8)), rng);
            auto B = random_family(n, 1 + int(rng.below(8)), rng);
            auto d = intersection_distribution(A, B, p);
            auto chk = parseval_exact(d);
            CHECK(chk.reduced_to_rational);
            CHECK(chk.holds);
            // numeric transform agrees with the exact sum
            long double num = 0;
            for (int j = 1; j < p; ++j) {
                double bj = bias(d, j);
                num += (long double)bj * bj;
            }
            num += 1.0L; // |f_hat(0)|^2 = 1
            CHECK(double(num) == doctest::Approx(to_double(chk.lhs)).epsilon(1e-10));
        }
    }
}

TEST_CASE("even/odd bound") {
    auto P1 = SetFamily::full_power_set(1);
    auto r = even_odd_check(P1, P1);
    CHECK(r.even_fraction == Rat(3, 4));
    CHECK(r.delta == Rat(1, 4));
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == Rat(8));
    CHECK(r.holds);

    SetFamily E(3);
    E.add(BitSet(3));
    auto re = even_odd_check(E, E);
    CHECK(re.delta == Rat(1, 2));
    CHECK(*re.bound == Rat(8));
    CHECK(re.holds);

    // exhaustive over nonempty subfamily pairs of 2^[2]
    auto P2 = SetFamily::full_power_set(2);
    for (int am = 1; am < 16; ++am)
        for (int bm = 1; bm < 16; ++bm) {
            SetFamily A(2), B(2);
            for (int i = 0; i < 4; ++i) {
                if (am >> i & 1) A.sets.push_back(P2.sets[i]);
                if (bm >> i & 1) B.sets.push_back(P2.sets[i]);
            }
            auto rr = even_odd_check(A, B);
            CHECK(rr.holds); // counterexample would falsify the theorem
        }
}

TEST_CASE("constant-residue biclique search") {
    auto A = SetFamily::power_set(2, {0});
    auto B = SetFamily::power_set(2, {1});
    auto r = constant_mod_biclique_search(A, B, 2);
    REQUIRE(r.has_value());
    CHECK(r->product == 4);
    CHECK(r->residue == 0);
    CHECK(r->sgall_ok);

    SetFamily single(1);
    single.add_mask(1);
    auto r1 = constant_mod_biclique_search(single, single, 2);
    REQUIRE(r1.has_value());
    CHECK(r1->product == 1);

    // Sgall predicate across random small instances
    Rng rng(89);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 2 + int(rng.below(3));
        auto X = random_family(n, 3 + int(rng.below(6)), rng);
        auto Y = random_family(n, 3 + int(rng.below(6)), rng);
        auto rr = constant_mod_biclique_search(X, Y, 2);
        if (rr) {
            CHECK(rr->sgall_ok);
            // verify constancy of the witness
            int want = -1;
            for (int i : rr->a_idx)
                for (int j : rr->b_idx) {
                    int got = X.sets[i].intersection_count(Y.sets[j]) % 2;
                    if (want < 0) want = got;
                    CHECK(got == want);
                }
        }
    }
}
