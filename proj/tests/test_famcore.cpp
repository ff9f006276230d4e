#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zerorect/family.hpp"
#include "zerorect/io.hpp"
#include "zerorect/rng.hpp"

using namespace zr;

namespace {

SetFamily family_of_masks(int n, std::initializer_list<uint64_t> masks) {
    SetFamily F(n);
    for (uint64_t m : masks) F.add_mask(m);
    return F;
}

SetFamily random_family(int n, int size, Rng& rng) {
    SetFamily F(n);
    for (int i = 0; i < size; ++i) F.add_mask(rng.below(uint64_t(1) << n));
    return F;
}

PairCount pow_count(PairCount b, int e) {
    PairCount r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("disjoint pair counting") {
    auto A = family_of_masks(2, {0b01, 0b10});
    CHECK(disjoint_pairs(A, A).count == 2); // only the two cross pairs

    auto P2 = SetFamily::full_power_set(2);
    CHECK(disjoint_pairs(P2, P2).count == 9);
    CHECK(disjoint_pairs(P2, P2).density == doctest::Approx(9.0 / 16.0));

    auto one = family_of_masks(2, {0b11});
    auto two = family_of_masks(2, {0b01});
    CHECK(disjoint_pairs(one, two).count == 0);
}

TEST_CASE("universe mismatch rejected") {
    SetFamily A(2), B(3);
    A.add_mask(1);
    B.add_mask(1);
    CHECK_THROWS_AS(disjoint_pairs(A, B), Error);
    CHECK_THROWS_AS(lambda_pairs(A, B, 0), Error);
}

TEST_CASE("lambda pair counting") {
    auto P2 = SetFamily::full_power_set(2);
    CHECK(lambda_pairs(P2, P2, 1) == 6);
    CHECK(lambda_pairs(P2, P2, 0) == disjoint_pairs(P2, P2).count);

    SetFamily empty_only(0);
    empty_only.add(BitSet(0));
    CHECK(lambda_pairs(empty_only, empty_only, 0) == 1);

    CHECK_THROWS_AS(lambda_pairs(P2, P2, 3), Error);
    CHECK_THROWS_AS(lambda_pairs(P2, P2, -1), Error);
}

TEST_CASE("lambda pairs partition all pairs and match brute force") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + int(rng.below(6));
        auto A = random_family(n, 1 + int(rng.below(10)), rng);
        auto B = random_family(n, 1 + int(rng.below(10)), rng);
        PairCount total = 0;
        for (int lam = 0; lam <= n; ++lam) {
            PairCount got = lambda_pairs(A, B, lam);
            PairCount want = 0;
            for (const auto& a : A.sets)
                for (const auto& b : B.sets)
                    if ((a & b).count() == lam) ++want;
            CHECK(got == want);
            total += got;
        }
        CHECK(total == PairCount(A.size()) * PairCount(B.size()));
    }
}

TEST_CASE("full power set has 3^n disjoint pairs, n <= 12") {
    for (int n = 0; n <= 12; ++n) {
        auto P = SetFamily::full_power_set(n);
        CHECK(disjoint_pairs(P, P).count == pow_count(3, n));
    }
}

TEST_CASE("density invariant under relabeling the universe") {
    Rng rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 2 + int(rng.below(7));
        auto A = random_family(n, 8, rng);
        auto B = random_family(n, 8, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(uint64_t(i + 1))]);
        auto apply = [&](const SetFamily& F) {
            SetFamily out(n);
            for (const auto& s : F.sets) {
                BitSet t(n);
                s.for_each([&](int e) { t.set(perm[e]); });
                out.sets.push_back(t);
            }
            return out;
        };
        CHECK(disjoint_pairs(A, B).count == disjoint_pairs(apply(A), apply(B)).count);
    }
}

TEST_CASE("disjointness graph structure") {
    auto A = family_of_masks(2, {0b01});
    auto B = family_of_masks(2, {0b10});
    auto G = build_graph(A, B);
    CHECK(G.edges == 1);
    CHECK(G.degree_left(0) == 1);

    auto P2 = SetFamily::full_power_set(2);
    auto G2 = build_graph(P2, P2);
    CHECK(G2.edges == disjoint_pairs(P2, P2).count);

    // N({1},{2}) inside 2^[2] is exactly {emptyset}
    SetFamily left(2);
    left.add_mask(0b01);
    left.add_mask(0b10);
    auto G3 = build_graph(left, P2);
    auto nb = G3.common_neighborhood_left({0, 1});
    CHECK(nb.count() == 1);
    CHECK(nb.test(0)); // power set in mask order: index 0 is the empty set
}

TEST_CASE("duplicates are kept, dedup is explicit") {
    auto A = family_of_masks(3, {0b001, 0b001, 0b010});
    CHECK(A.size() == 3);
    CHECK(A.dedup().size() == 2);
}

TEST_CASE("family JSON round trip is byte stable") {
    Rng rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 1 + int(rng.below(10));
        auto F = random_family(n, int(rng.below(12)), rng);
        std::string j1 = family_to_json(F);
        auto G = family_from_json(j1);
        CHECK(G.n == F.n);
        CHECK(G.size() == F.size());
        for (int i = 0; i < F.size(); ++i) CHECK(G.sets[i] == F.sets[i]);
        CHECK(family_to_json(G) == j1);
    }
    CHECK_THROWS_AS(family_from_json("{\"n\":2,\"sets\":[[3]]}"), Error);
    CHECK_THROWS_AS(family_from_json("not json"), Error);
}
