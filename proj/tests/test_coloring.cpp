#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "picod/coloring.hpp"
#include "picod/instance.hpp"

using namespace picod;

TEST_SUITE_BEGIN("coloring");

TEST_CASE("coloring validation") {
    CHECK_THROWS_AS(KFoldColoring(2, 1, {}), std::invalid_argument);            // k > L
    CHECK_THROWS_AS(KFoldColoring(2, 3, {{0, 0}}), std::invalid_argument);      // repeated color
    CHECK_THROWS_AS(KFoldColoring(1, 2, {{2}}), std::invalid_argument);         // outside palette
    CHECK_THROWS_AS(KFoldColoring(2, 4, {{0}}), std::invalid_argument);         // wrong set size
    const KFoldColoring c(2, 4, {{3, 1}});
    CHECK(c.colors_of(0) == std::vector<int>{1, 3});  // sorted on construction
}

TEST_CASE("edge conflict-freeness") {
    const auto c = testing::ex2_coloring();
    const std::vector<int> edge{0, 1, 3, 5};
    CHECK(is_cf_for_edge(c, edge));  // vertex 5 carries the unique color

    const KFoldColoring same(1, 2, {{0}, {0}});
    const std::vector<int> pair{0, 1};
    CHECK_FALSE(is_cf_for_edge(same, pair));

    const auto twofold = testing::pentagon_twofold();
    const std::vector<int> ac{0, 2};
    CHECK(is_cf_for_edge(twofold, ac));  // {0,1} and {2,3} are disjoint

    const std::vector<int> singleton{3};
    CHECK(is_cf_for_edge(c, singleton));
}

TEST_CASE("instance conflict-freeness") {
    CHECK(is_cf(testing::ex2_coloring(), named_instance("ex2")));
    CHECK(is_cf(testing::pentagon_twofold(), named_instance("pentagon")));

    // no 2-color fold-1 coloring works on the pentagon: try all 32
    const auto pentagon = named_instance("pentagon");
    for (int bits = 0; bits < 32; ++bits) {
        std::vector<std::vector<int>> assign(5);
        for (int v = 0; v < 5; ++v) assign[static_cast<size_t>(v)] = {(bits >> v) & 1};
        CHECK_FALSE(is_cf(KFoldColoring(1, 2, std::move(assign)), pentagon));
    }

    const PicodInstance no_edges(3, {});
    CHECK(is_cf(testing::distinct_coloring(3), no_edges));

    CHECK_THROWS_AS(is_cf(testing::distinct_coloring(3), pentagon), std::invalid_argument);
}

TEST_CASE("exact chromatic numbers of the demo instances") {
    const auto pentagon = named_instance("pentagon");
    auto r1 = exact_chi_cf(pentagon, 1, 5);
    REQUIRE(r1.has_value());
    CHECK(r1->colors == 3);
    CHECK(is_cf(r1->witness, pentagon));

    auto r2 = exact_chi_cf(pentagon, 2, 10);
    REQUIRE(r2.has_value());
    CHECK(r2->colors == 5);
    CHECK(is_cf(r2->witness, pentagon));
    CHECK(r2->colors < 2 * r1->colors);  // the fold-2 palette beats block expansion

    auto r3 = exact_chi_cf(complete_two_uniform(5), 1, 5);
    REQUIRE(r3.has_value());
    CHECK(r3->colors == 5);
}

TEST_CASE("canonical enumeration counts set partitions") {
    // fold-1 canonical colorings of an edgeless instance are exactly the set
    // partitions of the vertices: the counts must match the Bell numbers
    const std::vector<int> bell{1, 1, 2, 5, 15, 52};
    for (int m = 1; m <= 5; ++m) {
        int count = 0;
        for_each_coloring(PicodInstance(m, {}), 1, m, false, [&](const KFoldColoring&) {
            ++count;
            return true;
        });
        CHECK(count == bell[static_cast<size_t>(m)]);
    }
}

TEST_CASE("exact palette agrees with plain enumeration") {
    // independent oracle: try every assignment over a fixed palette, no
    // canonicalization, and take the smallest palette that admits a
    // conflict-free coloring
    auto brute_chi = [](const PicodInstance& inst, int limit) {
        const int m = inst.message_count();
        for (int L = 1; L <= limit; ++L) {
            long long total = 1;
            for (int v = 0; v < m; ++v) total *= L;
            for (long long code = 0; code < total; ++code) {
                long long rest = code;
                std::vector<std::vector<int>> assign(static_cast<size_t>(m));
                for (int v = 0; v < m; ++v) {
                    assign[static_cast<size_t>(v)] = {static_cast<int>(rest % L)};
                    rest /= L;
                }
                if (is_cf(KFoldColoring(1, L, std::move(assign)), inst)) return L;
            }
        }
        return -1;
    };
    for (std::uint64_t seed = 600; seed <= 615; ++seed) {
        const auto inst = testing::small_random_instance(seed, 4, 5);
        const auto fast = exact_chi_cf(inst, 1, inst.message_count());
        REQUIRE(fast.has_value());
        CHECK(fast->colors == brute_chi(inst, inst.message_count()));
    }
}

TEST_CASE("searches and encoders handle duplicate request-sets") {
    const PicodInstance twins(3, {{0, 1}, {0, 1}});
    const auto chi = exact_chi_cf(twins, 1, 3);
    REQUIRE(chi.has_value());
    CHECK(chi->colors == 2);
    CHECK(is_cf(chi->witness, twins));
    CHECK(greedy_cf_coloring(twins, 1).palette_size() <= 3);
}

TEST_CASE("exact search reports budget exhaustion distinctly") {
    CHECK_FALSE(exact_chi_cf(named_instance("pentagon"), 1, 2).has_value());
    CHECK_THROWS_AS(exact_chi_cf(named_instance("pentagon"), 0, 2), std::invalid_argument);
}

TEST_CASE("fold-1 search always succeeds within m colors") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto inst = testing::small_random_instance(seed, 6, 6);
        auto r = exact_chi_cf(inst, 1, inst.message_count());
        REQUIRE(r.has_value());
        CHECK(is_cf(r->witness, inst));
        // no coloring below the reported palette is conflict-free
        CHECK_FALSE(exact_chi_cf(inst, 1, r->colors - 1).has_value());
    }
}

TEST_CASE("fold-k palette is at most k times the fold-1 palette") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto inst = testing::small_random_instance(seed, 5, 4);
        const auto one = exact_chi_cf(inst, 1, inst.message_count());
        const auto two = exact_chi_cf(inst, 2, 2 * inst.message_count());
        REQUIRE(one.has_value());
        REQUIRE(two.has_value());
        CHECK(two->colors <= 2 * one->colors);
    }
}

TEST_CASE("conflict-freeness is monotone under edge removal") {
    for (std::uint64_t seed = 30; seed <= 40; ++seed) {
        const auto inst = testing::small_random_instance(seed, 6, 8);
        const auto c = greedy_cf_coloring(inst, seed);
        REQUIRE(is_cf(c, inst));
        auto edges = inst.request_sets();
        edges.resize(edges.size() / 2);
        CHECK(is_cf(c, PicodInstance(inst.message_count(), std::move(edges))));
    }
}

TEST_CASE("greedy coloring satisfies its contract") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto inst = testing::small_random_instance(seed);
        const auto c = greedy_cf_coloring(inst, seed);
        CHECK(is_cf(c, inst));
        CHECK(c.palette_size() <= inst.message_count());
        // deterministic given the seed
        CHECK(greedy_cf_coloring(inst, seed).assignment() == c.assignment());
    }

    CHECK(greedy_cf_coloring(complete_two_uniform(4), 3).palette_size() == 4);

    const PicodInstance disjoint(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto c = greedy_cf_coloring(disjoint, 9);
    CHECK(is_cf(c, disjoint));
    CHECK(c.palette_size() <= 2);
}

TEST_CASE("expansion to fold k preserves conflict-freeness") {
    const auto ex2 = named_instance("ex2");
    const auto expanded = expand_to_kfold(testing::ex2_coloring(), 2);
    CHECK(expanded.palette_size() == 4);
    CHECK(expanded.fold() == 2);
    CHECK(is_cf(expanded, ex2));
    CHECK(expanded.colors_of(5) == std::vector<int>{2, 3});

    const auto pentagon = named_instance("pentagon");
    const auto chi = exact_chi_cf(pentagon, 1, 5);
    const auto six = expand_to_kfold(chi->witness, 2);
    CHECK(six.palette_size() == 6);
    CHECK(is_cf(six, pentagon));

    for (std::uint64_t seed = 50; seed <= 60; ++seed) {
        const auto inst = testing::small_random_instance(seed, 6, 6);
        const auto base = greedy_cf_coloring(inst, seed);
        for (int k : {2, 3}) CHECK(is_cf(expand_to_kfold(base, k), inst));
    }

    CHECK_THROWS_AS(expand_to_kfold(testing::pentagon_twofold(), 2), std::invalid_argument);
}

TEST_SUITE_END();
