#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "picod/collection.hpp"
#include "picod/instance.hpp"
#include "picod/rng.hpp"

using namespace picod;

TEST_SUITE_BEGIN("collection");

TEST_CASE("collection basics and cover test") {
    const auto ex2 = named_instance("ex2");
    const ColoringCollection single({testing::ex2_coloring()});
    CHECK(single.total_colors() == 2);
    CHECK(is_cf_collection(single, ex2));

    const ColoringCollection empty(1);
    CHECK(empty.total_colors() == 0);
    CHECK_FALSE(is_cf_collection(empty, ex2));
    CHECK(is_cf_collection(empty, PicodInstance(3, {})));

    CHECK_THROWS_AS(is_cf_collection(ColoringCollection({testing::distinct_coloring(3)}), ex2),
                    std::invalid_argument);
    CHECK_THROWS_AS(ColoringCollection({testing::ex2_coloring(), testing::pentagon_twofold()}),
                    std::invalid_argument);
}

TEST_CASE("binary collection separates all pairs") {
    const auto two = binary_collection(4);
    CHECK(two.member_count() == 2);
    CHECK(two.total_colors() == 4);
    CHECK(is_cf_collection(two, complete_two_uniform(4)));

    const auto one = binary_collection(2);
    CHECK(one.member_count() == 1);
    CHECK(one.total_colors() == 2);
    CHECK(is_cf_collection(one, complete_two_uniform(2)));

    const auto three = binary_collection(8);
    CHECK(three.total_colors() == 6);
    CHECK(is_cf_collection(three, complete_two_uniform(8)));
    const auto chi = exact_chi_cf(complete_two_uniform(8), 1, 8);
    REQUIRE(chi.has_value());
    CHECK(chi->colors == 8);  // covering beats one coloring: 6 < 8

    for (int m : {3, 5, 6}) CHECK(is_cf_collection(binary_collection(m), complete_two_uniform(m)));
}

TEST_CASE("exact covering number on tiny instances") {
    const PicodInstance one_edge(2, {{0, 1}});
    auto r = exact_alpha_cf(one_edge, 1, 4);
    REQUIRE(r.has_value());
    CHECK(r->alpha == 2);
    CHECK(is_cf_collection(r->witness, one_edge));

    const auto pentagon = named_instance("pentagon");
    auto rp = exact_alpha_cf(pentagon, 1, 25);
    REQUIRE(rp.has_value());
    CHECK(rp->alpha >= 2);
    CHECK(rp->alpha <= 3);  // bounded by the chromatic number
    CHECK(is_cf_collection(rp->witness, pentagon));

    const auto k4 = complete_two_uniform(4);
    auto rk = exact_alpha_cf(k4, 1, 16);
    REQUIRE(rk.has_value());
    CHECK(rk->alpha >= 2);  // log2(m) lower bound
    CHECK(rk->alpha <= 4);  // 2*ceil(log2 m) upper bound
    CHECK(is_cf_collection(rk->witness, k4));

    CHECK_FALSE(exact_alpha_cf(pentagon, 1, 1).has_value());  // budget exceeded
}

TEST_CASE("covering number agrees with plain two-member enumeration") {
    // independent oracle for instances whose optimum needs at most two
    // members: enumerate every pair of plain colorings over split budgets
    auto covers = [](const std::vector<KFoldColoring>& members, const PicodInstance& inst) {
        for (const auto& e : inst.request_sets()) {
            bool hit = false;
            for (const auto& c : members)
                if (is_cf_for_edge(c, e)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    auto plain_colorings = [](int m, int L) {
        std::vector<KFoldColoring> out;
        long long total = 1;
        for (int v = 0; v < m; ++v) total *= L;
        for (long long code = 0; code < total; ++code) {
            long long rest = code;
            std::vector<std::vector<int>> assign(static_cast<size_t>(m));
            for (int v = 0; v < m; ++v) {
                assign[static_cast<size_t>(v)] = {static_cast<int>(rest % L)};
                rest /= L;
            }
            out.emplace_back(1, L, std::move(assign));
        }
        return out;
    };
    for (std::uint64_t seed = 120; seed <= 126; ++seed) {
        const auto inst = testing::small_random_instance(seed, 4, 3);
        const int m = inst.message_count();
        const auto fast = exact_alpha_cf(inst, 1, m);
        REQUIRE(fast.has_value());
        int brute = -1;
        for (int total = 1; total <= m && brute < 0; ++total) {
            // one member
            for (const auto& c : plain_colorings(m, total))
                if (covers({c}, inst)) {
                    brute = total;
                    break;
                }
            // two members splitting the budget
            for (int first = 1; first < total && brute < 0; ++first)
                for (const auto& a : plain_colorings(m, first)) {
                    bool done = false;
                    for (const auto& b : plain_colorings(m, total - first))
                        if (covers({a, b}, inst)) {
                            brute = total;
                            done = true;
                            break;
                        }
                    if (done) break;
                }
        }
        if (fast->witness.member_count() <= 2) CHECK(fast->alpha == brute);
        if (brute > 0) CHECK(fast->alpha <= brute);  // more members never hurt
    }
}

TEST_CASE("covering number never exceeds the chromatic number") {
    for (std::uint64_t seed = 70; seed <= 82; ++seed) {
        const auto inst = testing::small_random_instance(seed, 6, 6);
        const auto alpha = exact_alpha_cf(inst, 1, inst.message_count());
        const auto chi = exact_chi_cf(inst, 1, inst.message_count());
        REQUIRE(alpha.has_value());
        REQUIRE(chi.has_value());
        CHECK(alpha->alpha <= chi->colors);
    }
}

TEST_CASE("fold-k covering via member-wise expansion") {
    for (std::uint64_t seed = 90; seed <= 96; ++seed) {
        const auto inst = testing::small_random_instance(seed, 5, 5);
        const auto base = exact_alpha_cf(inst, 1, inst.message_count());
        REQUIRE(base.has_value());
        const int k = 2;
        std::vector<KFoldColoring> expanded;
        for (const auto& c : base->witness.members()) expanded.push_back(expand_to_kfold(c, k));
        if (expanded.empty()) continue;
        const ColoringCollection lifted(std::move(expanded));
        CHECK(is_cf_collection(lifted, inst));
        CHECK(lifted.total_colors() == k * base->witness.total_colors());
        const auto alpha_k = exact_alpha_cf(inst, k, k * inst.message_count());
        REQUIRE(alpha_k.has_value());
        CHECK(alpha_k->alpha <= k * base->alpha);
    }
}

TEST_CASE("covers concatenate across edge-set unions") {
    for (std::uint64_t seed = 100; seed <= 110; ++seed) {
        const auto inst = testing::small_random_instance(seed, 6, 8);
        Rng rng(seed);
        std::vector<std::vector<int>> first, second;
        for (const auto& e : inst.request_sets()) (rng.next() & 1 ? first : second).push_back(e);
        const PicodInstance h1(inst.message_count(), first);
        const PicodInstance h2(inst.message_count(), second);
        std::vector<KFoldColoring> members;
        if (h1.receiver_count() > 0) members.push_back(greedy_cf_coloring(h1, seed));
        if (h2.receiver_count() > 0) members.push_back(greedy_cf_coloring(h2, seed + 1));
        if (members.empty()) continue;
        CHECK(is_cf_collection(ColoringCollection(std::move(members)), inst));
    }
}

TEST_CASE("Bernoulli rounds are seeded and concentrate") {
    CHECK_THROWS_AS(random_round_coloring(4, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_round_coloring(4, 1.0, 1), std::invalid_argument);

    const auto a = random_round_coloring(50, 0.3, 9);
    const auto b = random_round_coloring(50, 0.3, 9);
    CHECK(a.assignment() == b.assignment());
    CHECK(a.palette_size() == 2);

    // fraction of color-0 vertices within 3 sigma of q over repeated seeds
    const int m = 10000;
    const double q = 0.5, sigma = std::sqrt(q * (1 - q) / m);
    int outliers = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto c = random_round_coloring(m, q, seed);
        int zeros = 0;
        for (int v = 0; v < m; ++v)
            if (c.colors_of(v).front() == 0) ++zeros;
        if (std::abs(static_cast<double>(zeros) / m - q) > 3 * sigma) ++outliers;
    }
    CHECK(outliers <= 3);  // ~0.3% expected beyond 3 sigma
}

TEST_CASE("bucket decomposition partitions the edge set") {
    const PicodInstance tiny(4, {{0, 1}, {1, 2}, {2, 3}});  // gamma = 2 <= e
    CHECK_THROWS_AS(bucket_decomposition(tiny), std::domain_error);

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto inst = random_instance(12, 14, 1, 6, seed);
        const auto profile = intersection_profile(inst);
        if (!profile.kappa) continue;
        const auto d = bucket_decomposition(inst);
        std::set<int> seen(d.large_edges.begin(), d.large_edges.end());
        size_t total = d.large_edges.size();
        for (const auto& bucket : d.buckets) {
            for (int r : bucket.edge_indices) {
                const auto size = static_cast<double>(inst.request_set(r).size());
                CHECK(size >= bucket.threshold / 2.0);
                CHECK(size < bucket.threshold);
                seen.insert(r);
            }
            total += bucket.edge_indices.size();
        }
        CHECK(total == static_cast<size_t>(inst.receiver_count()));
        CHECK(seen.size() == static_cast<size_t>(inst.receiver_count()));
    }

    // all edges at least kappa-sized: every bucket stays empty
    const auto big = clustered_instance(20, 1, 9, 3);  // kappa ~ 4.99 < 9
    const auto d = bucket_decomposition(big);
    CHECK(d.large_edges.size() == 21);
    for (const auto& bucket : d.buckets) CHECK(bucket.edge_indices.empty());
}

TEST_CASE("bucket cover satisfies every edge in some round") {
    BucketCover empty = bucket_cover({}, 5, 3.0, 10, 1);
    CHECK(empty.rounds.empty());

    // random 4-uniform instances, measured gamma, success across 50 seeds
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = random_instance(16, 30, 4, 4, seed);
        const auto profile = intersection_profile(inst);
        if (!profile.kappa) continue;
        double threshold = -1;
        for (double t : profile.bucket_thresholds)
            if (4.0 >= t / 2.0 && 4.0 < t) threshold = t;
        if (threshold < 0) continue;  // size 4 lies in the large part here
        const auto cover = bucket_cover(inst.request_sets(), inst.message_count(), threshold,
                                        profile.gamma, seed);
        CHECK(cover.rounds.size() ==
              static_cast<size_t>(std::ceil(5.0 * threshold * std::log(profile.gamma))));
        for (const auto& e : inst.request_sets()) {
            bool covered = false;
            for (const auto& round : cover.rounds)
                if (is_cf_for_edge(round, e)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
        ++successes;
    }
    CHECK(successes > 10);  // the ensemble must actually exercise the routine

    CHECK_THROWS_AS(bucket_cover({{0, 1, 2}}, 3, 2.5, 10, 1), std::invalid_argument);  // size range
    CHECK_THROWS_AS(bucket_cover({{0, 1}}, 2, 3.0, 2, 1), std::invalid_argument);      // gamma <= e
}

TEST_CASE("log2-style construction always verifies") {
    const PicodInstance disjoint(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const auto fallback = build_log2_collection(disjoint, 3);
    CHECK(fallback.fallback);
    CHECK(fallback.collection.member_count() == 1);
    CHECK(is_cf_collection(fallback.collection, disjoint));

    const auto ex2 = named_instance("ex2");
    const auto built = build_log2_collection(ex2, 11);
    CHECK_FALSE(built.fallback);
    CHECK(built.collection.total_colors() >= 2);
    CHECK(is_cf_collection(built.collection, ex2));

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = clustered_instance(32, 2, 3, seed);
        const auto b = build_log2_collection(inst, seed);
        CHECK(is_cf_collection(b.collection, inst));
    }

    // mixed sizes: large part plus several buckets in one instance
    const auto mixed = random_instance(40, 30, 1, 12, 77);
    REQUIRE(intersection_profile(mixed).kappa.has_value());
    const auto b = build_log2_collection(mixed, 77);
    CHECK(is_cf_collection(b.collection, mixed));

    // moderate scale: hundreds of receivers, dense intersections
    const auto large = random_instance(200, 300, 2, 10, 99);
    REQUIRE(intersection_profile(large).gamma > 3);
    const auto lb = build_log2_collection(large, 99);
    CHECK(is_cf_collection(lb.collection, large));
}

TEST_SUITE_END();
