#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "picod/coloring.hpp"
#include "picod/instance.hpp"

namespace picod {

/**
 * @brief An ordered list of k-fold colorings over one vertex set, each with
 * its own palette. Covers an instance when every edge is conflict-free under
 * at least one member.
 */
class ColoringCollection {
  public:
    /// Empty collection of the given fold.
    explicit ColoringCollection(int fold = 1);
    /// Validates that all members share fold and vertex domain.
    explicit ColoringCollection(std::vector<KFoldColoring> members);

    int fold() const { return k_; }
    int member_count() const { return static_cast<int>(members_.size()); }
    const KFoldColoring& member(int p) const { return members_[static_cast<size_t>(p)]; }
    const std::vector<KFoldColoring>& members() const { return members_; }

    /// Sum of the members' palette sizes.
    int total_colors() const;

  private:
    int k_ = 1;
    std::vector<KFoldColoring> members_;
};

/// Every edge conflict-free under at least one member. Throws on a domain
/// mismatch between the collection and the instance.
bool is_cf_collection(const ColoringCollection& col, const PicodInstance& inst);

/// ceil(log2 m) two-color fold-1 colorings: member p colors each vertex by
/// bit p of its label. Covers the complete 2-uniform instance on m vertices
/// with 2*ceil(log2 m) total colors. Requires m >= 2.
ColoringCollection binary_collection(int m);

struct AlphaResult {
    int alpha;                     ///< the k-fold conflict-free covering number
    ColoringCollection witness;
};

/// Minimum total palette size over covering collections, with a witness.
/// Exhaustive (partitions the edge set and takes exact chromatic numbers per
/// part); practical up to ~14 edges. Returns nullopt when the minimum exceeds
/// the budget.
std::optional<AlphaResult> exact_alpha_cf(const PicodInstance& inst, int k, int budget);

/// Bernoulli two-coloring: each vertex takes color 0 with probability q,
/// else color 1. Deterministic given the seed. Requires 0 < q < 1.
KFoldColoring random_round_coloring(int vertices, double q, std::uint64_t seed);

/// Edge partition by size against the thresholds of the intersection profile.
struct BucketDecomposition {
    double kappa = 0.0;
    std::vector<int> large_edges;  ///< indices of edges with size >= kappa
    struct Bucket {
        double threshold;          ///< k_i; the bucket holds sizes in [k_i/2, k_i)
        std::vector<int> edge_indices;
    };
    std::vector<Bucket> buckets;
};

/// Requires gamma > e (so kappa is defined); throws std::domain_error
/// otherwise. Every edge lands in exactly one part.
BucketDecomposition bucket_decomposition(const PicodInstance& inst);

/// Raised when the randomized searches exhaust their resampling budget.
struct resample_cap_error : std::runtime_error {
    long attempts;
    explicit resample_cap_error(long attempts_);
};

struct BucketCover {
    std::vector<KFoldColoring> rounds;  ///< two-color rounds; 2 * rounds colors total
    long attempts = 0;                  ///< resample events consumed
};

/// ceil(5 * k_i * ln gamma) Bernoulli(1/k_i) rounds, resampled (all rounds of
/// a violated edge's vertices are redrawn) until every edge is conflict-free
/// in at least one round. The cap defaults to 10 * |edges| * ceil(ln gamma + 1)
/// resample events; 0 keeps the default.
BucketCover bucket_cover(const std::vector<std::vector<int>>& edges, int vertex_count,
                         double threshold, int gamma, std::uint64_t seed, long cap = 0);

struct Log2Options {
    double large_budget_scale = 4.0;  ///< constant in front of the large-part palette
    long cap = 0;                     ///< resample cap override; 0 keeps defaults
};

struct Log2Build {
    ColoringCollection collection;
    long attempts = 0;
    bool fallback = false;  ///< gamma <= e path: single greedy coloring
};

/// Covering collection with O(log^2 gamma)-style budget: a verified random
/// coloring of the large-size edges plus one bucket cover per size bucket.
/// Falls back to a greedy singleton when gamma <= e. The returned collection
/// always passes is_cf_collection.
Log2Build build_log2_collection(const PicodInstance& inst, std::uint64_t seed,
                                const Log2Options& options = {});

}  // namespace picod
