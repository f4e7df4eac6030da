#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace picod {

/**
 * @brief A pliable index coding instance, stored as a hypergraph.
 *
 * Messages are vertices labeled 0..m-1; each receiver contributes one
 * hyperedge holding its request-set (the messages it does not have).
 * Edges are kept sorted and deduplicated within themselves; duplicate
 * edges across the list are allowed, since distinct receivers may share
 * a request-set. Instances are immutable after construction and safe to
 * share read-only across threads.
 */
class PicodInstance {
  public:
    /// Validates and normalizes. Throws std::invalid_argument on an empty
    /// edge or an out-of-range vertex label (message names the edge index).
    PicodInstance(int message_count, std::vector<std::vector<int>> request_sets);

    int message_count() const { return m_; }              ///< m
    int receiver_count() const { return static_cast<int>(edges_.size()); }  ///< n

    const std::vector<int>& request_set(int r) const { return edges_[static_cast<size_t>(r)]; }
    const std::vector<std::vector<int>>& request_sets() const { return edges_; }

  private:
    int m_ = 0;
    std::vector<std::vector<int>> edges_;
};

/// Pairwise-intersection statistics of an instance.
struct IntersectionProfile {
    int gamma = 0;                         ///< max over edges of intersecting-edge count
    std::vector<int> per_edge_degree;      ///< per-edge intersecting-edge counts
    int min_edge_size = 0;
    int max_edge_size = 0;
    /// 2*ln(gamma) - 1; present only when gamma > e.
    std::optional<double> kappa;
    /// Size thresholds kappa / 2^i, i = 0..P; empty when kappa is absent.
    std::vector<double> bucket_thresholds;
};

/// Exact profile by pairwise edge comparison.
IntersectionProfile intersection_profile(const PicodInstance& inst);

/// All 2-subsets of [m] as edges, in lexicographic order. Requires m >= 2.
PicodInstance complete_two_uniform(int m);

/// n edges drawn independently: size uniform in [min_size, max_size], then a
/// uniform subset of that size. Deterministic given the seed.
/// Requires 1 <= min_size <= max_size <= m.
PicodInstance random_instance(int m, int n, int min_size, int max_size, std::uint64_t seed);

/// Disjoint clusters of `gamma`+1 equal-size edges sharing one hub vertex per
/// cluster, so every edge intersects exactly `gamma` others. Vertex labels and
/// edge order are shuffled by the seed. Used for incidence-controlled ensembles.
PicodInstance clustered_instance(int gamma, int clusters, int edge_size, std::uint64_t seed);

/// Built-in demo instances: "pentagon" (5 vertices, 5 two-edges),
/// "ex2" (8 vertices, 8 four-edges), "ex3" (complete 2-uniform on 10).
PicodInstance named_instance(std::string_view name);

}  // namespace picod
