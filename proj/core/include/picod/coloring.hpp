#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "picod/instance.hpp"

namespace picod {

/**
 * @brief A k-fold coloring: every vertex carries a sorted set of exactly k
 * distinct colors drawn from the palette {0, ..., L-1}.
 *
 * Immutable value type. k = 1 is the ordinary single-color case.
 */
class KFoldColoring {
  public:
    /// Validates fold/palette consistency; sorts each vertex's color set.
    KFoldColoring(int fold, int palette_size, std::vector<std::vector<int>> assignment);

    int fold() const { return k_; }
    int palette_size() const { return L_; }
    int vertex_count() const { return static_cast<int>(assign_.size()); }
    const std::vector<int>& colors_of(int v) const { return assign_[static_cast<size_t>(v)]; }
    const std::vector<std::vector<int>>& assignment() const { return assign_; }

  private:
    int k_ = 1;
    int L_ = 1;
    std::vector<std::vector<int>> assign_;
};

/// True iff some vertex of the edge has a color set disjoint from every other
/// vertex's set in the edge. Singleton edges are always conflict-free.
bool is_cf_for_edge(const KFoldColoring& c, std::span<const int> edge);

/// Conflict-free for every edge of the instance. Throws on domain mismatch.
bool is_cf(const KFoldColoring& c, const PicodInstance& inst);

struct ChiResult {
    int colors;              ///< the k-fold conflict-free chromatic number
    KFoldColoring witness;   ///< a coloring realizing it
};

/// Smallest palette admitting a k-fold conflict-free coloring, by exhaustive
/// search over palette-canonical assignments with L ascending. Returns nullopt
/// when no palette <= max_colors works. Exponential; intended for tiny instances.
std::optional<ChiResult> exact_chi_cf(const PicodInstance& inst, int k, int max_colors);

/// Deterministic greedy heuristic (fold 1): vertices in decreasing incidence
/// order (seed breaks ties), each takes the smallest color making the most
/// edges newly conflict-free. Falls back to all-distinct colors when the
/// greedy pass is not conflict-free, so the result always is, with L <= m.
KFoldColoring greedy_cf_coloring(const PicodInstance& inst, std::uint64_t seed);

/// Expands a fold-1 coloring into fold k by turning color j into the block
/// {k*j, ..., k*j + k - 1}. Conflict-freeness is preserved.
KFoldColoring expand_to_kfold(const KFoldColoring& c, int k);

/// Enumerates canonical k-fold colorings of the instance's vertices using at
/// most max_colors colors (fresh colors appear in first-use order, so each
/// palette-relabeling class is visited once). When require_cf is set, branches
/// are pruned as soon as a fully assigned edge has no conflict-free witness.
/// The callback returns false to stop the enumeration.
void for_each_coloring(const PicodInstance& inst, int k, int max_colors, bool require_cf,
                       const std::function<bool(const KFoldColoring&)>& fn);

}  // namespace picod
