#pragma once

#include <optional>
#include <span>
#include <vector>

#include "picod/collection.hpp"
#include "picod/coloring.hpp"
#include "picod/instance.hpp"

namespace picod {

/// Per-member color subsets for the colorings of a collection, parallel by
/// index. A selection covers an instance when every edge is satisfied by at
/// least one member's subset.
struct EssentialSelection {
    std::vector<std::vector<int>> essential;
};

/// Edge indices satisfied by the colors in `subset`: edges with a vertex v
/// whose color set lies inside `subset` and is disjoint from every other
/// vertex's set in the edge.
std::vector<int> edges_satisfied(const KFoldColoring& c, std::span<const int> subset,
                                 const PicodInstance& inst);

/// Max over satisfied edges of the number of `subset` colors appearing in the
/// edge. Throws std::invalid_argument when the subset satisfies no edge.
int delta_of(const KFoldColoring& c, std::span<const int> subset, const PicodInstance& inst);

struct EssentialSearch {
    int delta;                ///< essential-color width of the best subset found
    std::vector<int> colors;  ///< the minimizing essential color set
    bool exact;               ///< false when the greedy fallback produced it
};

/// Minimizing essential color set for a conflict-free coloring: exhaustive
/// descent while the palette has at most `exhaustive_limit` colors, greedy
/// shrinking (flagged inexact) above it. Throws when c is not conflict-free.
EssentialSearch min_delta_for_coloring(const KFoldColoring& c, const PicodInstance& inst,
                                       int exhaustive_limit = 18);

struct DeltaWitness {
    int delta;
    KFoldColoring coloring;
    std::vector<int> essential;
};

/// k-fold local conflict-free chromatic number by exhaustive search over
/// conflict-free colorings with at most `palette_budget` colors. A budget of
/// m*k is always sufficient for the true value. Returns nullopt when no
/// conflict-free coloring fits the budget.
std::optional<DeltaWitness> exact_delta_k(const PicodInstance& inst, int k, int palette_budget);

struct LambdaWitness {
    int lambda;
    ColoringCollection collection;
    EssentialSelection selection;
};

/// k-fold local conflict-free covering number: cheapest family of
/// (coloring, color subset) pairs whose satisfied edge sets cover the
/// instance, cost being the sum of essential-color widths. Exhaustive over
/// canonical colorings within the palette budget; practical for tiny
/// instances (at most ~20 edges, m*k <= 30).
std::optional<LambdaWitness> exact_lambda_k(const PicodInstance& inst, int k, int palette_budget);

/// Smallest essential color set size over all conflict-free colorings within
/// the palette budget (the middle quantity of the chromatic sandwich bounds).
std::optional<int> exact_min_essential_size(const PicodInstance& inst, int k, int palette_budget);

struct MergedColoring {
    KFoldColoring coloring;
    std::vector<int> essential;  ///< the disjoint union of the members' subsets
};

/// Folds a covering (collection, selection) pair into one conflict-free
/// coloring over the disjoint union of the selected subsets plus a fresh
/// k-color block; its essential width is at most the sum of the members'.
/// Throws when the selection does not cover the instance.
MergedColoring merge_collection(const ColoringCollection& col, const EssentialSelection& sel,
                                const PicodInstance& inst);

/// Remaps all colors outside `subset` into a fresh block of at most k colors,
/// yielding a coloring over |subset| + k colors. When `subset` is essential
/// for a conflict-free coloring, the result is conflict-free.
KFoldColoring remap_to_essential(const KFoldColoring& c, std::span<const int> subset);

}  // namespace picod
