#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "picod/coloring.hpp"
#include "picod/instance.hpp"
#include "picod/rng.hpp"

namespace picod::testing {

// Example 2's hand-checkable coloring: color 0 on vertices 0..3, color 1 on 4..7.
inline KFoldColoring ex2_coloring() {
    std::vector<std::vector<int>> assign(8);
    for (int v = 0; v < 8; ++v) assign[static_cast<size_t>(v)] = {v < 4 ? 0 : 1};
    return KFoldColoring(1, 2, std::move(assign));
}

// The pentagon's 2-fold coloring with 5 colors: consecutive pairs around the cycle.
inline KFoldColoring pentagon_twofold() {
    return KFoldColoring(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// All-distinct fold-1 coloring on m vertices; conflict-free for any instance.
inline KFoldColoring distinct_coloring(int m) {
    std::vector<std::vector<int>> assign(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) assign[static_cast<size_t>(v)] = {v};
    return KFoldColoring(1, m, std::move(assign));
}

// Small random instances for property checks: m in [2, max_m], n in [1, max_n],
// edge sizes in [1, min(4, m)].
inline PicodInstance small_random_instance(std::uint64_t seed, int max_m = 8, int max_n = 10) {
    Rng rng(seed);
    const int m = rng.uniform_int(2, max_m);
    const int n = rng.uniform_int(1, max_n);
    const int max_size = std::min(4, m);
    return random_instance(m, n, 1, max_size, Rng::derive(seed, 17));
}

}  // namespace picod::testing
