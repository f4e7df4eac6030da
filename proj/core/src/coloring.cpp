#include "picod/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "picod/rng.hpp"

namespace picod {

KFoldColoring::KFoldColoring(int fold, int palette_size, std::vector<std::vector<int>> assignment)
    : k_(fold), L_(palette_size), assign_(std::move(assignment)) {
    if (k_ < 1) throw std::invalid_argument("fold must be >= 1");
    if (L_ < k_) throw std::invalid_argument("palette must hold at least k colors");
    for (size_t v = 0; v < assign_.size(); ++v) {
        auto& cs = assign_[v];
        std::sort(cs.begin(), cs.end());
        if (static_cast<int>(cs.size()) != k_ ||
            std::adjacent_find(cs.begin(), cs.end()) != cs.end())
            throw std::invalid_argument("vertex " + std::to_string(v) + " needs exactly " +
                                        std::to_string(k_) + " distinct colors");
        if (cs.front() < 0 || cs.back() >= L_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " uses a color outside the palette");
    }
}

namespace {

bool sorted_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace

bool is_cf_for_edge(const KFoldColoring& c, std::span<const int> edge) {
    if (edge.size() <= 1) return true;
    for (int v : edge) {
        bool unique = true;
        for (int u : edge) {
            if (u == v) continue;
            if (!sorted_disjoint(c.colors_of(v), c.colors_of(u))) {
                unique = false;
                break;
            }
        }
        if (unique) return true;
    }
    return false;
}

bool is_cf(const KFoldColoring& c, const PicodInstance& inst) {
    if (c.vertex_count() != inst.message_count())
        throw std::invalid_argument("coloring domain does not match the instance");
    for (const auto& e : inst.request_sets())
        if (!is_cf_for_edge(c, e)) return false;
    return true;
}

namespace {

// Canonical DFS over k-subsets per vertex: colors >= `used` taken by a vertex
// must be the next consecutive fresh indices, so each relabeling class of
// colorings is generated exactly once. Edges are checked as soon as their
// last vertex is assigned.
class ColoringSearch {
  public:
    ColoringSearch(const PicodInstance& inst, int k, int max_colors, bool require_cf,
                   const std::function<bool(const KFoldColoring&)>& fn)
        : inst_(inst), k_(k), cap_(max_colors), require_cf_(require_cf), fn_(fn) {
        const int m = inst.message_count();
        assign_.assign(static_cast<size_t>(m), {});
        edges_closing_at_.assign(static_cast<size_t>(m), {});
        for (int r = 0; r < inst.receiver_count(); ++r) {
            const auto& e = inst.request_set(r);
            edges_closing_at_[static_cast<size_t>(e.back())].push_back(r);
        }
    }

    void run() {
        if (k_ > cap_) return;
        if (inst_.message_count() == 0) {
            KFoldColoring c(k_, k_, {});
            fn_(c);
            return;
        }
        dfs(0, 0);
    }

  private:
    bool dfs(int v, int used) {
        const int m = inst_.message_count();
        if (v == m) return emit(used);
        const int fresh_max = std::min(k_, cap_ - used);
        std::vector<int> pick;
        // f = number of fresh colors this vertex introduces
        for (int f = 0; f <= fresh_max; ++f) {
            if (k_ - f > used) continue;  // not enough existing colors
            pick.assign(static_cast<size_t>(k_), 0);
            if (!choose_existing(v, used, f, 0, -1, pick)) return false;
        }
        return true;
    }

    // Choose k-f existing colors (ascending), then append the fresh block.
    bool choose_existing(int v, int used, int f, int depth, int last, std::vector<int>& pick) {
        const int need = k_ - f;
        if (depth == need) {
            for (int i = 0; i < f; ++i) pick[static_cast<size_t>(need + i)] = used + i;
            auto& slot = assign_[static_cast<size_t>(v)];
            slot.assign(pick.begin(), pick.end());
            bool ok = true;
            if (require_cf_) {
                for (int r : edges_closing_at_[static_cast<size_t>(v)])
                    if (!edge_cf(r)) {
                        ok = false;
                        break;
                    }
            }
            if (ok && !dfs(v + 1, used + f)) return false;
            slot.clear();
            return true;
        }
        for (int c = last + 1; c < used; ++c) {
            pick[static_cast<size_t>(depth)] = c;
            if (!choose_existing(v, used, f, depth + 1, c, pick)) return false;
        }
        return true;
    }

    bool edge_cf(int r) const {
        const auto& e = inst_.request_set(r);
        if (e.size() <= 1) return true;
        for (int v : e) {
            bool unique = true;
            for (int u : e) {
                if (u == v) continue;
                if (!sorted_disjoint(assign_[static_cast<size_t>(v)], assign_[static_cast<size_t>(u)])) {
                    unique = false;
                    break;
                }
            }
            if (unique) return true;
        }
        return false;
    }

    bool emit(int used) {
        const int L = std::max(used, k_);
        KFoldColoring c(k_, L, assign_);
        return fn_(c);
    }

    const PicodInstance& inst_;
    int k_;
    int cap_;
    bool require_cf_;
    const std::function<bool(const KFoldColoring&)>& fn_;
    std::vector<std::vector<int>> assign_;
    std::vector<std::vector<int>> edges_closing_at_;
};

}  // namespace

void for_each_coloring(const PicodInstance& inst, int k, int max_colors, bool require_cf,
                       const std::function<bool(const KFoldColoring&)>& fn) {
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    ColoringSearch(inst, k, max_colors, require_cf, fn).run();
}

std::optional<ChiResult> exact_chi_cf(const PicodInstance& inst, int k, int max_colors) {
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    if (max_colors < k) return std::nullopt;
    for (int L = k; L <= max_colors; ++L) {
        std::optional<KFoldColoring> found;
        for_each_coloring(inst, k, L, true, [&](const KFoldColoring& c) {
            found = c;
            return false;  // stop at the first witness
        });
        if (found) return ChiResult{L, std::move(*found)};
    }
    return std::nullopt;
}

KFoldColoring greedy_cf_coloring(const PicodInstance& inst, std::uint64_t seed) {
    const int m = inst.message_count();
    const int n = inst.receiver_count();
    if (m == 0) return KFoldColoring(1, 1, {});

    std::vector<int> incidence(static_cast<size_t>(m), 0);
    for (const auto& e : inst.request_sets())
        for (int v : e) ++incidence[static_cast<size_t>(v)];

    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (int i = m - 1; i > 0; --i)
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(rng.uniform_int(0, i))]);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return incidence[static_cast<size_t>(a)] > incidence[static_cast<size_t>(b)]; });

    std::vector<int> color(static_cast<size_t>(m), -1);
    // An edge counts as made conflict-free only once its last vertex is
    // colored; edges containing the current vertex were never complete before.
    auto complete_and_cf = [&](const std::vector<int>& e) {
        for (int v : e)
            if (color[static_cast<size_t>(v)] < 0) return false;
        for (int v : e) {
            bool unique = true;
            for (int u : e)
                if (u != v && color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                    unique = false;
                    break;
                }
            if (unique) return true;
        }
        return false;
    };

    std::vector<std::vector<int>> edges_of(static_cast<size_t>(m));
    for (int r = 0; r < n; ++r)
        for (int v : inst.request_set(r)) edges_of[static_cast<size_t>(v)].push_back(r);

    int max_used = -1;
    for (int v : order) {
        int best_color = 0, best_gain = -1;
        for (int c = 0; c <= max_used + 1; ++c) {
            color[static_cast<size_t>(v)] = c;
            int gain = 0;
            for (int r : edges_of[static_cast<size_t>(v)])
                if (complete_and_cf(inst.request_set(r))) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_color = c;
            }
            color[static_cast<size_t>(v)] = -1;
        }
        color[static_cast<size_t>(v)] = best_color;
        max_used = std::max(max_used, best_color);
    }

    std::vector<std::vector<int>> assign(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) assign[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)]};
    KFoldColoring result(1, max_used + 1, std::move(assign));
    if (is_cf(result, inst)) return result;

    std::vector<std::vector<int>> distinct(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) distinct[static_cast<size_t>(v)] = {v};
    return KFoldColoring(1, m, std::move(distinct));
}

KFoldColoring expand_to_kfold(const KFoldColoring& c, int k) {
    if (c.fold() != 1) throw std::invalid_argument("expand_to_kfold takes a fold-1 coloring");
    if (k < 1) throw std::invalid_argument("fold must be >= 1");
    std::vector<std::vector<int>> assign(static_cast<size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v) {
        const int base = c.colors_of(v).front() * k;
        for (int j = 0; j < k; ++j) assign[static_cast<size_t>(v)].push_back(base + j);
    }
    return KFoldColoring(k, c.palette_size() * k, std::move(assign));
}

}  // namespace picod
