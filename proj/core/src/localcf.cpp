#include "picod/localcf.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace picod {

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

std::vector<int> normalize_subset(std::span<const int> subset, int palette) {
    std::vector<int> d(subset.begin(), subset.end());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (!d.empty() && (d.front() < 0 || d.back() >= palette))
        throw std::invalid_argument("color subset outside the palette");
    return d;
}

// Witness structure of a coloring against an instance: for each edge, the
// color sets of its conflict-free witnesses, plus the union of colors in the
// edge. Masks require palette <= 64.
struct EdgeMasks {
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::vector<std::uint64_t> unions;
};

std::uint64_t color_mask(const std::vector<int>& colors) {
    std::uint64_t m = 0;
    for (int c : colors) m |= 1ULL << c;
    return m;
}

EdgeMasks build_masks(const KFoldColoring& c, const PicodInstance& inst) {
    EdgeMasks out;
    const int n = inst.receiver_count();
    out.witnesses.resize(static_cast<size_t>(n));
    out.unions.assign(static_cast<size_t>(n), 0);
    std::vector<std::uint64_t> vertex_mask(static_cast<size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v) vertex_mask[static_cast<size_t>(v)] = color_mask(c.colors_of(v));
    for (int r = 0; r < n; ++r) {
        const auto& e = inst.request_set(r);
        for (int v : e) out.unions[static_cast<size_t>(r)] |= vertex_mask[static_cast<size_t>(v)];
        for (int v : e) {
            bool unique = true;
            for (int u : e)
                if (u != v && (vertex_mask[static_cast<size_t>(v)] & vertex_mask[static_cast<size_t>(u)])) {
                    unique = false;
                    break;
                }
            if (unique) out.witnesses[static_cast<size_t>(r)].push_back(vertex_mask[static_cast<size_t>(v)]);
        }
    }
    return out;
}

bool mask_satisfies(const EdgeMasks& masks, int edge, std::uint64_t d) {
    for (std::uint64_t w : masks.witnesses[static_cast<size_t>(edge)])
        if ((w & ~d) == 0) return true;
    return false;
}

bool mask_essential(const EdgeMasks& masks, std::uint64_t d) {
    for (size_t r = 0; r < masks.witnesses.size(); ++r)
        if (!mask_satisfies(masks, static_cast<int>(r), d)) return false;
    return true;
}

// Width of an essential set: max essential colors seen in one edge.
int mask_width(const EdgeMasks& masks, std::uint64_t d) {
    int w = 0;
    for (std::uint64_t u : masks.unions) w = std::max(w, std::popcount(u & d));
    return w;
}

std::vector<int> mask_to_colors(std::uint64_t d) {
    std::vector<int> out;
    for (int c = 0; d; ++c, d >>= 1)
        if (d & 1) out.push_back(c);
    return out;
}

}  // namespace

std::vector<int> edges_satisfied(const KFoldColoring& c, std::span<const int> subset,
                                 const PicodInstance& inst) {
    if (c.vertex_count() != inst.message_count())
        throw std::invalid_argument("coloring domain does not match the instance");
    const auto d = normalize_subset(subset, c.palette_size());
    std::vector<char> in_set(static_cast<size_t>(c.palette_size()), 0);
    for (int col : d) in_set[static_cast<size_t>(col)] = 1;
    std::vector<int> out;
    for (int r = 0; r < inst.receiver_count(); ++r) {
        const auto& e = inst.request_set(r);
        for (int v : e) {
            bool inside = true;
            for (int col : c.colors_of(v))
                if (!in_set[static_cast<size_t>(col)]) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            bool unique = true;
            for (int u : e) {
                if (u == v) continue;
                const auto& cu = c.colors_of(u);
                for (int col : c.colors_of(v))
                    if (std::binary_search(cu.begin(), cu.end(), col)) {
                        unique = false;
                        break;
                    }
                if (!unique) break;
            }
            if (unique) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

int delta_of(const KFoldColoring& c, std::span<const int> subset, const PicodInstance& inst) {
    const auto d = normalize_subset(subset, c.palette_size());
    const auto satisfied = edges_satisfied(c, d, inst);
    if (satisfied.empty())
        throw std::invalid_argument("the color subset satisfies no edge; width is undefined");
    std::vector<char> in_set(static_cast<size_t>(c.palette_size()), 0);
    for (int col : d) in_set[static_cast<size_t>(col)] = 1;
    int width = 0;
    for (int r : satisfied) {
        std::vector<char> seen(static_cast<size_t>(c.palette_size()), 0);
        int count = 0;
        for (int v : inst.request_set(r))
            for (int col : c.colors_of(v))
                if (in_set[static_cast<size_t>(col)] && !seen[static_cast<size_t>(col)]) {
                    seen[static_cast<size_t>(col)] = 1;
                    ++count;
                }
        width = std::max(width, count);
    }
    return width;
}

namespace {

// Exhaustive descent from the full palette: children drop one color and must
// stay essential (satisfied edge sets only shrink when colors are removed).
void descend(const EdgeMasks& masks, std::uint64_t d, int width,
             std::unordered_set<std::uint64_t>& seen, int& best_width, std::uint64_t& best_set) {
    const auto better = [&] {
        if (width != best_width) return width < best_width;
        if (std::popcount(d) != std::popcount(best_set)) return std::popcount(d) < std::popcount(best_set);
        return d < best_set;
    };
    if (better()) {
        best_width = width;
        best_set = d;
    }
    for (std::uint64_t rest = d; rest;) {
        const std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        const std::uint64_t child = d ^ bit;
        if (!seen.insert(child).second) continue;
        if (!mask_essential(masks, child)) continue;
        descend(masks, child, mask_width(masks, child), seen, best_width, best_set);
    }
}

}  // namespace

EssentialSearch min_delta_for_coloring(const KFoldColoring& c, const PicodInstance& inst,
                                       int exhaustive_limit) {
    if (!is_cf(c, inst)) throw std::invalid_argument("coloring is not conflict-free");
    const int L = c.palette_size();

    if (L <= std::min(exhaustive_limit, 63)) {
        const auto masks = build_masks(c, inst);
        const std::uint64_t full = L == 64 ? ~0ULL : (1ULL << L) - 1;
        std::unordered_set<std::uint64_t> seen{full};
        int best_width = mask_width(masks, full);
        std::uint64_t best_set = full;
        descend(masks, full, best_width, seen, best_width, best_set);
        return EssentialSearch{best_width, mask_to_colors(best_set), true};
    }

    // Greedy shrink: drop the color whose removal keeps the set essential and
    // reduces the width the most, smallest color on ties.
    std::vector<int> d(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) d[static_cast<size_t>(i)] = i;
    auto width_of = [&](const std::vector<int>& set) {
        return inst.receiver_count() == 0 ? 0 : delta_of(c, set, inst);
    };
    auto essential = [&](const std::vector<int>& set) {
        return static_cast<int>(edges_satisfied(c, set, inst).size()) == inst.receiver_count();
    };
    int width = width_of(d);
    for (;;) {
        int pick = -1, pick_width = width;
        for (size_t i = 0; i < d.size(); ++i) {
            std::vector<int> trial(d);
            trial.erase(trial.begin() + static_cast<long>(i));
            if (!essential(trial)) continue;
            const int w = width_of(trial);
            if (pick < 0 || w < pick_width) {
                pick = static_cast<int>(i);
                pick_width = w;
            }
        }
        if (pick < 0) break;
        d.erase(d.begin() + pick);
        width = pick_width;
    }
    return EssentialSearch{width, std::move(d), false};
}

std::optional<DeltaWitness> exact_delta_k(const PicodInstance& inst, int k, int palette_budget) {
    if (palette_budget > 63) throw std::invalid_argument("palette budget above 63 is unsupported");
    if (inst.receiver_count() == 0) {
        std::vector<std::vector<int>> assign(static_cast<size_t>(inst.message_count()));
        for (int v = 0; v < inst.message_count(); ++v)
            for (int j = 0; j < k; ++j) assign[static_cast<size_t>(v)].push_back(v * k + j);
        const int L = std::max(inst.message_count() * k, k);
        return DeltaWitness{0, KFoldColoring(k, L, std::move(assign)), {}};
    }
    std::optional<DeltaWitness> best;
    for_each_coloring(inst, k, palette_budget, true, [&](const KFoldColoring& c) {
        const auto masks = build_masks(c, inst);
        const int L = c.palette_size();
        const std::uint64_t full = (1ULL << L) - 1;
        std::unordered_set<std::uint64_t> seen{full};
        int best_width = mask_width(masks, full);
        std::uint64_t best_set = full;
        descend(masks, full, best_width, seen, best_width, best_set);
        if (!best || best_width < best->delta)
            best = DeltaWitness{best_width, c, mask_to_colors(best_set)};
        return !(best && best->delta <= k);  // k is the floor; stop once reached
    });
    return best;
}

std::optional<LambdaWitness> exact_lambda_k(const PicodInstance& inst, int k, int palette_budget) {
    const int n = inst.receiver_count();
    if (n > 14) throw std::invalid_argument("exact_lambda_k handles at most 14 edges");
    if (palette_budget > 63) throw std::invalid_argument("palette budget above 63 is unsupported");
    if (n == 0) return LambdaWitness{0, ColoringCollection(k), {}};

    struct Achievable {
        int width = -1;
        std::vector<std::vector<int>> assign;
        int palette = 0;
        std::uint64_t subset = 0;
    };
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<Achievable> phi(static_cast<size_t>(full) + 1);

    // Achievable (satisfied-set, width) pairs over all colorings and subsets.
    for_each_coloring(inst, k, palette_budget, false, [&](const KFoldColoring& c) {
        const auto masks = build_masks(c, inst);
        const int used = c.palette_size();
        const std::uint64_t all_colors = (1ULL << used) - 1;
        for (std::uint64_t d = 1; d <= all_colors; ++d) {
            std::uint32_t satisfied = 0;
            for (int r = 0; r < n; ++r)
                if (mask_satisfies(masks, r, d)) satisfied |= 1u << r;
            if (!satisfied) continue;
            int width = 0;
            for (int r = 0; r < n; ++r)
                if (satisfied >> r & 1u)
                    width = std::max(width, std::popcount(masks.unions[static_cast<size_t>(r)] & d));
            auto& slot = phi[satisfied];
            if (slot.width < 0 || width < slot.width) {
                slot.width = width;
                slot.assign = c.assignment();
                slot.palette = c.palette_size();
                slot.subset = d;
            }
        }
        return true;
    });

    // Cheapest cover of the edge set by achievable satisfied-sets.
    std::vector<int> cost(static_cast<size_t>(full) + 1, -1);
    std::vector<std::uint32_t> choice(static_cast<size_t>(full) + 1, 0);
    cost[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t t = 1; t <= full; ++t) {
            if (phi[t].width < 0 || !(t & low)) continue;
            const int rest = cost[mask & ~t];
            if (rest < 0) continue;
            const int total = phi[t].width + rest;
            if (cost[mask] < 0 || total < cost[mask]) {
                cost[mask] = total;
                choice[mask] = t;
            }
        }
    }
    if (cost[full] < 0) return std::nullopt;

    std::vector<KFoldColoring> members;
    EssentialSelection selection;
    for (std::uint32_t mask = full; mask;) {
        const auto& slot = phi[choice[mask]];
        members.emplace_back(k, slot.palette, slot.assign);
        selection.essential.push_back(mask_to_colors(slot.subset));
        mask &= ~choice[mask];
    }
    return LambdaWitness{cost[full], ColoringCollection(std::move(members)), std::move(selection)};
}

std::optional<int> exact_min_essential_size(const PicodInstance& inst, int k, int palette_budget) {
    if (palette_budget > 30) throw std::invalid_argument("palette budget above 30 is unsupported");
    if (inst.receiver_count() == 0) return 0;
    std::optional<int> best;
    for_each_coloring(inst, k, palette_budget, true, [&](const KFoldColoring& c) {
        const auto masks = build_masks(c, inst);
        const int L = c.palette_size();
        const std::uint64_t all_colors = (1ULL << L) - 1;
        const int cap = best ? *best - 1 : L;
        for (int size = k; size <= cap; ++size) {
            bool found = false;
            // subsets of {0..L-1} with exactly `size` colors
            for (std::uint64_t d = (1ULL << size) - 1; d <= all_colors;) {
                if (mask_essential(masks, d)) {
                    found = true;
                    break;
                }
                // next subset of equal popcount (Gosper)
                const std::uint64_t c2 = d & -d, r = d + c2;
                d = (((r ^ d) >> 2) / c2) | r;
            }
            if (found) {
                best = size;
                break;
            }
        }
        return !(best && *best <= k);  // cannot go below k
    });
    return best;
}

namespace {

// Folding a collection into one coloring assigns each vertex either the
// member whose selected subset holds its colors, or the fresh block. Taking
// the first qualifying member for every vertex (the natural rule, and the
// first branch tried here) can leave an edge without a uniquely colored
// vertex, so the assignment is searched: each vertex ranges over its
// qualifying members and the block, every edge must keep a non-block witness,
// and the essential width of the result must not exceed the members' sum.
class MergeSearch {
  public:
    MergeSearch(const ColoringCollection& col, const std::vector<std::vector<int>>& subsets,
                const PicodInstance& inst, int width_budget)
        : col_(col), inst_(inst), budget_(width_budget) {
        const int m = inst.message_count();
        member_.assign(static_cast<size_t>(m), -1);
        domain_.resize(static_cast<size_t>(m));
        for (int v = 0; v < m; ++v) {
            for (int p = 0; p < col.member_count(); ++p) {
                const auto& d = subsets[static_cast<size_t>(p)];
                const auto& cv = col.member(p).colors_of(v);
                if (std::includes(d.begin(), d.end(), cv.begin(), cv.end()))
                    domain_[static_cast<size_t>(v)].push_back(p);
            }
            domain_[static_cast<size_t>(v)].push_back(-1);  // the fresh block, tried last
        }
        edges_closing_at_.assign(static_cast<size_t>(m), {});
        for (int r = 0; r < inst.receiver_count(); ++r)
            edges_closing_at_[static_cast<size_t>(inst.request_set(r).back())].push_back(r);
    }

    std::optional<std::vector<int>> run() {
        if (dfs(0)) return member_;
        return std::nullopt;
    }

  private:
    bool dfs(int v) {
        if (v == inst_.message_count()) return max_width() <= budget_;
        for (int pick : domain_[static_cast<size_t>(v)]) {
            member_[static_cast<size_t>(v)] = pick;
            bool viable = true;
            for (int r : edges_closing_at_[static_cast<size_t>(v)])
                if (!edge_has_witness(r)) {
                    viable = false;
                    break;
                }
            if (viable && dfs(v + 1)) return true;
        }
        member_[static_cast<size_t>(v)] = -1;
        return false;
    }

    // A vertex placed in member p witnesses the edge when its colors meet no
    // other same-member vertex; other members and the block are color-disjoint.
    bool edge_has_witness(int r) const {
        const auto& e = inst_.request_set(r);
        for (int w : e) {
            const int p = member_[static_cast<size_t>(w)];
            if (p < 0) continue;
            bool unique = true;
            for (int u : e) {
                if (u == w || member_[static_cast<size_t>(u)] != p) continue;
                if (!sorted_disjoint(col_.member(p).colors_of(w), col_.member(p).colors_of(u))) {
                    unique = false;
                    break;
                }
            }
            if (unique) return true;
        }
        return false;
    }

    int max_width() const {
        int width = 0;
        for (const auto& e : inst_.request_sets()) {
            int count = 0;
            for (int p = 0; p < col_.member_count(); ++p) {
                std::vector<int> colors;
                for (int v : e)
                    if (member_[static_cast<size_t>(v)] == p)
                        for (int c : col_.member(p).colors_of(v)) colors.push_back(c);
                std::sort(colors.begin(), colors.end());
                colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
                count += static_cast<int>(colors.size());
            }
            width = std::max(width, count);
        }
        return width;
    }

    const ColoringCollection& col_;
    const PicodInstance& inst_;
    int budget_;
    std::vector<int> member_;
    std::vector<std::vector<int>> domain_;
    std::vector<std::vector<int>> edges_closing_at_;
};

}  // namespace

MergedColoring merge_collection(const ColoringCollection& col, const EssentialSelection& sel,
                                const PicodInstance& inst) {
    if (static_cast<int>(sel.essential.size()) != col.member_count())
        throw std::invalid_argument("selection must be parallel to the collection");
    const int P = col.member_count();
    const int k = col.fold();
    const int m = inst.message_count();

    std::vector<std::vector<int>> subsets(static_cast<size_t>(P));
    std::vector<char> covered(static_cast<size_t>(inst.receiver_count()), 0);
    int width_budget = 0;
    for (int p = 0; p < P; ++p) {
        if (col.member(p).vertex_count() != m)
            throw std::invalid_argument("collection domain does not match the instance");
        subsets[static_cast<size_t>(p)] =
            normalize_subset(sel.essential[static_cast<size_t>(p)], col.member(p).palette_size());
        const auto satisfied = edges_satisfied(col.member(p), subsets[static_cast<size_t>(p)], inst);
        for (int r : satisfied) covered[static_cast<size_t>(r)] = 1;
        if (!satisfied.empty()) width_budget += delta_of(col.member(p), subsets[static_cast<size_t>(p)], inst);
    }
    for (int r = 0; r < inst.receiver_count(); ++r)
        if (!covered[static_cast<size_t>(r)])
            throw std::invalid_argument("selection is not an essential cover: edge " +
                                        std::to_string(r) + " unsatisfied");

    const auto assignment = MergeSearch(col, subsets, inst, width_budget).run();
    if (!assignment)
        throw std::runtime_error("no merged coloring realizes the summed width bound for this selection");

    std::vector<int> offset(static_cast<size_t>(P), 0);
    int total = 0;
    for (int p = 0; p < P; ++p) {
        offset[static_cast<size_t>(p)] = total;
        total += static_cast<int>(subsets[static_cast<size_t>(p)].size());
    }
    std::vector<std::vector<int>> assign(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) {
        auto& slot = assign[static_cast<size_t>(v)];
        const int p = (*assignment)[static_cast<size_t>(v)];
        if (p < 0) {
            for (int j = 0; j < k; ++j) slot.push_back(total + j);  // fresh block
        } else {
            const auto& d = subsets[static_cast<size_t>(p)];
            for (int c : col.member(p).colors_of(v)) {
                const auto it = std::lower_bound(d.begin(), d.end(), c);
                slot.push_back(offset[static_cast<size_t>(p)] + static_cast<int>(it - d.begin()));
            }
        }
    }
    KFoldColoring merged(k, total + k, std::move(assign));
    std::vector<int> essential(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) essential[static_cast<size_t>(i)] = i;
    return MergedColoring{std::move(merged), std::move(essential)};
}

KFoldColoring remap_to_essential(const KFoldColoring& c, std::span<const int> subset) {
    const auto d = normalize_subset(subset, c.palette_size());
    const int k = c.fold();
    int overflow = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        int outside = 0;
        for (int col : c.colors_of(v))
            if (!std::binary_search(d.begin(), d.end(), col)) ++outside;
        overflow = std::max(overflow, outside);
    }
    const int base = static_cast<int>(d.size());
    std::vector<std::vector<int>> assign(static_cast<size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v) {
        auto& slot = assign[static_cast<size_t>(v)];
        int fresh = 0;
        for (int col : c.colors_of(v)) {
            const auto it = std::lower_bound(d.begin(), d.end(), col);
            if (it != d.end() && *it == col)
                slot.push_back(static_cast<int>(it - d.begin()));
            else
                slot.push_back(base + fresh++);
        }
    }
    return KFoldColoring(k, std::max(base + overflow, k), std::move(assign));
}

}  // namespace picod
