#include "picod/collection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "picod/rng.hpp"

namespace picod {

ColoringCollection::ColoringCollection(int fold) : k_(fold) {
    if (fold < 1) throw std::invalid_argument("fold must be >= 1");
}

ColoringCollection::ColoringCollection(std::vector<KFoldColoring> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("use ColoringCollection(fold) for an empty collection");
    k_ = members_.front().fold();
    for (const auto& c : members_) {
        if (c.fold() != k_) throw std::invalid_argument("collection members must share the fold");
        if (c.vertex_count() != members_.front().vertex_count())
            throw std::invalid_argument("collection members must share the vertex domain");
    }
}

int ColoringCollection::total_colors() const {
    int total = 0;
    for (const auto& c : members_) total += c.palette_size();
    return total;
}

bool is_cf_collection(const ColoringCollection& col, const PicodInstance& inst) {
    for (const auto& c : col.members())
        if (c.vertex_count() != inst.message_count())
            throw std::invalid_argument("collection domain does not match the instance");
    for (const auto& e : inst.request_sets()) {
        bool covered = false;
        for (const auto& c : col.members())
            if (is_cf_for_edge(c, e)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

ColoringCollection binary_collection(int m) {
    if (m < 2) throw std::invalid_argument("binary_collection requires m >= 2");
    int bits = 0;
    while ((1 << bits) < m) ++bits;
    bits = std::max(bits, 1);
    std::vector<KFoldColoring> members;
    members.reserve(static_cast<size_t>(bits));
    for (int p = 0; p < bits; ++p) {
        std::vector<std::vector<int>> assign(static_cast<size_t>(m));
        for (int v = 0; v < m; ++v) assign[static_cast<size_t>(v)] = {(v >> p) & 1};
        members.emplace_back(1, 2, std::move(assign));
    }
    return ColoringCollection(std::move(members));
}

namespace {

PicodInstance sub_instance(const PicodInstance& inst, unsigned mask) {
    std::vector<std::vector<int>> edges;
    for (int r = 0; r < inst.receiver_count(); ++r)
        if (mask >> r & 1u) edges.push_back(inst.request_set(r));
    return PicodInstance(inst.message_count(), std::move(edges));
}

}  // namespace

std::optional<AlphaResult> exact_alpha_cf(const PicodInstance& inst, int k, int budget) {
    const int n = inst.receiver_count();
    if (n > 14) throw std::invalid_argument("exact_alpha_cf handles at most 14 edges");
    if (n == 0) return AlphaResult{0, ColoringCollection(k)};

    // alpha equals the cheapest partition of the edge set into groups, each
    // paying the exact chromatic number of its sub-instance: any covering
    // collection induces such a partition, and any partition yields a cover.
    const unsigned full = (1u << n) - 1;
    const int chi_cap = inst.message_count() * k;
    std::vector<int> chi(full + 1, -1);
    std::vector<int> best(full + 1, -1), part(full + 1, 0);
    best[0] = 0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        const unsigned low = mask & (~mask + 1);
        int best_cost = -1, best_part = 0;
        for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;  // the lowest edge fixes its group
            if (chi[sub] < 0) {
                auto r = exact_chi_cf(sub_instance(inst, sub), k, chi_cap);
                chi[sub] = r ? r->colors : chi_cap + 1;
            }
            const int rest = best[mask & ~sub];
            if (rest < 0) continue;
            const int cost = chi[sub] + rest;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best_part = static_cast<int>(sub);
            }
        }
        best[mask] = best_cost;
        part[mask] = best_part;
    }
    if (best[full] < 0 || best[full] > budget) return std::nullopt;

    std::vector<KFoldColoring> members;
    for (unsigned mask = full; mask;) {
        const unsigned sub = static_cast<unsigned>(part[mask]);
        auto r = exact_chi_cf(sub_instance(inst, sub), k, chi_cap);
        members.push_back(std::move(r->witness));
        mask &= ~sub;
    }
    return AlphaResult{best[full], ColoringCollection(std::move(members))};
}

KFoldColoring random_round_coloring(int vertices, double q, std::uint64_t seed) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("probability must lie in (0, 1)");
    Rng rng(seed);
    std::vector<std::vector<int>> assign(static_cast<size_t>(vertices));
    for (int v = 0; v < vertices; ++v) assign[static_cast<size_t>(v)] = {rng.uniform01() < q ? 0 : 1};
    return KFoldColoring(1, 2, std::move(assign));
}

BucketDecomposition bucket_decomposition(const PicodInstance& inst) {
    const auto profile = intersection_profile(inst);
    if (!profile.kappa)
        throw std::domain_error("incidence degree too small (gamma <= e); use a direct coloring");
    BucketDecomposition out;
    out.kappa = *profile.kappa;
    out.buckets.reserve(profile.bucket_thresholds.size());
    for (double t : profile.bucket_thresholds) out.buckets.push_back({t, {}});
    for (int r = 0; r < inst.receiver_count(); ++r) {
        const double size = static_cast<double>(inst.request_set(r).size());
        if (size >= out.kappa) {
            out.large_edges.push_back(r);
            continue;
        }
        bool placed = false;
        for (auto& bucket : out.buckets) {
            if (size >= bucket.threshold / 2.0 && size < bucket.threshold) {
                bucket.edge_indices.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("edge " + std::to_string(r) + " escaped the size partition");
    }
    return out;
}

resample_cap_error::resample_cap_error(long attempts_)
    : std::runtime_error("resampling cap exceeded after " + std::to_string(attempts_) +
                         " attempts; the incidence bound may be mis-estimated"),
      attempts(attempts_) {}

namespace {

long default_cap(size_t edge_count, int gamma) {
    const double lg = std::log(std::max(gamma, 2));
    return 10L * static_cast<long>(std::max<size_t>(edge_count, 1)) *
           static_cast<long>(std::ceil(lg + 1.0));
}

bool edge_cf_under(const std::vector<int>& colors, const std::vector<int>& edge) {
    if (edge.size() <= 1) return true;
    for (int v : edge) {
        bool unique = true;
        for (int u : edge)
            if (u != v && colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)]) {
                unique = false;
                break;
            }
        if (unique) return true;
    }
    return false;
}

}  // namespace

BucketCover bucket_cover(const std::vector<std::vector<int>>& edges, int vertex_count,
                         double threshold, int gamma, std::uint64_t seed, long cap) {
    BucketCover out;
    if (edges.empty()) return out;
    if (static_cast<double>(gamma) <= std::exp(1.0))
        throw std::invalid_argument("bucket_cover requires gamma > e");
    if (threshold <= 1.0) throw std::invalid_argument("bucket threshold must exceed 1");
    for (const auto& e : edges) {
        const double s = static_cast<double>(e.size());
        if (s < threshold / 2.0 || s >= threshold)
            throw std::invalid_argument("edge size outside [threshold/2, threshold)");
        for (int v : e)
            if (v < 0 || v >= vertex_count) throw std::invalid_argument("edge vertex out of range");
    }

    const double lg = std::log(static_cast<double>(gamma));
    const int rounds = static_cast<int>(std::ceil(5.0 * threshold * lg));
    const double q = 1.0 / threshold;
    if (cap <= 0) cap = default_cap(edges.size(), gamma);

    Rng rng(seed);
    // colors[t][v]: round t's color of vertex v
    std::vector<std::vector<int>> colors(static_cast<size_t>(rounds),
                                         std::vector<int>(static_cast<size_t>(vertex_count), 1));
    auto draw_vertex = [&](int v) {
        for (auto& round : colors) round[static_cast<size_t>(v)] = rng.uniform01() < q ? 0 : 1;
    };
    for (int v = 0; v < vertex_count; ++v) draw_vertex(v);

    auto covered = [&](const std::vector<int>& e) {
        for (const auto& round : colors)
            if (edge_cf_under(round, e)) return true;
        return false;
    };

    for (;;) {
        int violated = -1;
        for (size_t i = 0; i < edges.size(); ++i)
            if (!covered(edges[i])) {
                violated = static_cast<int>(i);
                break;
            }
        if (violated < 0) break;
        if (out.attempts >= cap) throw resample_cap_error(out.attempts);
        ++out.attempts;
        for (int v : edges[static_cast<size_t>(violated)]) draw_vertex(v);
    }

    out.rounds.reserve(static_cast<size_t>(rounds));
    for (const auto& round : colors) {
        std::vector<std::vector<int>> assign(static_cast<size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v) assign[static_cast<size_t>(v)] = {round[static_cast<size_t>(v)]};
        out.rounds.emplace_back(1, 2, std::move(assign));
    }
    return out;
}

namespace {

// Verified random coloring of the large-size part, palette per the
// O(t * gamma^(1/t) * log gamma) conflict-free chromatic bound.
KFoldColoring large_part_coloring(const PicodInstance& inst, const std::vector<int>& edge_indices,
                                  int gamma, double scale, std::uint64_t seed, long cap,
                                  long& attempts) {
    const int m = inst.message_count();
    const double lg = std::log(static_cast<double>(gamma));
    const int t = std::max(1, static_cast<int>(std::ceil(lg)));
    const int palette = std::max(
        2, static_cast<int>(std::ceil(scale * t * std::pow(static_cast<double>(gamma), 1.0 / t) * lg)));
    if (cap <= 0) cap = default_cap(edge_indices.size(), gamma);

    Rng rng(seed);
    std::vector<int> colors(static_cast<size_t>(m));
    for (auto& c : colors) c = rng.uniform_int(0, palette - 1);

    for (;;) {
        int violated = -1;
        for (int r : edge_indices)
            if (!edge_cf_under(colors, inst.request_set(r))) {
                violated = r;
                break;
            }
        if (violated < 0) break;
        if (attempts >= cap) throw resample_cap_error(attempts);
        ++attempts;
        for (int v : inst.request_set(violated)) colors[static_cast<size_t>(v)] = rng.uniform_int(0, palette - 1);
    }

    std::vector<std::vector<int>> assign(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) assign[static_cast<size_t>(v)] = {colors[static_cast<size_t>(v)]};
    return KFoldColoring(1, palette, std::move(assign));
}

}  // namespace

Log2Build build_log2_collection(const PicodInstance& inst, std::uint64_t seed,
                                const Log2Options& options) {
    Log2Build out;
    const auto profile = intersection_profile(inst);
    if (!profile.kappa) {
        out.fallback = true;
        out.collection = ColoringCollection({greedy_cf_coloring(inst, seed)});
        return out;
    }
    const int gamma = profile.gamma;
    const auto decomposition = bucket_decomposition(inst);

    std::vector<KFoldColoring> members;
    if (!decomposition.large_edges.empty()) {
        members.push_back(large_part_coloring(inst, decomposition.large_edges, gamma,
                                              options.large_budget_scale, Rng::derive(seed, 0),
                                              options.cap, out.attempts));
    }
    std::uint64_t salt = 1;
    for (const auto& bucket : decomposition.buckets) {
        if (bucket.edge_indices.empty()) {
            ++salt;
            continue;
        }
        std::vector<std::vector<int>> edges;
        edges.reserve(bucket.edge_indices.size());
        for (int r : bucket.edge_indices) edges.push_back(inst.request_set(r));
        auto cover = bucket_cover(edges, inst.message_count(), bucket.threshold, gamma,
                                  Rng::derive(seed, salt++), options.cap);
        out.attempts += cover.attempts;
        for (auto& round : cover.rounds) members.push_back(std::move(round));
    }

    out.collection = members.empty() ? ColoringCollection(1) : ColoringCollection(std::move(members));
    if (!is_cf_collection(out.collection, inst))
        throw std::logic_error("constructed collection failed verification");
    return out;
}

}  // namespace picod
