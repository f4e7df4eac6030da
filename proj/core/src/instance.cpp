#include "picod/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "picod/rng.hpp"

namespace picod {

PicodInstance::PicodInstance(int message_count, std::vector<std::vector<int>> request_sets)
    : m_(message_count), edges_(std::move(request_sets)) {
    if (m_ < 0) throw std::invalid_argument("message count must be nonnegative");
    for (size_t r = 0; r < edges_.size(); ++r) {
        auto& e = edges_[r];
        if (e.empty())
            throw std::invalid_argument("empty edge at index " + std::to_string(r));
        for (int v : e) {
            if (v < 0 || v >= m_)
                throw std::invalid_argument("edge " + std::to_string(r) + ": label " +
                                            std::to_string(v) + " out of range [0, " +
                                            std::to_string(m_) + ")");
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
}

namespace {

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

IntersectionProfile intersection_profile(const PicodInstance& inst) {
    const auto& edges = inst.request_sets();
    const int n = inst.receiver_count();
    IntersectionProfile p;
    p.per_edge_degree.assign(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            if (sorted_intersects(edges[static_cast<size_t>(r)], edges[static_cast<size_t>(s)])) {
                ++p.per_edge_degree[static_cast<size_t>(r)];
                ++p.per_edge_degree[static_cast<size_t>(s)];
            }
        }
    }
    p.gamma = 0;
    for (int d : p.per_edge_degree) p.gamma = std::max(p.gamma, d);
    p.min_edge_size = n == 0 ? 0 : static_cast<int>(edges.front().size());
    p.max_edge_size = 0;
    for (const auto& e : edges) {
        p.min_edge_size = std::min(p.min_edge_size, static_cast<int>(e.size()));
        p.max_edge_size = std::max(p.max_edge_size, static_cast<int>(e.size()));
    }
    if (static_cast<double>(p.gamma) > std::exp(1.0)) {
        const double kappa = 2.0 * std::log(static_cast<double>(p.gamma)) - 1.0;
        p.kappa = kappa;
        // i runs to P = ceil(ln kappa), extended if needed so that the last
        // range [k_P/2, k_P) still reaches size-1 edges (kappa/2^(P+1) <= 1).
        int P = static_cast<int>(std::ceil(std::log(kappa)));
        P = std::max(P, 0);
        while (kappa / std::pow(2.0, P + 1) > 1.0) ++P;
        for (int i = 0; i <= P; ++i) p.bucket_thresholds.push_back(kappa / std::pow(2.0, i));
    }
    return p;
}

PicodInstance complete_two_uniform(int m) {
    if (m < 2) throw std::invalid_argument("complete_two_uniform requires m >= 2");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
    return PicodInstance(m, std::move(edges));
}

PicodInstance random_instance(int m, int n, int min_size, int max_size, std::uint64_t seed) {
    if (m < 1 || n < 0) throw std::invalid_argument("need m >= 1 and n >= 0");
    if (min_size < 1 || min_size > max_size || max_size > m)
        throw std::invalid_argument("edge size range must satisfy 1 <= min <= max <= m");
    Rng rng(seed);
    std::vector<int> pool(static_cast<size_t>(m));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        const int s = rng.uniform_int(min_size, max_size);
        // partial Fisher-Yates: first s entries of pool become the edge
        for (int i = 0; i < s; ++i) {
            const int j = rng.uniform_int(i, m - 1);
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        }
        edges.emplace_back(pool.begin(), pool.begin() + s);
    }
    return PicodInstance(m, std::move(edges));
}

PicodInstance clustered_instance(int gamma, int clusters, int edge_size, std::uint64_t seed) {
    if (gamma < 1 || clusters < 1 || edge_size < 2)
        throw std::invalid_argument("need gamma >= 1, clusters >= 1, edge_size >= 2");
    const int per_cluster = gamma + 1;
    const int m = clusters * (1 + per_cluster * (edge_size - 1));
    Rng rng(seed);
    std::vector<int> label(static_cast<size_t>(m));
    std::iota(label.begin(), label.end(), 0);
    for (int i = m - 1; i > 0; --i)
        std::swap(label[static_cast<size_t>(i)], label[static_cast<size_t>(rng.uniform_int(0, i))]);
    std::vector<std::vector<int>> edges;
    int next = 0;
    for (int c = 0; c < clusters; ++c) {
        const int hub = next++;
        for (int e = 0; e < per_cluster; ++e) {
            std::vector<int> edge{label[static_cast<size_t>(hub)]};
            for (int v = 1; v < edge_size; ++v) edge.push_back(label[static_cast<size_t>(next++)]);
            edges.push_back(std::move(edge));
        }
    }
    for (size_t i = edges.size() - 1; i > 0; --i)
        std::swap(edges[i], edges[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(i)))]);
    return PicodInstance(m, std::move(edges));
}

PicodInstance named_instance(std::string_view name) {
    if (name == "pentagon") {
        return PicodInstance(5, {{0, 2}, {1, 4}, {1, 3}, {2, 4}, {0, 3}});
    }
    if (name == "ex2") {
        return PicodInstance(8, {{0, 1, 3, 5},
                                 {0, 1, 2, 4},
                                 {1, 2, 3, 6},
                                 {0, 2, 3, 7},
                                 {1, 4, 5, 6},
                                 {0, 4, 5, 7},
                                 {2, 4, 6, 7},
                                 {3, 5, 6, 7}});
    }
    if (name == "ex3") {
        return complete_two_uniform(10);
    }
    throw std::invalid_argument("unknown instance name: " + std::string(name));
}

}  // namespace picod
