#pragma once

// Brute-force reference implementations the implementation under test is
// checked against. Everything here works on index-based adjacency matrices
// and deliberately avoids the library's BFS/Brandes code paths.

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace ssb::testing {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

using AdjMatrix = std::vector<std::vector<bool>>;

/// All-pairs shortest paths by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_warshall(const AdjMatrix& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) {
        dist[i][i] = 0;
        for (int j = 0; j < n; ++j) {
            if (adj[i][j]) dist[i][j] = 1;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (dist[i][k] + dist[k][j] < dist[i][j]) {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    return dist;
}

namespace detail {

// Enumerates every shortest s->t path by walking edges that step one unit
// closer to t; counts paths and, per node, the paths passing through it.
inline void enumerate_paths(const AdjMatrix& adj, const std::vector<std::vector<int>>& dist,
                            int current, int target, std::vector<int>& path,
                            long long& total, std::vector<long long>& through) {
    if (current == target) {
        ++total;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
        return;
    }
    const int n = static_cast<int>(adj.size());
    for (int next = 0; next < n; ++next) {
        if (!adj[current][next]) continue;
        if (dist[next][target] != dist[current][target] - 1) continue;
        path.push_back(next);
        enumerate_paths(adj, dist, next, target, path, total, through);
        path.pop_back();
    }
}

}  // namespace detail

/// Unnormalized undirected betweenness by exhaustive shortest-path
/// enumeration. Feasible up to ~12 nodes.
inline std::vector<double> brute_betweenness(const AdjMatrix& adj) {
    const int n = static_cast<int>(adj.size());
    auto dist = floyd_warshall(adj);
    std::vector<double> result(n, 0.0);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t || dist[s][t] >= kInf) continue;
            long long total = 0;
            std::vector<long long> through(n, 0);
            std::vector<int> path{s};
            detail::enumerate_paths(adj, dist, s, t, path, total, through);
            for (int v = 0; v < n; ++v) {
                if (v == s || v == t || total == 0) continue;
                result[v] += static_cast<double>(through[v]) / static_cast<double>(total);
            }
        }
    }
    for (double& v : result) v /= 2.0;  // ordered pairs counted twice
    return result;
}

/// Component-normalized closeness from a precomputed distance matrix.
/// `actor_count` overrides the population size when the matrix has rows
/// for ids that are not actually part of the network.
inline double brute_closeness(const std::vector<std::vector<int>>& dist, int id,
                              int actor_count = -1) {
    const int rows = static_cast<int>(dist.size());
    const int n = actor_count >= 0 ? actor_count : rows;
    if (n <= 1) return 0.0;
    long long sum = 0;
    int reachable = 0;
    for (int j = 0; j < rows; ++j) {
        if (dist[id][j] < kInf) {
            ++reachable;
            sum += dist[id][j];
        }
    }
    if (reachable <= 1) return 0.0;
    const double r_minus_1 = static_cast<double>(reachable - 1);
    return (r_minus_1 / static_cast<double>(sum)) * (r_minus_1 / static_cast<double>(n - 1));
}

}  // namespace ssb::testing
