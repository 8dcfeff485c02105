#include "ssb/social_graph.hpp"

#include <deque>
#include <queue>

#include "ssb/error.hpp"

namespace ssb {

void SocialGraph::add_actor(const Key& id) {
    adjacency_.try_emplace(id);
}

void SocialGraph::add_collaboration(const CollaborationEdge& edge) {
    if (edge.a == edge.b) {
        throw Error(ErrorCode::SelfLoop, "self-loop on actor " + edge.a.str());
    }
    auto a = adjacency_.find(edge.a);
    auto b = adjacency_.find(edge.b);
    if (a == adjacency_.end()) {
        throw Error(ErrorCode::UnknownActor, "unknown actor " + edge.a.str());
    }
    if (b == adjacency_.end()) {
        throw Error(ErrorCode::UnknownActor, "unknown actor " + edge.b.str());
    }
    a->second[edge.b] = edge.weight;
    b->second[edge.a] = edge.weight;
}

std::size_t SocialGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [id, nbrs] : adjacency_) twice += nbrs.size();
    return twice / 2;
}

std::vector<Key> SocialGraph::actors() const {
    std::vector<Key> out;
    out.reserve(adjacency_.size());
    for (const auto& [id, nbrs] : adjacency_) out.push_back(id);
    return out;
}

std::vector<CollaborationEdge> SocialGraph::edges() const {
    std::vector<CollaborationEdge> out;
    for (const auto& [id, nbrs] : adjacency_) {
        for (const auto& [nbr, weight] : nbrs) {
            if (id < nbr) out.push_back(CollaborationEdge{id, nbr, weight});
        }
    }
    return out;
}

std::vector<Key> SocialGraph::neighbors(const Key& id) const {
    const auto& nbrs = adjacency_of(id);
    std::vector<Key> out;
    out.reserve(nbrs.size());
    for (const auto& [nbr, weight] : nbrs) out.push_back(nbr);
    return out;
}

const std::map<Key, double>& SocialGraph::adjacency_of(const Key& id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) {
        throw Error(ErrorCode::UnknownActor, "unknown actor " + id.str());
    }
    return it->second;
}

Distance SocialGraph::hop_distance(const Key& src, const Key& dst) const {
    adjacency_of(dst);  // both endpoints must exist
    if (src == dst) {
        adjacency_of(src);
        return 0;
    }
    std::map<Key, int> dist;
    dist[src] = 0;
    std::deque<Key> queue{src};
    adjacency_of(src);
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        int d = dist[cur];
        for (const auto& [nbr, weight] : adjacency_.at(cur)) {
            if (dist.contains(nbr)) continue;
            if (nbr == dst) return d + 1;
            dist[nbr] = d + 1;
            queue.push_back(nbr);
        }
    }
    return std::nullopt;
}

std::set<Key> SocialGraph::within_hops(const Key& src, int k) const {
    adjacency_of(src);
    std::map<Key, int> dist;
    dist[src] = 0;
    std::deque<Key> queue{src};
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        int d = dist[cur];
        if (d == k) continue;
        for (const auto& [nbr, weight] : adjacency_.at(cur)) {
            if (dist.contains(nbr)) continue;
            dist[nbr] = d + 1;
            queue.push_back(nbr);
        }
    }
    std::set<Key> out;
    for (const auto& [id, d] : dist) out.insert(id);
    return out;
}

int SocialGraph::degree(const Key& id) const {
    return static_cast<int>(adjacency_of(id).size());
}

double SocialGraph::closeness(const Key& id) const {
    adjacency_of(id);
    const std::size_t n = adjacency_.size();
    if (n <= 1) return 0.0;

    // single-source BFS
    std::map<Key, int> dist;
    dist[id] = 0;
    std::deque<Key> queue{id};
    long long sum = 0;
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        for (const auto& [nbr, weight] : adjacency_.at(cur)) {
            if (dist.contains(nbr)) continue;
            dist[nbr] = dist[cur] + 1;
            sum += dist[nbr];
            queue.push_back(nbr);
        }
    }
    const std::size_t reachable = dist.size();  // includes id
    if (reachable <= 1) return 0.0;
    const double r_minus_1 = static_cast<double>(reachable - 1);
    return (r_minus_1 / static_cast<double>(sum)) * (r_minus_1 / static_cast<double>(n - 1));
}

double SocialGraph::betweenness(const Key& id) const {
    adjacency_of(id);
    return betweenness_all().at(id);
}

std::map<Key, double> SocialGraph::betweenness_all() const {
    // Brandes (2001): one BFS + dependency accumulation per source.
    std::map<Key, double> centrality;
    for (const auto& [id, nbrs] : adjacency_) centrality[id] = 0.0;

    for (const auto& [source, src_nbrs] : adjacency_) {
        std::vector<Key> order;  // nodes in non-decreasing distance
        std::map<Key, std::vector<Key>> predecessors;
        std::map<Key, double> sigma;  // shortest-path counts
        std::map<Key, int> dist;

        sigma[source] = 1.0;
        dist[source] = 0;
        std::deque<Key> queue{source};
        while (!queue.empty()) {
            Key v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const auto& [w, weight] : adjacency_.at(v)) {
                if (!dist.contains(w)) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    predecessors[w].push_back(v);
                }
            }
        }

        std::map<Key, double> delta;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Key& w = *it;
            for (const Key& v : predecessors[w]) {
                delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w]);
            }
            if (w != source) centrality[w] += delta[w];
        }
    }
    // Each undirected pair was counted from both endpoints.
    for (auto& [id, value] : centrality) value /= 2.0;
    return centrality;
}

}  // namespace ssb
