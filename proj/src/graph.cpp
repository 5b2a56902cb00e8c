#include "sge/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sge {

Graph Graph::from_edges(int n, std::span<const Edge> edges, DuplicatePolicy dup) {
    if (n <= 0) throw GraphError("graph order must be positive, got " + std::to_string(n));

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto last = std::unique(g.edges_.begin(), g.edges_.end());
    if (last != g.edges_.end()) {
        if (dup == DuplicatePolicy::Reject)
            throw GraphError("duplicate edge (" + std::to_string(last->first) + ", " +
                             std::to_string(last->second) + ")");
        g.edges_.erase(last, g.edges_.end());
    }

    g.adj_.assign(static_cast<size_t>(n), {});
    g.edge_id_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
        auto [u, v] = g.edges_[static_cast<size_t>(id)];
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
        g.edge_id_[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = id;
        g.edge_id_[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = id;
    }
    for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());

    // connectivity check (BFS from 0)
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.adj_[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) throw GraphError("graph is disconnected (" + std::to_string(reached) + " of " +
                                       std::to_string(n) + " vertices reachable from 0)");
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges, DuplicatePolicy dup) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), dup);
}

}  // namespace sge
