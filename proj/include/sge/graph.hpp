#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sge/errors.hpp"

namespace sge {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored normalized, first < second
using Path = std::vector<Vertex>;

enum class DuplicatePolicy { Dedupe, Reject };

// Set by the family generators so the solver can recognize instances it has
// closed-form constructions for. Plain cartesian products and hand-built
// graphs carry no tag.
struct Provenance {
    enum class Family { Complete, CompleteBipartite, CompleteMultipartite, PathTimesComplete };
    Family family;
    std::vector<int> params;
};

/// Simple undirected connected graph on vertices 0..n-1 with an edge index
/// (a bijection from the edge set onto 0..m-1, used for bitset edge covers).
/// Immutable after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates, normalizes and deduplicates the edge list, then checks
    // connectivity. Throws GraphError on loops, out-of-range endpoints,
    // duplicates (in Reject mode) or a disconnected input.
    static Graph from_edges(int n, std::span<const Edge> edges,
                            DuplicatePolicy dup = DuplicatePolicy::Dedupe);
    static Graph from_edges(int n, std::initializer_list<Edge> edges,
                            DuplicatePolicy dup = DuplicatePolicy::Dedupe);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex u) const { return adj_[static_cast<size_t>(u)]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }

    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

    // Index of edge {u,v} in 0..m-1, or -1 when the edge is absent.
    int edge_id(Vertex u, Vertex v) const {
        return edge_id_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
    }

    Edge edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    std::span<const Edge> edges() const { return edges_; }

    bool contains_vertex(Vertex u) const { return u >= 0 && u < n_; }

    const std::optional<Provenance>& provenance() const { return provenance_; }
    void set_provenance(Provenance p) { provenance_ = std::move(p); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;               // sorted lexicographically, u < v
    std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
    std::vector<int> edge_id_;              // n*n lookup, -1 = non-edge
    std::optional<Provenance> provenance_;
};

}  // namespace sge
