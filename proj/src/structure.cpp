#include "sge/structure.hpp"

#include <algorithm>

namespace sge {

namespace {

// closed neighborhood as a sorted vector
std::vector<Vertex> closed(const Graph& g, Vertex u) {
    auto nbrs = g.neighbors(u);
    std::vector<Vertex> out(nbrs.begin(), nbrs.end());
    out.insert(std::lower_bound(out.begin(), out.end(), u), u);
    return out;
}

}  // namespace

std::vector<Vertex> dominant_neighbors(const Graph& g, Vertex u) {
    if (!g.contains_vertex(u)) throw GraphError("vertex out of range");
    const auto nu = closed(g, u);
    std::vector<Vertex> out;
    for (Vertex v : g.neighbors(u)) {
        const auto nv = closed(g, v);
        if (std::includes(nv.begin(), nv.end(), nu.begin(), nu.end())) out.push_back(v);
    }
    return out;
}

std::vector<Edge> twins(const Graph& g) {
    std::vector<std::vector<Vertex>> cl(static_cast<size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) cl[static_cast<size_t>(u)] = closed(g, u);
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges())
        if (cl[static_cast<size_t>(u)] == cl[static_cast<size_t>(v)]) out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> simplicial_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nbrs = g.neighbors(u);
        bool clique = true;
        for (size_t i = 0; i < nbrs.size() && clique; ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.adjacent(nbrs[i], nbrs[j])) {
                    clique = false;
                    break;
                }
        if (clique) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> universal_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) == g.order() - 1) out.push_back(u);
    return out;
}

}  // namespace sge
