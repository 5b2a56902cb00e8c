#include "sge/families.hpp"

#include <numeric>

namespace sge {

Graph path_graph(int n) {
    if (n < 1) throw GraphError("path graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle graph needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw GraphError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    g.set_provenance({Provenance::Family::Complete, {n}});
    return g;
}

Graph complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw GraphError("complete bipartite parts must be nonempty");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < m; ++y) edges.emplace_back(x, n + y);
    Graph g = Graph::from_edges(n + m, edges);
    g.set_provenance({Provenance::Family::CompleteBipartite, {n, m}});
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw GraphError("complete multipartite needs at least two parts");
    for (int p : parts)
        if (p < 1) throw GraphError("complete multipartite parts must be nonempty");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> start(parts.size() + 1, 0);
    for (size_t i = 0; i < parts.size(); ++i) start[i + 1] = start[i] + parts[i];
    std::vector<Edge> edges;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (Vertex u = start[i]; u < start[i + 1]; ++u)
                for (Vertex v = start[j]; v < start[j + 1]; ++v) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    g.set_provenance({Provenance::Family::CompleteMultipartite, parts});
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(ng) * static_cast<size_t>(h.size()) +
                  static_cast<size_t>(nh) * static_cast<size_t>(g.size()));
    for (Vertex a = 0; a < ng; ++a)
        for (const auto& [b1, b2] : h.edges()) edges.emplace_back(a * nh + b1, a * nh + b2);
    for (const auto& [a1, a2] : g.edges())
        for (Vertex b = 0; b < nh; ++b) edges.emplace_back(a1 * nh + b, a2 * nh + b);
    return Graph::from_edges(ng * nh, edges);
}

Graph prism_graph(int n, int m) {
    if (n < 1 || m < 1) throw GraphError("prism factors need at least one vertex each");
    Graph g = cartesian_product(path_graph(n), complete_graph(m));
    g.set_provenance({Provenance::Family::PathTimesComplete, {n, m}});
    return g;
}

}  // namespace sge
