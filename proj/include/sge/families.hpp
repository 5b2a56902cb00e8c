#pragma once

#include <vector>

#include "sge/graph.hpp"

namespace sge {

Graph path_graph(int n);
Graph cycle_graph(int n);

// Tagged with provenance so the solver can seed upper bounds.
Graph complete_graph(int n);

// Parts X = 0..n-1 and Y = n..n+m-1; n, m >= 1, tagged.
Graph complete_bipartite(int n, int m);

// Parts laid out consecutively in the given order; k >= 2 parts, tagged.
Graph complete_multipartite(const std::vector<int>& parts);

// Vertex (a,b), a in g, b in h, serialized as a*order(h)+b. Adjacent when one
// coordinate is equal and the other is an edge.
Graph cartesian_product(const Graph& g, const Graph& h);

// P_n box K_m; path coordinate i and clique coordinate j (both 0-based) map
// to vertex i*m+j. n >= 1, m >= 1, tagged.
Graph prism_graph(int n, int m);

}  // namespace sge
