#pragma once

#include <vector>

#include "sge/graph.hpp"

namespace sge {

// Neighbors v of u with N[u] ⊆ N[v]. Any shortest path through the edge uv
// must end at u, so such a u lies in every strong edge geodetic set.
std::vector<Vertex> dominant_neighbors(const Graph& g, Vertex u);

// Unordered pairs u < v with N[u] = N[v]; twins are necessarily adjacent.
std::vector<Edge> twins(const Graph& g);

// Vertices whose open neighborhood induces a clique. Their count s(G) is a
// lower bound for the strong edge geodetic number.
std::vector<Vertex> simplicial_vertices(const Graph& g);

// Vertices adjacent to everything else.
std::vector<Vertex> universal_vertices(const Graph& g);

}  // namespace sge
