#pragma once

#include <vector>

#include "sge/graph.hpp"

namespace sge {

// One assigned geodesic; endpoints u < v, path runs from u to v.
struct PairPath {
    Vertex u = 0;
    Vertex v = 0;
    Path path;

    friend bool operator==(const PairPath&, const PairPath&) = default;
};

// A candidate certificate: the vertex set and at most one geodesic per
// unordered pair of it. Pairs without an assigned path are simply absent.
// Canonical form keeps `set` ascending and `paths` sorted by (u, v).
struct Witness {
    std::vector<Vertex> set;
    std::vector<PairPath> paths;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// Sorts `set` and `paths` into canonical order and flips any path stored
// against its pair orientation (endpoints decide; the path reverses so it
// still runs u -> v).
void canonicalize(Witness& w);

}  // namespace sge
