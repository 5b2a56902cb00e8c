#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sge/graph.hpp"

namespace sge {

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major hop counts

    int at(Vertex u, Vertex v) const {
        return d[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
    }
};

// BFS-exact all-pairs hop distances.
DistanceMatrix all_pairs_distances(const Graph& g);

inline constexpr uint64_t kDefaultGeodesicCap = 1'000'000;

// Result of enumerate_geodesics. When the DAG-counted number of shortest
// paths exceeds the cap, paths stays empty and overflow is set; count is
// exact either way (saturating at UINT64_MAX).
struct GeodesicEnumeration {
    uint64_t count = 0;
    std::vector<Path> paths;
    bool overflow = false;
};

// All shortest u,v-paths in lexicographic order by vertex sequence.
GeodesicEnumeration enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                        uint64_t cap = kDefaultGeodesicCap);
GeodesicEnumeration enumerate_geodesics(const Graph& g, const DistanceMatrix& dm, Vertex u,
                                        Vertex v, uint64_t cap = kDefaultGeodesicCap);

// Lazily walks the shortest u,v-paths in lexicographic order. Used when a
// pair has too many geodesics to materialize; only the paths actually
// requested are built.
class GeodesicCursor {
public:
    GeodesicCursor(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to);
    std::optional<Path> next();

private:
    bool descend();

    const Graph& g_;
    const DistanceMatrix& dm_;
    Vertex to_;
    Path path_;
    std::vector<size_t> branch_;  // per-level index into neighbors()
    bool exhausted_ = false;
    bool fresh_ = true;
};

// Lazily walks shortest u,v-paths that traverse the edge a-b in that
// orientation (u ... a, b ... v). Yields nothing when no geodesic does.
class ThroughEdgeCursor {
public:
    ThroughEdgeCursor(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to, Vertex a,
                      Vertex b);
    std::optional<Path> next();

private:
    const Graph& g_;
    const DistanceMatrix& dm_;
    bool feasible_;
    GeodesicCursor head_;  // from -> a
    GeodesicCursor tail_;  // b -> to
    std::optional<Path> head_current_;
    std::unique_ptr<GeodesicCursor> tail_active_;
};

/// Per-graph cache of distances, per-source geodesic counts and materialized
/// path lists. One instance per worker; the underlying Graph stays shared.
class Geodesics {
public:
    explicit Geodesics(const Graph& g, uint64_t cap = kDefaultGeodesicCap);

    const Graph& graph() const { return g_; }
    const DistanceMatrix& distances() const { return dm_; }
    int distance(Vertex u, Vertex v) const { return dm_.at(u, v); }
    uint64_t cap() const { return cap_; }

    // Number of shortest u,v-paths (DAG dynamic programming, saturating).
    uint64_t count(Vertex u, Vertex v);

    // Number of shortest u,v-paths through the given edge (either direction).
    uint64_t count_through_edge(Vertex u, Vertex v, int edge_id);

    // Materialized lex-ordered path list, or nullptr when count(u,v) > cap.
    const std::vector<Path>* path_list(Vertex u, Vertex v);

private:
    const std::vector<uint64_t>& counts_from(Vertex s);

    const Graph& g_;
    DistanceMatrix dm_;
    uint64_t cap_;
    std::vector<std::vector<uint64_t>> count_rows_;  // per-source, lazily filled
    std::vector<char> count_row_ready_;
    struct ListEntry {
        bool overflow = false;
        std::vector<Path> paths;
    };
    std::vector<std::unique_ptr<ListEntry>> lists_;  // keyed by pair index u*n+v (u<v)
};

}  // namespace sge
