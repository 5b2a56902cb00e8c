#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "sge/families.hpp"
#include "sge/structure.hpp"

using namespace sge;

namespace {

std::vector<Vertex> closed(const Graph& g, Vertex u) {
    std::vector<Vertex> out(g.neighbors(u).begin(), g.neighbors(u).end());
    out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("dominant neighbors in small graphs") {
    const Graph k4 = complete_graph(4);
    CHECK(dominant_neighbors(k4, 0) == std::vector<Vertex>{1, 2, 3});

    const Graph p3 = path_graph(3);
    CHECK(dominant_neighbors(p3, 0) == std::vector<Vertex>{1});
    CHECK(dominant_neighbors(p3, 1).empty());

    const Graph c4 = cycle_graph(4);
    for (Vertex u = 0; u < 4; ++u) CHECK(dominant_neighbors(c4, u).empty());

    CHECK_THROWS_AS(dominant_neighbors(c4, 4), GraphError);
}

TEST_CASE("dominant neighbor definition holds by recomputation") {
    const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : dominant_neighbors(g, u)) {
            CHECK(g.adjacent(u, v));
            const auto nu = closed(g, u);
            const auto nv = closed(g, v);
            CHECK(std::includes(nv.begin(), nv.end(), nu.begin(), nu.end()));
        }
}

TEST_CASE("twins are mutual dominant neighbors") {
    const Graph k4 = complete_graph(4);
    CHECK(twins(k4).size() == 6);  // all pairs

    const Graph c4 = cycle_graph(4);
    CHECK(twins(c4).empty());

    // two adjacent vertices sharing the same third neighbor
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(twins(g) == std::vector<Edge>{{0, 1}});

    for (const Graph& h : {k4, c4, g})
        for (Vertex u = 0; u < h.order(); ++u)
            for (Vertex v = u + 1; v < h.order(); ++v) {
                const auto tw = twins(h);
                const bool is_twin = std::find(tw.begin(), tw.end(), Edge{u, v}) != tw.end();
                const auto du = dominant_neighbors(h, u);
                const auto dv = dominant_neighbors(h, v);
                const bool mutual =
                    std::find(du.begin(), du.end(), v) != du.end() &&
                    std::find(dv.begin(), dv.end(), u) != dv.end();
                CHECK(is_twin == mutual);
            }
}

TEST_CASE("simplicial vertices") {
    const Graph k5 = complete_graph(5);
    CHECK(simplicial_vertices(k5).size() == 5);

    const Graph c4 = cycle_graph(4);
    CHECK(simplicial_vertices(c4).empty());

    const Graph p3 = path_graph(3);
    CHECK(simplicial_vertices(p3) == std::vector<Vertex>{0, 2});
}

TEST_CASE("every simplicial vertex has a dominant neighbor") {
    const Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                                          {4, 5}, {5, 6}});
    for (Vertex u : simplicial_vertices(g)) {
        CHECK(g.degree(u) >= 1);
        CHECK_FALSE(dominant_neighbors(g, u).empty());
    }
}

TEST_CASE("universal vertices") {
    const Graph star = complete_bipartite(4, 1);  // center is vertex 4
    CHECK(universal_vertices(star) == std::vector<Vertex>{4});

    const Graph k3 = complete_graph(3);
    CHECK(universal_vertices(k3) == std::vector<Vertex>{0, 1, 2});

    const Graph c5 = cycle_graph(5);
    CHECK(universal_vertices(c5).empty());
}
