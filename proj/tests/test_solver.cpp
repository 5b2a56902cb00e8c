#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "sge/families.hpp"
#include "sge/solver.hpp"

using namespace sge;

namespace {

std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n = 2; n <= 7; ++n) out.push_back(path_graph(n));
    for (int n = 3; n <= 7; ++n) out.push_back(cycle_graph(n));
    for (int n = 2; n <= 5; ++n) out.push_back(complete_graph(n));
    out.push_back(complete_bipartite(1, 4));
    out.push_back(complete_bipartite(2, 2));
    out.push_back(complete_bipartite(2, 3));
    out.push_back(complete_bipartite(3, 3));
    out.push_back(complete_multipartite({1, 1, 2}));
    out.push_back(complete_multipartite({2, 2, 2}));
    out.push_back(prism_graph(2, 3));
    out.push_back(cartesian_product(path_graph(3), path_graph(2)));
    return out;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        try {
            return Graph::from_edges(n, edges);
        } catch (const GraphError&) {  // disconnected draw, resample
        }
    }
}

bool colex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<std::vector<Vertex>> k_subsets_colex(int n, int k) {
    std::vector<std::vector<Vertex>> subs;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subs.push_back(cur);
            return;
        }
        for (Vertex v = next; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(subs.begin(), subs.end(), colex_less);
    return subs;
}

}  // namespace

TEST_CASE("forced vertices on named graphs") {
    CHECK(forced_vertices(path_graph(3)) == std::vector<Vertex>{0, 2});
    CHECK(forced_vertices(complete_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(forced_vertices(cycle_graph(4)).empty());
    CHECK(forced_vertices(cycle_graph(5)).empty());
    CHECK(forced_vertices(complete_bipartite(1, 4)) == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("lower bound on named graphs") {
    CHECK(lower_bound(complete_graph(1)) == 0);
    CHECK(lower_bound(path_graph(4)) == 2);
    CHECK(lower_bound(cycle_graph(6)) == 2);
    CHECK(lower_bound(complete_graph(5)) == 5);
    CHECK(lower_bound(complete_bipartite(1, 4)) == 4);  // universal center
}

TEST_CASE("every vertex dominated iff the whole vertex set is needed") {
    for (int n = 2; n <= 5; ++n) CHECK(sge_equals_n(complete_graph(n)));
    CHECK(sge_equals_n(complete_multipartite({1, 1, 2})));  // two universal vertices
    CHECK_FALSE(sge_equals_n(cycle_graph(5)));
    CHECK_FALSE(sge_equals_n(path_graph(3)));
}

TEST_CASE("oracle values on named graphs") {
    const SgeResult p4 = sge_oracle(path_graph(4));
    CHECK(p4.value == 2);
    CHECK(p4.optimal_set == std::vector<Vertex>{0, 3});
    CHECK(p4.lower_bound_used == 0);
    CHECK(validate_witness(path_graph(4), p4.witness).valid);

    CHECK(sge_oracle(cycle_graph(5)).value == 3);
    CHECK(sge_oracle(complete_bipartite(2, 2)).value == 3);
    CHECK(sge_oracle(complete_graph(4)).value == 4);
    CHECK(sge_oracle(complete_bipartite(2, 3)).value == 4);
    CHECK(sge_oracle(complete_graph(1)).value == 0);
}

TEST_CASE("oracle refuses graphs above its guard") {
    CHECK_THROWS_AS(sge_oracle(complete_graph(11)), InstanceTooLargeError);
    CHECK(sge_oracle(path_graph(11), 11).value == 2);  // raised guard admits the graph
    CHECK_THROWS_AS(sge_oracle(path_graph(5), 4), InstanceTooLargeError);
}

TEST_CASE("naive decision handles edge cases") {
    const Graph g = cycle_graph(4);
    Geodesics geo(g);
    const std::vector<Vertex> dup{0, 0, 1, 3, 3};
    CHECK(naive_is_seg(g, dup, geo));
    const std::vector<Vertex> foreign{0, 9};
    CHECK_THROWS_AS(naive_is_seg(g, foreign, geo), GraphError);

    uint64_t nodes = 0;
    Witness w;
    CHECK(naive_is_seg(g, std::vector<Vertex>{0, 1, 3}, geo, &w, &nodes));
    CHECK(nodes > 0);
    CHECK(validate_witness(g, w).valid);
}

TEST_CASE("naive decision refuses when edge bits do not fit") {
    const Graph g = complete_graph(12);  // 66 edges
    Geodesics geo(g);
    std::vector<Vertex> all(12);
    std::iota(all.begin(), all.end(), 0);
    CHECK_THROWS_AS(naive_is_seg(g, all, geo), InstanceTooLargeError);
}

TEST_CASE("pruned decision agrees with the naive one on every subset") {
    for (const Graph& g : {cycle_graph(5), complete_bipartite(2, 3), path_graph(5),
                           complete_multipartite({1, 1, 2}), prism_graph(2, 3)}) {
        Geodesics geo(g);
        const int n = g.order();
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<Vertex> X;
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) X.push_back(v);
            const bool naive = naive_is_seg(g, X, geo);
            const SegDecision pruned = is_strong_edge_geodetic(g, X, kDefaultBudget, &geo);
            REQUIRE(pruned.answer != Ternary::Unknown);
            CAPTURE(n);
            CAPTURE(mask);
            CHECK((pruned.answer == Ternary::Yes) == naive);
            if (pruned.answer == Ternary::Yes)
                CHECK(validate_witness(g, *pruned.witness).valid);
        }
    }
}

TEST_CASE("exact solver matches the oracle on the named corpus") {
    for (const Graph& g : small_corpus()) {
        CAPTURE(g.order());
        CAPTURE(g.size());
        const SgeResult o = sge_oracle(g);
        const SgeOutcome e = sge_exact(g);
        REQUIRE(e.result.has_value());
        CHECK(e.result->value == o.value);
        CHECK(static_cast<int>(e.result->optimal_set.size()) == e.result->value);
        CHECK(std::is_sorted(e.result->optimal_set.begin(), e.result->optimal_set.end()));
        CHECK(validate_witness(g, e.result->witness).valid);
        CHECK(validate_witness(g, o.witness).valid);
        // forced vertices always show up, even for the bound-free oracle
        for (Vertex v : forced_vertices(g)) {
            CHECK(std::count(o.optimal_set.begin(), o.optimal_set.end(), v) == 1);
            CHECK(std::count(e.result->optimal_set.begin(), e.result->optimal_set.end(), v) == 1);
        }
        CHECK(e.result->value >= lower_bound(g));
        CHECK(sge_equals_n(g) == (o.value == g.order()));
    }
}

TEST_CASE("exact solver matches the oracle on seeded random graphs") {
    std::mt19937 rng(12345);
    std::vector<Graph> gs;
    for (double p : {0.3, 0.45, 0.6}) gs.push_back(random_connected(rng, 7, p));
    for (double p : {0.35, 0.5}) gs.push_back(random_connected(rng, 8, p));
    for (const Graph& g : gs) {
        CAPTURE(g.order());
        CAPTURE(g.size());
        const SgeResult o = sge_oracle(g);
        const SgeOutcome e = sge_exact(g);
        REQUIRE(e.result.has_value());
        CHECK(e.result->value == o.value);
        CHECK(sge_equals_n(g) == (o.value == g.order()));
        for (Vertex v : forced_vertices(g))
            CHECK(std::count(o.optimal_set.begin(), o.optimal_set.end(), v) == 1);
    }
}

TEST_CASE("lower bound is tight on cliques and single-universal graphs") {
    for (int n = 2; n <= 5; ++n) {
        const Graph g = complete_graph(n);
        CHECK(sge_exact(g).result->value == lower_bound(g));
    }
    std::vector<Edge> wheel{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    for (int v = 0; v < 5; ++v) wheel.push_back({v, 5});
    const Graph w = Graph::from_edges(6, wheel);
    CHECK(lower_bound(w) == 5);
    const SgeResult r = sge_oracle(w);
    CHECK(r.value == 5);
    // the hub is avoidable: the rim alone is a strong edge geodetic set
    CHECK(is_strong_edge_geodetic(w, std::vector<Vertex>{0, 1, 2, 3, 4}).answer == Ternary::Yes);
}

TEST_CASE("both solvers return the colex-first optimal set when unseeded") {
    const Graph g = cycle_graph(5);
    std::vector<Vertex> first;
    for (const auto& X : k_subsets_colex(5, 3))
        if (is_strong_edge_geodetic(g, X).answer == Ternary::Yes) {
            first = X;
            break;
        }
    REQUIRE(!first.empty());
    CHECK(sge_oracle(g).optimal_set == first);
    CHECK(sge_exact(g).result->optimal_set == first);
}

TEST_CASE("solver results are deterministic and thread count does not change them") {
    for (const Graph& g : {cycle_graph(7), cartesian_product(path_graph(3), path_graph(2)),
                           complete_bipartite(2, 3)}) {
        const SgeOutcome a = sge_exact(g);
        const SgeOutcome b = sge_exact(g);
        const SgeOutcome c = sge_exact(g, kDefaultBudget, 4);
        REQUIRE(a.result.has_value());
        REQUIRE(b.result.has_value());
        REQUIRE(c.result.has_value());
        CHECK(a.result->optimal_set == b.result->optimal_set);
        CHECK(a.result->optimal_set == c.result->optimal_set);
        CHECK(a.result->witness == b.result->witness);
        CHECK(a.result->value == c.result->value);
    }
}

TEST_CASE("family provenance seeds the upper bound") {
    const Graph g = complete_bipartite(5, 3);
    const SgeOutcome e = sge_exact(g);
    REQUIRE(e.result.has_value());
    CHECK(e.result->value == 5);
    CHECK(validate_witness(g, e.result->witness).valid);
    CHECK(sge_oracle(g).value == 5);

    // the same graph built without a tag must reach the same value
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const Graph untagged = Graph::from_edges(g.order(), edges);
    CHECK_FALSE(untagged.provenance().has_value());
    const SgeOutcome u = sge_exact(untagged);
    REQUIRE(u.result.has_value());
    CHECK(u.result->value == 5);
}

TEST_CASE("untagged product matches the tagged prism value") {
    const Graph untagged = cartesian_product(path_graph(3), complete_graph(3));
    CHECK_FALSE(untagged.provenance().has_value());
    const SgeOutcome u = sge_exact(untagged);
    REQUIRE(u.result.has_value());
    CHECK(u.result->value == 6);

    const SgeOutcome tagged = sge_exact(prism_graph(3, 3));
    REQUIRE(tagged.result.has_value());
    CHECK(tagged.result->value == 6);
    CHECK(tagged.expansions < u.expansions);  // seeding skips the final level
}

TEST_CASE("budget exhaustion reports a bracket instead of a result") {
    const Graph g = cartesian_product(path_graph(4), complete_graph(3));
    const SgeOutcome out = sge_exact(g, 1);
    CHECK_FALSE(out.result.has_value());
    CHECK(out.best_lower >= lower_bound(g));
    CHECK(out.best_upper == g.order());  // no witness found, trivial upper
    CHECK(out.best_lower <= out.best_upper);
    CHECK(out.expansions >= 1);
}
