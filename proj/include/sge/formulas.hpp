#pragma once

#include <optional>
#include <vector>

#include "sge/graph.hpp"

namespace sge {

// Part sizes sorted ascending; every part >= 2 and at least two parts, the
// hypotheses the closed-form multipartite result needs.
struct MultipartiteSpec {
    std::vector<int> parts;

    // Sorts and validates; throws HypothesisError outside the domain.
    static MultipartiteSpec of(std::vector<int> parts);
};

// P_n box K_m with m >= 3, n >= 2, decomposed as n = k^2 + h, 0 <= h <= 2k.
struct PrismSpec {
    int n = 0;
    int m = 0;
    int k = 0;
    int h = 0;

    static PrismSpec of(int n, int m);
};

// Order of the parts does not matter; arguments are swapped so n >= m.
// Both parts must have at least two vertices (stars are out of scope).
int sge_complete_bipartite(int n, int m);

int sge_complete_multipartite(const MultipartiteSpec& spec);

int sge_path_times_complete(const PrismSpec& spec);

// n for every n >= 2; the single-vertex graph gets 0 by toolkit convention
// (no edges, so the empty set covers everything).
int sge_complete(int n);

// n(g)-1 when the graph has exactly one universal vertex, empty otherwise.
std::optional<int> sge_single_universal(const Graph& g);

}  // namespace sge
