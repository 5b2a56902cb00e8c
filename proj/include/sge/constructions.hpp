#pragma once

#include <vector>

#include "sge/formulas.hpp"
#include "sge/graph.hpp"
#include "sge/witness.hpp"

namespace sge {

// Proper (n-1)-edge-coloring of K_n, n even; every color class is a perfect
// matching. Colors follow c(ij) = (i+j) mod (n-1) for i,j <= n-2 and
// c(i,n-1) = 2i mod (n-1).
struct EdgeColoring {
    int n = 0;
    std::vector<int> color;  // flat n*n lookup, -1 on the diagonal

    int at(int i, int j) const {
        return color[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    }
};

EdgeColoring one_factorization(int n);

// A family instance together with a set and a witness realizing the
// closed-form upper bound on it. Witnesses are canonical and are meant to be
// machine-verified; the CLI refuses to emit one that fails validation.
struct Construction {
    Graph graph;
    std::vector<Vertex> set;
    Witness witness;
};

// K_{n,m}; arguments may come in either order, the larger part plays X.
// Both parts >= 2.
Construction construct_bipartite(int n, int m);

// K_{n_1..n_k} on the sorted spec. Two parts delegate to the bipartite
// construction (relabeled into the part layout); for k >= 3 the bipartite
// path family is replayed on X_1 against every other part, with any extra
// set vertices drawn from the lowest-indexed X_1 vertices and all remaining
// cross edges covered by single-edge paths.
Construction construct_multipartite(const MultipartiteSpec& spec);

// P_n box K_m, m >= 3, n >= 2.
Construction construct_prism(int n, int m);

}  // namespace sge
