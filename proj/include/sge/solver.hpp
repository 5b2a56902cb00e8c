#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sge/geodesics.hpp"
#include "sge/graph.hpp"
#include "sge/verifier.hpp"

namespace sge {

struct SgeResult {
    int value = 0;
    std::vector<Vertex> optimal_set;  // |optimal_set| == value, colex-first
    Witness witness;                  // passes validate_witness
    std::vector<Vertex> forced;       // vertices in every strong edge geodetic set
    int lower_bound_used = 0;
    uint64_t expansions = 0;
};

// sge_exact either finishes or runs out of budget; in the latter case result
// is empty and the bracket [best_lower, best_upper] reports progress.
struct SgeOutcome {
    std::optional<SgeResult> result;
    int best_lower = 0;
    int best_upper = 0;
    uint64_t expansions = 0;
};

// Vertices with at least one dominant neighbor; each lies in every strong
// edge geodetic set.
std::vector<Vertex> forced_vertices(const Graph& g);

// max of |forced|, the simplicial count, n-1 when a universal vertex exists,
// and 2. The one-vertex graph gets 0 (its strong edge geodetic number under
// the toolkit's empty-set convention).
int lower_bound(const Graph& g);

// Exact value: sweeps sizes k from lower_bound(g) upward, at each size
// trying supersets of the forced vertices in colex order. Graphs built by
// the tagged family generators seed an upper bound from the closed-form
// construction, capping the sweep. With threads > 1 the subset sweep is
// partitioned by stride; the lowest-rank success wins, so the reported set
// matches the single-threaded one (budget accounting becomes approximate).
SgeOutcome sge_exact(const Graph& g, uint64_t budget = kDefaultBudget, int threads = 1);

inline constexpr int kDefaultOracleGuard = 10;

// Ground-truth brute force with no pruning: every subset in size order
// (colex within a size), each decided by naive_is_seg. Refuses graphs above
// the guard. lower_bound_used is 0 - the oracle uses no bounds by design.
SgeResult sge_oracle(const Graph& g, int guard = kDefaultOracleGuard);

// True iff every vertex has a dominant neighbor, which is equivalent to
// sg_e(G) = n(G).
bool sge_equals_n(const Graph& g);

// The oracle's decision: walk the pairs of X in lex order and try every
// choice of one geodesic (or none) per pair, memoizing failed
// (pair index, covered edges) states. Exposed so tests can cross-check the
// pruned search against it. Optionally reports the found assignment and the
// number of search nodes.
bool naive_is_seg(const Graph& g, std::span<const Vertex> X, Geodesics& geo,
                  Witness* witness = nullptr, uint64_t* nodes = nullptr);

}  // namespace sge
