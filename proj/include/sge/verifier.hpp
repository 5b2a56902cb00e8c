#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sge/geodesics.hpp"
#include "sge/graph.hpp"
#include "sge/witness.hpp"

namespace sge {

struct VerifyReport {
    std::vector<int> covered;    // edge ids, ascending
    std::vector<int> uncovered;  // edge ids, ascending
    bool valid = false;
    std::vector<std::string> violations;  // reasons other than uncovered edges
};

// Polynomial check of a witness: every assigned path must be a geodesic with
// endpoints forming a distinct pair inside w.set, and together the paths must
// cover every edge. Structural damage (foreign vertices, consecutive
// non-adjacent path vertices) throws WitnessError; a merely wrong witness
// (non-geodesic path, duplicate pair, uncovered edges) comes back invalid.
VerifyReport validate_witness(const Graph& g, const Witness& w);

enum class Ternary { No, Yes, Unknown };

inline constexpr uint64_t kDefaultBudget = 100'000'000;

struct SegDecision {
    Ternary answer = Ternary::Unknown;
    std::optional<Witness> witness;  // present on Yes, passes validate_witness
    uint64_t expansions = 0;         // backtracking nodes spent
};

// Exact decision whether X admits an assignment of at most one geodesic per
// pair covering all edges. Branches on the edge with the fewest remaining
// (pair, geodesic) candidates; Unknown only on budget exhaustion. A shared
// Geodesics cache may be passed in; otherwise one is built locally.
SegDecision is_strong_edge_geodetic(const Graph& g, std::span<const Vertex> X,
                                    uint64_t budget = kDefaultBudget, Geodesics* geo = nullptr);

}  // namespace sge
