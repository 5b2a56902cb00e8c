#include "sge/verifier.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sge/util.hpp"

namespace sge {

namespace {

std::string pair_label(Vertex u, Vertex v) {
    std::ostringstream os;
    os << "{" << u << "," << v << "}";
    return os.str();
}

}  // namespace

VerifyReport validate_witness(const Graph& g, const Witness& w) {
    VerifyReport rep;
    for (Vertex x : w.set)
        if (!g.contains_vertex(x))
            throw WitnessError("witness set contains vertex " + std::to_string(x) +
                               " outside the graph");
    std::vector<Vertex> set_sorted(w.set);
    std::sort(set_sorted.begin(), set_sorted.end());
    if (std::adjacent_find(set_sorted.begin(), set_sorted.end()) != set_sorted.end())
        rep.violations.push_back("set contains a duplicate vertex");
    const auto in_set = [&](Vertex x) {
        return std::binary_search(set_sorted.begin(), set_sorted.end(), x);
    };

    const DistanceMatrix dm = all_pairs_distances(g);
    std::vector<char> covered(static_cast<size_t>(g.size()), 0);
    std::vector<char> pair_seen(static_cast<size_t>(g.order()) * static_cast<size_t>(g.order()),
                                0);

    for (const auto& pp : w.paths) {
        for (Vertex x : pp.path)
            if (!g.contains_vertex(x))
                throw WitnessError("path for pair " + pair_label(pp.u, pp.v) +
                                   " visits vertex " + std::to_string(x) + " outside the graph");
        if (pp.path.empty())
            throw WitnessError("empty path for pair " + pair_label(pp.u, pp.v));
        for (size_t i = 0; i + 1 < pp.path.size(); ++i)
            if (!g.adjacent(pp.path[i], pp.path[i + 1]))
                throw WitnessError("path for pair " + pair_label(pp.u, pp.v) +
                                   " has non-adjacent consecutive vertices " +
                                   std::to_string(pp.path[i]) + "," +
                                   std::to_string(pp.path[i + 1]));

        Vertex u = pp.u, v = pp.v;
        if (!g.contains_vertex(u) || !g.contains_vertex(v))
            throw WitnessError("pair " + pair_label(u, v) + " outside the graph");
        if (u > v) std::swap(u, v);

        bool ok = true;
        if (u == v) {
            rep.violations.push_back("pair " + pair_label(pp.u, pp.v) +
                                     " has equal endpoints");
            ok = false;
        }
        if (ok && (!in_set(u) || !in_set(v))) {
            rep.violations.push_back("pair " + pair_label(u, v) + " not inside the set");
            ok = false;
        }
        if (ok) {
            const Vertex a = pp.path.front(), b = pp.path.back();
            if (!((a == u && b == v) || (a == v && b == u))) {
                rep.violations.push_back("path endpoints do not match pair " + pair_label(u, v));
                ok = false;
            }
        }
        if (ok) {
            auto& seen =
                pair_seen[static_cast<size_t>(u) * static_cast<size_t>(g.order()) +
                          static_cast<size_t>(v)];
            if (seen) {
                rep.violations.push_back("pair " + pair_label(u, v) + " assigned twice");
                ok = false;
            } else {
                seen = 1;
            }
        }
        if (ok && static_cast<int>(pp.path.size()) - 1 != dm.at(u, v)) {
            rep.violations.push_back("path for pair " + pair_label(u, v) +
                                     " is not a geodesic (length " +
                                     std::to_string(pp.path.size() - 1) + ", distance " +
                                     std::to_string(dm.at(u, v)) + ")");
            ok = false;
        }
        if (ok)
            for (size_t i = 0; i + 1 < pp.path.size(); ++i)
                covered[static_cast<size_t>(g.edge_id(pp.path[i], pp.path[i + 1]))] = 1;
    }

    for (int e = 0; e < g.size(); ++e)
        (covered[static_cast<size_t>(e)] ? rep.covered : rep.uncovered).push_back(e);
    rep.valid = rep.violations.empty() && rep.uncovered.empty();
    return rep;
}

namespace {

struct Search {
    const Graph& g;
    Geodesics& geo;
    std::vector<Edge> pairs;         // lexicographically ascending, u < v
    std::vector<char> used;          // per pair
    std::vector<int> cover_count;    // per edge
    int uncovered = 0;
    uint64_t budget = 0;
    uint64_t expansions = 0;
    bool exhausted = false;
    std::vector<std::pair<size_t, Path>> chosen;

    Search(const Graph& g_, Geodesics& geo_) : g(g_), geo(geo_) {}

    void cover(const Path& p) {
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (++cover_count[static_cast<size_t>(g.edge_id(p[i], p[i + 1]))] == 1) --uncovered;
    }
    void uncover(const Path& p) {
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (--cover_count[static_cast<size_t>(g.edge_id(p[i], p[i + 1]))] == 0) ++uncovered;
    }

    // Edge with the fewest live (pair, geodesic) candidates; ties go to the
    // smaller edge id. Returns -1 when some edge has none (dead branch).
    int pick_edge() const {
        int best = -1;
        uint64_t best_cnt = std::numeric_limits<uint64_t>::max();
        for (int e = 0; e < g.size(); ++e) {
            if (cover_count[static_cast<size_t>(e)] > 0) continue;
            uint64_t cnt = 0;
            for (size_t p = 0; p < pairs.size() && cnt < best_cnt; ++p) {
                if (used[p]) continue;
                cnt = saturating_add(cnt,
                                     geo.count_through_edge(pairs[p].first, pairs[p].second, e));
            }
            if (cnt == 0) return -1;
            if (cnt < best_cnt) {
                best_cnt = cnt;
                best = e;
            }
        }
        return best;
    }

    bool dfs() {
        if (uncovered == 0) return true;
        const int e = pick_edge();
        if (e < 0) return false;
        const auto [a, b] = g.edge(e);
        for (size_t p = 0; p < pairs.size(); ++p) {
            if (used[p]) continue;
            const auto [u, v] = pairs[p];
            for (int orient = 0; orient < 2; ++orient) {
                ThroughEdgeCursor cursor(g, geo.distances(), u, v, orient ? b : a,
                                         orient ? a : b);
                while (auto path = cursor.next()) {
                    if (budget == 0) {
                        exhausted = true;
                        return false;
                    }
                    --budget;
                    ++expansions;
                    used[p] = 1;
                    cover(*path);
                    chosen.emplace_back(p, std::move(*path));
                    if (dfs()) return true;
                    uncover(chosen.back().second);
                    chosen.pop_back();
                    used[p] = 0;
                    if (exhausted) return false;
                }
            }
        }
        return false;
    }
};

}  // namespace

SegDecision is_strong_edge_geodetic(const Graph& g, std::span<const Vertex> X, uint64_t budget,
                                    Geodesics* geo) {
    std::vector<Vertex> xs(X.begin(), X.end());
    for (Vertex x : xs)
        if (!g.contains_vertex(x)) throw GraphError("candidate set vertex out of range");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::optional<Geodesics> local;
    if (!geo) {
        local.emplace(g);
        geo = &*local;
    }

    Search s(g, *geo);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) s.pairs.emplace_back(xs[i], xs[j]);
    s.used.assign(s.pairs.size(), 0);
    s.cover_count.assign(static_cast<size_t>(g.size()), 0);
    s.uncovered = g.size();
    s.budget = budget;

    SegDecision out;
    const bool found = s.dfs();
    out.expansions = s.expansions;
    if (found) {
        out.answer = Ternary::Yes;
        Witness w;
        w.set = xs;
        for (auto& [p, path] : s.chosen)
            w.paths.push_back({s.pairs[p].first, s.pairs[p].second, std::move(path)});
        canonicalize(w);
        out.witness = std::move(w);
    } else {
        out.answer = s.exhausted ? Ternary::Unknown : Ternary::No;
    }
    return out;
}

}  // namespace sge
