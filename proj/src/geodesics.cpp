#include "sge/geodesics.hpp"

#include <algorithm>
#include <numeric>

#include "sge/util.hpp"

namespace sge {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    std::vector<Vertex> frontier, next;
    for (Vertex s = 0; s < n; ++s) {
        auto* row = dm.d.data() + static_cast<size_t>(s) * static_cast<size_t>(n);
        row[s] = 0;
        frontier.assign(1, s);
        int depth = 0;
        while (!frontier.empty()) {
            next.clear();
            ++depth;
            for (Vertex u : frontier)
                for (Vertex w : g.neighbors(u))
                    if (row[w] < 0) {
                        row[w] = depth;
                        next.push_back(w);
                    }
            std::swap(frontier, next);
        }
    }
    return dm;
}

GeodesicCursor::GeodesicCursor(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to)
    : g_(g), dm_(dm), to_(to) {
    path_.push_back(from);
    branch_.push_back(0);
}

// Extends the current partial path to a full geodesic, taking the smallest
// admissible neighbor at every level. Returns false when the entry level has
// no branch left; deeper levels always have one (shortest-path DAG).
bool GeodesicCursor::descend() {
    while (path_.back() != to_) {
        Vertex cur = path_.back();
        const int remaining = dm_.at(cur, to_);
        auto nbrs = g_.neighbors(cur);
        size_t i = branch_.back();
        while (i < nbrs.size() && dm_.at(nbrs[i], to_) != remaining - 1) ++i;
        if (i == nbrs.size()) return false;
        branch_.back() = i;
        path_.push_back(nbrs[i]);
        branch_.push_back(0);
    }
    return true;
}

std::optional<Path> GeodesicCursor::next() {
    if (exhausted_) return std::nullopt;
    if (!fresh_) {
        // drop the delivered endpoint, then advance the deepest open branch
        path_.pop_back();
        branch_.pop_back();
        if (!branch_.empty()) ++branch_.back();
    }
    fresh_ = false;
    while (!branch_.empty()) {
        if (descend()) return path_;
        path_.pop_back();
        branch_.pop_back();
        if (!branch_.empty()) ++branch_.back();
    }
    exhausted_ = true;
    return std::nullopt;
}

ThroughEdgeCursor::ThroughEdgeCursor(const Graph& g, const DistanceMatrix& dm, Vertex from,
                                     Vertex to, Vertex a, Vertex b)
    : g_(g),
      dm_(dm),
      feasible_(dm.at(from, a) + 1 + dm.at(b, to) == dm.at(from, to)),
      head_(g, dm, from, a),
      tail_(g, dm, b, to) {}

std::optional<Path> ThroughEdgeCursor::next() {
    if (!feasible_) return std::nullopt;
    for (;;) {
        if (!head_current_) {
            head_current_ = head_.next();
            if (!head_current_) return std::nullopt;
            tail_active_ = std::make_unique<GeodesicCursor>(tail_);
        }
        auto tail_path = tail_active_->next();
        if (!tail_path) {
            head_current_ = std::nullopt;
            continue;
        }
        // head ends at a, tail starts at b; total length matches the
        // distance, so the concatenation cannot repeat a vertex
        Path full = *head_current_;
        full.insert(full.end(), tail_path->begin(), tail_path->end());
        return full;
    }
}

namespace {

// single-source geodesic counts from s, vertices processed by distance
std::vector<uint64_t> geodesic_counts_from(const Graph& g, const DistanceMatrix& dm, Vertex s) {
    const int n = g.order();
    std::vector<uint64_t> cnt(static_cast<size_t>(n), 0);
    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return dm.at(s, a) < dm.at(s, b); });
    cnt[static_cast<size_t>(s)] = 1;
    for (Vertex v : order) {
        if (v == s) continue;
        const int dv = dm.at(s, v);
        uint64_t total = 0;
        for (Vertex w : g.neighbors(v))
            if (dm.at(s, w) == dv - 1) total = saturating_add(total, cnt[static_cast<size_t>(w)]);
        cnt[static_cast<size_t>(v)] = total;
    }
    return cnt;
}

}  // namespace

GeodesicEnumeration enumerate_geodesics(const Graph& g, const DistanceMatrix& dm, Vertex u,
                                        Vertex v, uint64_t cap) {
    if (!g.contains_vertex(u) || !g.contains_vertex(v))
        throw GraphError("geodesic endpoint out of range");
    if (u == v) throw GraphError("geodesic endpoints must be distinct");
    GeodesicEnumeration out;
    out.count = geodesic_counts_from(g, dm, u)[static_cast<size_t>(v)];
    if (out.count > cap) {
        out.overflow = true;
        return out;
    }
    GeodesicCursor cur(g, dm, u, v);
    out.paths.reserve(static_cast<size_t>(out.count));
    while (auto p = cur.next()) out.paths.push_back(std::move(*p));
    return out;
}

GeodesicEnumeration enumerate_geodesics(const Graph& g, Vertex u, Vertex v, uint64_t cap) {
    return enumerate_geodesics(g, all_pairs_distances(g), u, v, cap);
}

Geodesics::Geodesics(const Graph& g, uint64_t cap)
    : g_(g),
      dm_(all_pairs_distances(g)),
      cap_(cap),
      count_rows_(static_cast<size_t>(g.order())),
      count_row_ready_(static_cast<size_t>(g.order()), 0),
      lists_(static_cast<size_t>(g.order()) * static_cast<size_t>(g.order())) {}

const std::vector<uint64_t>& Geodesics::counts_from(Vertex s) {
    auto& row = count_rows_[static_cast<size_t>(s)];
    if (!count_row_ready_[static_cast<size_t>(s)]) {
        row = geodesic_counts_from(g_, dm_, s);
        count_row_ready_[static_cast<size_t>(s)] = 1;
    }
    return row;
}

uint64_t Geodesics::count(Vertex u, Vertex v) {
    return counts_from(u)[static_cast<size_t>(v)];
}

uint64_t Geodesics::count_through_edge(Vertex u, Vertex v, int edge_id) {
    auto [a, b] = g_.edge(edge_id);
    const int d = dm_.at(u, v);
    uint64_t total = 0;
    if (dm_.at(u, a) + 1 + dm_.at(b, v) == d)
        total = saturating_add(total, saturating_mul(count(u, a), count(b, v)));
    if (dm_.at(u, b) + 1 + dm_.at(a, v) == d)
        total = saturating_add(total, saturating_mul(count(u, b), count(a, v)));
    return total;
}

const std::vector<Path>* Geodesics::path_list(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    auto& slot =
        lists_[static_cast<size_t>(u) * static_cast<size_t>(g_.order()) + static_cast<size_t>(v)];
    if (!slot) {
        slot = std::make_unique<ListEntry>();
        if (count(u, v) > cap_) {
            slot->overflow = true;
        } else {
            GeodesicCursor cur(g_, dm_, u, v);
            while (auto p = cur.next()) slot->paths.push_back(std::move(*p));
        }
    }
    return slot->overflow ? nullptr : &slot->paths;
}

}  // namespace sge
