#include "sge/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "sge/constructions.hpp"
#include "sge/formulas.hpp"
#include "sge/structure.hpp"
#include "sge/util.hpp"

namespace sge {

std::vector<Vertex> forced_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (!dominant_neighbors(g, u).empty()) out.push_back(u);
    return out;
}

int lower_bound(const Graph& g) {
    if (g.order() == 1) return 0;
    int best = 2;
    best = std::max(best, static_cast<int>(forced_vertices(g).size()));
    best = std::max(best, static_cast<int>(simplicial_vertices(g).size()));
    if (!universal_vertices(g).empty()) best = std::max(best, g.order() - 1);
    return best;
}

bool sge_equals_n(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        if (dominant_neighbors(g, u).empty()) return false;
    return true;
}

namespace {

// Bounded memo of failed (covered, pair index) states. Small state spaces get
// an exact presence bitset; larger ones a fixed-size table where a colliding
// insert evicts the old entry (losing an entry only costs re-exploration).
class FailedMemo {
public:
    explicit FailedMemo(int key_bits) {
        if (key_bits <= kExactBits) {
            exact_.assign(size_t{1} << std::max(key_bits, 1), false);
        } else {
            slots_.assign(size_t{1} << kTableBits, kEmpty);
        }
    }

    bool contains(uint64_t key) const {
        if (!exact_.empty()) return exact_[key];
        return slots_[mix(key) & (slots_.size() - 1)] == key;
    }

    void insert(uint64_t key) {
        if (!exact_.empty()) {
            exact_[key] = true;
        } else {
            slots_[mix(key) & (slots_.size() - 1)] = key;
        }
    }

private:
    static constexpr int kExactBits = 28;   // up to a 32 MiB bitset
    static constexpr int kTableBits = 24;   // 16M slots, 128 MiB
    static constexpr uint64_t kEmpty = ~0ull;  // unreachable: full covers never fail

    static uint64_t mix(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::vector<bool> exact_;
    std::vector<uint64_t> slots_;
};

struct NaiveSearch {
    size_t npairs = 0;
    int shift = 0;
    uint64_t full = 0;
    const std::vector<std::vector<uint64_t>>& masks;  // per pair, per path
    std::vector<int>& chosen;                         // path index or -1
    FailedMemo failed;
    uint64_t nodes = 0;

    NaiveSearch(const std::vector<std::vector<uint64_t>>& masks_, std::vector<int>& chosen_,
                int key_bits)
        : masks(masks_), chosen(chosen_), failed(key_bits) {}

    bool dfs(size_t i, uint64_t covered) {
        ++nodes;
        if (covered == full) return true;
        if (i == npairs) return false;
        const uint64_t key = (covered << shift) | i;
        if (failed.contains(key)) return false;
        const auto& options = masks[i];
        for (size_t idx = 0; idx < options.size(); ++idx) {
            chosen[i] = static_cast<int>(idx);
            if (dfs(i + 1, covered | options[idx])) return true;
        }
        chosen[i] = -1;
        if (dfs(i + 1, covered)) return true;
        failed.insert(key);
        return false;
    }
};

}  // namespace

bool naive_is_seg(const Graph& g, std::span<const Vertex> X, Geodesics& geo, Witness* witness,
                  uint64_t* nodes) {
    std::vector<Vertex> xs(X.begin(), X.end());
    for (Vertex x : xs)
        if (!g.contains_vertex(x)) throw GraphError("candidate set vertex out of range");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Edge> pairs;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) pairs.emplace_back(xs[i], xs[j]);

    const int shift = std::bit_width(pairs.size());
    if (g.size() + shift > 64)
        throw InstanceTooLargeError("naive decision state does not fit 64 bits (" +
                                    std::to_string(g.size()) + " edges, " +
                                    std::to_string(pairs.size()) + " pairs)");

    std::vector<std::vector<uint64_t>> masks(pairs.size());
    std::vector<const std::vector<Path>*> lists(pairs.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
        const auto* paths = geo.path_list(pairs[p].first, pairs[p].second);
        if (!paths) throw Error("geodesic cap exceeded inside the naive decision");
        lists[p] = paths;
        for (const Path& path : *paths) {
            uint64_t mask = 0;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                mask |= 1ull << g.edge_id(path[i], path[i + 1]);
            masks[p].push_back(mask);
        }
    }

    std::vector<int> chosen(pairs.size(), -1);
    NaiveSearch search(masks, chosen, g.size() + shift);
    search.npairs = pairs.size();
    search.shift = shift;
    search.full = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
    const bool found = search.dfs(0, 0);
    if (nodes) *nodes = search.nodes;
    if (found && witness) {
        Witness w;
        w.set = xs;
        for (size_t p = 0; p < pairs.size(); ++p)
            if (chosen[p] >= 0)
                w.paths.push_back({pairs[p].first, pairs[p].second,
                                   (*lists[p])[static_cast<size_t>(chosen[p])]});
        canonicalize(w);
        *witness = std::move(w);
    }
    return found;
}

SgeResult sge_oracle(const Graph& g, int guard) {
    if (g.order() > guard)
        throw InstanceTooLargeError("oracle guard: graph has " + std::to_string(g.order()) +
                                    " vertices, limit is " + std::to_string(guard));
    Geodesics geo(g);
    uint64_t total_nodes = 0;
    for (int k = 0; k <= g.order(); ++k) {
        for (ColexCombinations cc(g.order(), k); !cc.done(); cc.advance()) {
            std::vector<Vertex> xs(cc.current().begin(), cc.current().end());
            Witness w;
            uint64_t nodes = 0;
            const bool ok = naive_is_seg(g, xs, geo, &w, &nodes);
            total_nodes += nodes;
            if (ok) {
                SgeResult res;
                res.value = k;
                res.optimal_set = std::move(xs);
                res.witness = std::move(w);
                res.forced = forced_vertices(g);
                res.lower_bound_used = 0;
                res.expansions = total_nodes;
                return res;
            }
        }
    }
    throw Error("oracle fell through: the full vertex set must be strong edge geodetic");
}

namespace {

struct Seed {
    int value = 0;
    std::vector<Vertex> set;
    Witness witness;
};

Seed trivial_seed(const Graph& g) {
    Seed s;
    s.value = g.order();
    for (Vertex v = 0; v < g.order(); ++v) s.set.push_back(v);
    for (const auto& [u, v] : g.edges()) s.witness.paths.push_back({u, v, {u, v}});
    s.witness.set = s.set;
    return s;
}

void remap(Witness& w, const std::vector<Vertex>& perm) {
    for (auto& v : w.set) v = perm[static_cast<size_t>(v)];
    for (auto& pp : w.paths) {
        pp.u = perm[static_cast<size_t>(pp.u)];
        pp.v = perm[static_cast<size_t>(pp.v)];
        for (auto& v : pp.path) v = perm[static_cast<size_t>(v)];
    }
    canonicalize(w);
}

// Closed-form upper bound for graphs built by the tagged generators, carrying
// the constructive witness on the exact same labeling.
std::optional<Seed> seeded_upper_bound(const Graph& g) {
    const auto& prov = g.provenance();
    if (!prov) return std::nullopt;
    const auto& par = prov->params;
    switch (prov->family) {
        case Provenance::Family::Complete: {
            Seed s = trivial_seed(g);
            if (g.order() == 1) return Seed{0, {}, {}};
            return s;
        }
        case Provenance::Family::CompleteBipartite: {
            const int a = par[0], b = par[1];
            if (std::min(a, b) < 2) return std::nullopt;  // stars have no formula
            Construction c = construct_bipartite(a, b);
            Seed s{static_cast<int>(c.set.size()), {}, std::move(c.witness)};
            if (a < b) {
                // generator laid the small part first; mirror the labels
                std::vector<Vertex> perm(static_cast<size_t>(a + b));
                for (int i = 0; i < b; ++i) perm[static_cast<size_t>(i)] = a + i;
                for (int j = 0; j < a; ++j) perm[static_cast<size_t>(b + j)] = j;
                remap(s.witness, perm);
            }
            s.set = s.witness.set;
            return s;
        }
        case Provenance::Family::CompleteMultipartite: {
            if (!std::is_sorted(par.begin(), par.end())) return std::nullopt;
            if (par.size() < 2 || par.front() < 2) return std::nullopt;
            Construction c = construct_multipartite(MultipartiteSpec::of(par));
            return Seed{static_cast<int>(c.set.size()), std::move(c.set), std::move(c.witness)};
        }
        case Provenance::Family::PathTimesComplete: {
            const int n = par[0], m = par[1];
            if (n < 2 || m < 3) return std::nullopt;
            Construction c = construct_prism(n, m);
            return Seed{static_cast<int>(c.set.size()), std::move(c.set), std::move(c.witness)};
        }
    }
    return std::nullopt;
}

struct LevelRecord {
    uint64_t rank;
    uint64_t expansions;
};

struct LevelSuccess {
    uint64_t rank;
    std::vector<Vertex> set;
    Witness witness;
};

}  // namespace

SgeOutcome sge_exact(const Graph& g, uint64_t budget, int threads) {
    if (threads < 1) threads = 1;
    const int n = g.order();
    auto forced = forced_vertices(g);
    const int lb = lower_bound(g);

    Seed seed = [&] {
        if (auto s = seeded_upper_bound(g)) return std::move(*s);
        return trivial_seed(g);
    }();

    SgeOutcome out;
    auto finish = [&](int value, std::vector<Vertex> set, Witness w, uint64_t expansions) {
        SgeResult res;
        res.value = value;
        res.optimal_set = std::move(set);
        res.witness = std::move(w);
        res.forced = forced;
        res.lower_bound_used = lb;
        res.expansions = expansions;
        out.result = std::move(res);
        out.best_lower = value;
        out.best_upper = value;
        out.expansions = expansions;
        return out;
    };

    if (lb >= seed.value)
        return finish(seed.value, std::move(seed.set), std::move(seed.witness), 0);

    std::vector<Vertex> pool;
    {
        std::vector<char> is_forced(static_cast<size_t>(n), 0);
        for (Vertex v : forced) is_forced[static_cast<size_t>(v)] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (!is_forced[static_cast<size_t>(v)]) pool.push_back(v);
    }

    std::atomic<int64_t> remaining{static_cast<int64_t>(
        std::min<uint64_t>(budget, std::numeric_limits<int64_t>::max()))};
    const int64_t initial = remaining.load();
    uint64_t essential = 0;

    std::optional<Geodesics> shared_geo;  // reused across levels when threads == 1
    if (threads == 1) shared_geo.emplace(g);

    for (int k = lb; k < seed.value; ++k) {
        const int r = k - static_cast<int>(forced.size());
        if (r < 0) continue;
        if (r > static_cast<int>(pool.size())) break;

        std::atomic<uint64_t> best_rank{std::numeric_limits<uint64_t>::max()};
        std::atomic<bool> out_of_budget{false};
        std::vector<std::vector<LevelRecord>> records(static_cast<size_t>(threads));
        std::vector<std::optional<LevelSuccess>> successes(static_cast<size_t>(threads));

        auto worker = [&](int t) {
            std::optional<Geodesics> local;
            Geodesics& geo = threads == 1 ? *shared_geo : (local.emplace(g), *local);
            std::vector<Vertex> xs;
            uint64_t rank = 0;
            for (ColexCombinations cc(static_cast<int>(pool.size()), r); !cc.done();
                 cc.advance(), ++rank) {
                if (rank % static_cast<uint64_t>(threads) != static_cast<uint64_t>(t)) continue;
                if (rank > best_rank.load(std::memory_order_relaxed)) break;
                const int64_t snap = remaining.load(std::memory_order_relaxed);
                if (snap <= 0) {
                    out_of_budget.store(true, std::memory_order_relaxed);
                    break;
                }
                xs = forced;
                for (int idx : cc.current()) xs.push_back(pool[static_cast<size_t>(idx)]);
                std::sort(xs.begin(), xs.end());
                SegDecision d =
                    is_strong_edge_geodetic(g, xs, static_cast<uint64_t>(snap), &geo);
                remaining.fetch_sub(
                    static_cast<int64_t>(std::max<uint64_t>(1, d.expansions)),
                    std::memory_order_relaxed);
                records[static_cast<size_t>(t)].push_back({rank, d.expansions});
                if (d.answer == Ternary::Yes) {
                    uint64_t seen = best_rank.load(std::memory_order_relaxed);
                    while (rank < seen &&
                           !best_rank.compare_exchange_weak(seen, rank,
                                                            std::memory_order_relaxed)) {
                    }
                    auto& slot = successes[static_cast<size_t>(t)];
                    if (!slot || rank < slot->rank)
                        slot = LevelSuccess{rank, xs, std::move(*d.witness)};
                    break;  // this worker's later ranks can't beat its own find
                }
                if (d.answer == Ternary::Unknown) {
                    out_of_budget.store(true, std::memory_order_relaxed);
                    break;
                }
            }
        };

        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> ts;
            for (int t = 0; t < threads; ++t) ts.emplace_back(worker, t);
            for (auto& th : ts) th.join();
        }

        std::optional<LevelSuccess> win;
        for (auto& s : successes)
            if (s && (!win || s->rank < win->rank)) win = std::move(s);
        if (win) {
            for (const auto& rec : records)
                for (const auto& [rank, exp] : rec)
                    if (rank <= win->rank) essential += exp;
            return finish(k, std::move(win->set), std::move(win->witness), essential);
        }
        if (out_of_budget.load()) {
            out.best_lower = k;
            out.best_upper = seed.value;
            out.expansions = static_cast<uint64_t>(initial - remaining.load());
            return out;
        }
        for (const auto& rec : records)
            for (const auto& [rank, exp] : rec) essential += exp;
    }

    return finish(seed.value, std::move(seed.set), std::move(seed.witness), essential);
}

}  // namespace sge
