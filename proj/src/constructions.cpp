#include "sge/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sge/families.hpp"

namespace sge {

EdgeColoring one_factorization(int n) {
    if (n < 2 || n % 2 != 0)
        throw HypothesisError("the 1-factorization needs an even order >= 2, got " +
                              std::to_string(n));
    EdgeColoring ec;
    ec.n = n;
    ec.color.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    auto put = [&](int i, int j, int c) {
        ec.color[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = c;
        ec.color[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(i)] = c;
    };
    for (int i = 0; i <= n - 2; ++i) {
        for (int j = i + 1; j <= n - 2; ++j) put(i, j, (i + j) % (n - 1));
        put(i, n - 1, 2 * i % (n - 1));
    }
    return ec;
}

namespace {

void emit(std::vector<PairPath>& out, Path p) {
    out.push_back({p.front(), p.back(), std::move(p)});
}

// Path family certifying the bipartite bound for parts of global ids x
// (|x| = n) and y (|y| = m), n >= m >= 2. Length-2 paths x_i y_j x_k are
// keyed by the 1-factorization of the complete graph on the x indices (the
// even order N is n or n-1); the leftover x vertex of odd n is patched with
// paths x_{n-1} y_i x_i. Returns the y positions that must join the set.
std::vector<int> bipartite_paths(const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                                 std::vector<PairPath>& out) {
    const int n = static_cast<int>(x.size());
    const int m = static_cast<int>(y.size());

    // covers edges x_i y_j for i < N and j < cols
    auto coloring_paths = [&](int N, int cols) {
        const EdgeColoring ec = one_factorization(N);
        for (int i = 0; i < N; ++i)
            for (int k = i + 1; k < N; ++k)
                if (ec.at(i, k) < cols) emit(out, {x[i], y[ec.at(i, k)], x[k]});
    };
    auto singles_to = [&](int j, int upto) {  // edges x_i y_j for i < upto
        for (int i = 0; i < upto; ++i) emit(out, {x[i], y[j]});
    };
    auto patches = [&](int cols) {  // edges x_{n-1} y_i for i < cols
        for (int i = 0; i < cols; ++i) emit(out, {x[n - 1], y[i], x[i]});
    };

    if (n % 2 == 0) {
        if (n == m) {
            singles_to(n - 1, n);
            coloring_paths(n, n - 1);
            return {n - 1};
        }
        coloring_paths(n, m);
        return {};
    }
    if (n == m) {
        singles_to(n - 2, n - 1);
        coloring_paths(n - 1, n - 2);
        singles_to(n - 1, n);
        patches(n - 1);
        return {n - 2, n - 1};
    }
    if (n == m + 1) {
        singles_to(n - 2, n - 1);
        coloring_paths(n - 1, n - 2);
        patches(n - 1);
        return {n - 2};
    }
    coloring_paths(n - 1, m);
    patches(m);
    return {};
}

}  // namespace

Construction construct_bipartite(int n, int m) {
    if (n < m) std::swap(n, m);
    if (m < 2)
        throw HypothesisError("bipartite construction requires both parts >= 2, got " +
                              std::to_string(m));
    Construction c{complete_bipartite(n, m), {}, {}};
    std::vector<Vertex> x(static_cast<size_t>(n)), y(static_cast<size_t>(m));
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = i;
    for (int j = 0; j < m; ++j) y[static_cast<size_t>(j)] = n + j;
    const auto extras = bipartite_paths(x, y, c.witness.paths);
    c.set = x;
    for (int pos : extras) c.set.push_back(y[static_cast<size_t>(pos)]);
    std::sort(c.set.begin(), c.set.end());
    c.witness.set = c.set;
    canonicalize(c.witness);
    return c;
}

Construction construct_multipartite(const MultipartiteSpec& spec) {
    const auto& parts = spec.parts;
    const int k = static_cast<int>(parts.size());
    Construction c{complete_multipartite(parts), {}, {}};

    if (k == 2) {  // plain bipartite case, relabeled into the part layout
        const int n1 = parts[0], n2 = parts[1];
        Construction b = construct_bipartite(n2, n1);
        if (n1 < n2) {
            std::vector<Vertex> perm(static_cast<size_t>(n1 + n2));
            for (int i = 0; i < n2; ++i) perm[static_cast<size_t>(i)] = n1 + i;
            for (int j = 0; j < n1; ++j) perm[static_cast<size_t>(n2 + j)] = j;
            for (auto& v : b.witness.set) v = perm[static_cast<size_t>(v)];
            for (auto& pp : b.witness.paths) {
                pp.u = perm[static_cast<size_t>(pp.u)];
                pp.v = perm[static_cast<size_t>(pp.v)];
                for (auto& v : pp.path) v = perm[static_cast<size_t>(v)];
            }
            std::sort(b.witness.set.begin(), b.witness.set.end());
            canonicalize(b.witness);
        }
        c.set = b.witness.set;
        c.witness = std::move(b.witness);
        return c;
    }

    std::vector<int> start(static_cast<size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i) start[static_cast<size_t>(i) + 1] = start[static_cast<size_t>(i)] + parts[static_cast<size_t>(i)];
    auto part_ids = [&](int i) {
        std::vector<Vertex> ids;
        for (Vertex v = start[static_cast<size_t>(i)]; v < start[static_cast<size_t>(i) + 1]; ++v)
            ids.push_back(v);
        return ids;
    };

    // X_1 plays the small side of every replayed bipartite family; reversing
    // it makes the construction's extra vertices the lowest-indexed ones.
    std::vector<Vertex> x1 = part_ids(0);
    std::vector<Vertex> y_role(x1.rbegin(), x1.rend());

    std::set<Vertex> set;
    for (int i = 1; i < k; ++i) {
        const auto xi = part_ids(i);
        set.insert(xi.begin(), xi.end());
        for (int pos : bipartite_paths(xi, y_role, c.witness.paths))
            set.insert(y_role[static_cast<size_t>(pos)]);
    }
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (Vertex u : part_ids(i))
                for (Vertex v : part_ids(j)) emit(c.witness.paths, {u, v});

    c.set.assign(set.begin(), set.end());
    c.witness.set = c.set;
    canonicalize(c.witness);
    return c;
}

Construction construct_prism(int n, int m) {
    const PrismSpec spec = PrismSpec::of(n, m);
    const int k = spec.k, h = spec.h;
    Construction c{prism_graph(n, m), {}, {}};

    // 1-based (column i, clique vertex j) to vertex id
    auto id = [m](int i, int j) { return (i - 1) * m + (j - 1); };
    // appends the within-layer run from column c1 to c2 (either direction)
    auto run = [&](Path& p, int c1, int c2, int y) {
        const int step = c1 <= c2 ? 1 : -1;
        for (int col = c1;; col += step) {
            p.push_back(id(col, y));
            if (col == c2) break;
        }
    };
    // layer y1 from column ca to the crossing column cx, then layer y2 on to cb
    auto cross = [&](int ca, int cx, int y1, int cb, int y2) {
        Path p;
        run(p, ca, cx, y1);
        run(p, cx, cb, y2);
        emit(c.witness.paths, std::move(p));
    };

    std::set<Vertex> set;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m; ++j) set.insert(id(i * i, j));

    // the k^2-prefix family shared by all three cases
    if (k > 1)
        for (int j = 1; j <= m; ++j) {
            Path p;
            run(p, 1, k * k, j);
            emit(c.witness.paths, std::move(p));
        }
    for (int y1 = 1; y1 <= m; ++y1)
        for (int y2 = y1 + 1; y2 <= m; ++y2) {
            for (int i = 1; i <= k; ++i) emit(c.witness.paths, {id(i * i, y1), id(i * i, y2)});
            for (int i = 2; i <= k; ++i)
                for (int l = 1; l <= i - 1; ++l) {
                    cross(l * l, (i - 1) * (i - 1) + l, y1, i * i, y2);
                    cross(l * l, i * (i - 1) + l, y2, i * i, y1);
                }
        }

    if (h >= 1 && h <= k) {
        for (int j = 2; j <= m; ++j) set.insert(id(n, j));
        for (int y1 = 1; y1 <= m; ++y1)
            for (int y2 = y1 + 1; y2 <= m; ++y2)
                for (int i = 1; i <= h; ++i) cross(i * i, k * k + i, y1, n, y2);
        for (int y = 2; y <= m; ++y) {
            Path p;
            run(p, 1, n, y);
            emit(c.witness.paths, std::move(p));
        }
    } else if (h > k) {
        for (int j = 1; j <= m; ++j) set.insert(id(n, j));
        for (int y1 = 1; y1 <= m; ++y1)
            for (int y2 = y1 + 1; y2 <= m; ++y2) {
                for (int i = 1; i <= k; ++i) cross(i * i, k * k + i, y1, n, y2);
                for (int i = 1; i <= h - k; ++i) cross(n, k * (k + 1) + i, y1, i * i, y2);
            }
        for (int j = 1; j <= m; ++j) {
            Path p;
            run(p, 1, n, j);
            emit(c.witness.paths, std::move(p));
        }
    }

    c.set.assign(set.begin(), set.end());
    c.witness.set = c.set;
    canonicalize(c.witness);
    return c;
}

}  // namespace sge
