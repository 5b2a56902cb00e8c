#include "sge/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sge/structure.hpp"

namespace sge {

MultipartiteSpec MultipartiteSpec::of(std::vector<int> parts) {
    if (parts.size() < 2)
        throw HypothesisError("multipartite formula requires at least two parts");
    std::sort(parts.begin(), parts.end());
    if (parts.front() < 2)
        throw HypothesisError("multipartite formula requires every part size >= 2, got " +
                              std::to_string(parts.front()));
    return {std::move(parts)};
}

PrismSpec PrismSpec::of(int n, int m) {
    if (m < 3)
        throw HypothesisError("path-times-complete formula requires clique size >= 3, got " +
                              std::to_string(m));
    if (n < 2)
        throw HypothesisError("path-times-complete formula requires path order >= 2, got " +
                              std::to_string(n));
    int k = 1;
    while ((k + 1) * (k + 1) <= n) ++k;
    return {n, m, k, n - k * k};
}

int sge_complete_bipartite(int n, int m) {
    if (n < m) std::swap(n, m);
    if (m < 2)
        throw HypothesisError("bipartite formula requires both parts >= 2, got " +
                              std::to_string(m));
    if (n % 2 == 0) return n == m ? n + 1 : n;
    if (n == m) return n + 2;
    if (n == m + 1) return n + 1;
    return n;
}

int sge_complete_multipartite(const MultipartiteSpec& spec) {
    const auto& p = spec.parts;
    const int n1 = p[0], n2 = p[1];
    const int s = std::accumulate(p.begin() + 1, p.end(), 0);
    if (n1 % 2 == 0) return (n2 == n1 || n2 == n1 + 1) ? s + 1 : s;
    return n2 == n1 ? s + 2 : s;
}

int sge_path_times_complete(const PrismSpec& spec) {
    if (spec.h == 0) return spec.m * spec.k;
    if (spec.h <= spec.k) return spec.m * spec.k + spec.m - 1;
    return spec.m * spec.k + spec.m;
}

int sge_complete(int n) {
    if (n < 1) throw HypothesisError("complete graph formula requires n >= 1");
    return n == 1 ? 0 : n;
}

std::optional<int> sge_single_universal(const Graph& g) {
    if (universal_vertices(g).size() != 1) return std::nullopt;
    return g.order() - 1;
}

}  // namespace sge
