#ifndef BIMAX_TESTS_SUPPORT_HPP
#define BIMAX_TESTS_SUPPORT_HPP

// Shared helpers for the test suites. The isomorphism check here is an
// independent brute-force oracle: it works on the abstract adjacency
// relation with backtracking over vertex bijections and shares no code with
// the library's canonicalization.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bimax/graph.hpp"

namespace bimax::test {

// Abstract n x n adjacency rows (bitmasks) with X labeled 0..k-1, Y k..n-1.
inline std::vector<std::uint32_t> abstract_adjacency(const BipartiteGraph& g) {
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (int x = 0; x < g.x_size(); ++x) {
        for (int y = 0; y < g.y_size(); ++y) {
            if (g.edge(x, y)) {
                int u = x, v = g.x_size() + y;
                adj[u] |= std::uint32_t{1} << v;
                adj[v] |= std::uint32_t{1} << u;
            }
        }
    }
    return adj;
}

namespace detail {

inline bool extend_mapping(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<int>& map, std::vector<bool>& used, std::size_t depth) {
    std::size_t n = a.size();
    if (depth == n) return true;
    for (std::size_t img = 0; img < n; ++img) {
        if (used[img]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < depth && ok; ++prev) {
            bool e1 = a[depth] >> prev & 1;
            bool e2 = b[img] >> map[prev] & 1;
            ok = e1 == e2;
        }
        if (!ok) continue;
        used[img] = true;
        map[depth] = static_cast<int>(img);
        if (extend_mapping(a, b, map, used, depth + 1)) return true;
        used[img] = false;
    }
    return false;
}

}  // namespace detail

// Exhaustive isomorphism test between abstract graphs (any bijection, so
// side swaps and cross-side component placements are covered).
inline bool brute_force_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
    std::vector<std::uint32_t> a = abstract_adjacency(g1);
    std::vector<std::uint32_t> b = abstract_adjacency(g2);
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(a.size(), false);
    return detail::extend_mapping(a, b, map, used, 0);
}

// Uniform-ish random instance: random sides, then m random cells.
inline BipartiteGraph random_bipartite(int n, std::mt19937& rng) {
    int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    int cells = k * (n - k);
    int m = std::uniform_int_distribution<int>(0, cells)(rng);
    std::vector<int> order(cells);
    for (int i = 0; i < cells; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    BipartiteGraph g(k, n - k);
    for (int i = 0; i < m; ++i) g.set_edge(order[i] % k, order[i] / k, true);
    return g;
}

// Random within-side relabeling, optionally exchanging the sides.
inline BipartiteGraph shuffled_copy(const BipartiteGraph& g, bool swap_sides, std::mt19937& rng) {
    std::vector<int> px(g.x_size()), py(g.y_size());
    for (int i = 0; i < g.x_size(); ++i) px[i] = i;
    for (int i = 0; i < g.y_size(); ++i) py[i] = i;
    std::shuffle(px.begin(), px.end(), rng);
    std::shuffle(py.begin(), py.end(), rng);
    if (swap_sides) {
        BipartiteGraph h(g.y_size(), g.x_size());
        for (int x = 0; x < g.x_size(); ++x)
            for (int y = 0; y < g.y_size(); ++y)
                if (g.edge(x, y)) h.set_edge(py[y], px[x], true);
        return h;
    }
    BipartiteGraph h(g.x_size(), g.y_size());
    for (int x = 0; x < g.x_size(); ++x)
        for (int y = 0; y < g.y_size(); ++y)
            if (g.edge(x, y)) h.set_edge(px[x], py[y], true);
    return h;
}

}  // namespace bimax::test

#endif
