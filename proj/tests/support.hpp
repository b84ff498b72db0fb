#pragma once

// Independent reference implementations used to cross-check the library. They share no code
// with the library beyond the graph container and are deliberately naive.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sgcc/sgcc.hpp"

namespace support {

using namespace sgcc;

inline SignedGraph graph(const std::string& text) { return parse_signed_graph(text); }

inline SignedGraph k4(std::vector<std::pair<int, int>> negatives = {}) {
    std::vector<Edge> edges;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            int s = 1;
            for (auto [x, y] : negatives)
                if ((x == a && y == b) || (x == b && y == a)) s = -1;
            edges.push_back({a, b, s});
        }
    return SignedGraph(4, edges);
}

inline SignedGraph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i + 1, (i + 1) % 5 + 1, 1});
        e.push_back({i + 1, i + 6, 1});
        e.push_back({i + 6, (i + 2) % 5 + 6, 1});
    }
    return SignedGraph(10, e);
}

inline SignedGraph with_negatives(const SignedGraph& g, const std::vector<EdgeId>& ids) {
    std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
    for (EdgeId e : ids) signs[static_cast<std::size_t>(e - 1)] = -1;
    return g.with_signs(signs);
}

inline EdgeSet set_of(const SignedGraph& g, std::initializer_list<EdgeId> ids) { return EdgeSet(g.edge_count(), ids); }

/// Edge id of the first edge joining a and b.
inline EdgeId edge_between(const SignedGraph& g, VertexId a, VertexId b) {
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    return 0;
}

// ---------------------------------------------------------------------------

/// Minimum negative edge count over every vertex subset (all 2^n, not 2^(n-1)).
inline int brute_negativeness(const SignedGraph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        int neg = 0;
        for (const auto& e : g.edges()) {
            bool flip = ((u >> (e.u - 1)) & 1) != ((u >> (e.v - 1)) & 1);
            neg += (flip ? -e.sign : e.sign) < 0;
        }
        best = std::min(best, neg);
    }
    return best;
}

/// Number of negative edges in the cut around vertex set u (bit i = vertex i+1), and the cut size.
inline std::pair<int, int> cut_counts(const SignedGraph& g, std::uint64_t u) {
    int neg = 0, size = 0;
    for (const auto& e : g.edges()) {
        if (((u >> (e.u - 1)) & 1) == ((u >> (e.v - 1)) & 1)) continue;
        ++size;
        neg += e.sign < 0;
    }
    return {neg, size};
}

// Rank in the signed-graphic (frame) matroid: |V(S)| minus the number of balanced components.
inline int frame_rank(const SignedGraph& g, std::uint64_t mask) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0), parity(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> touched(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask >> i & 1) touched[static_cast<std::size_t>(g.edge(i + 1).u)] = touched[static_cast<std::size_t>(g.edge(i + 1).v)] = 1;
    int vertices = 0, balanced = 0, label = 0;
    for (int s = 1; s <= n; ++s) {
        if (!touched[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)]) continue;
        ++label;
        bool ok = true;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = label;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++vertices;
            for (int i = 0; i < g.edge_count(); ++i) {
                if (!(mask >> i & 1)) continue;
                const Edge& e = g.edge(i + 1);
                if (e.u != v && e.v != v) continue;
                int w = e.u == v ? e.v : e.u;
                int want = parity[static_cast<std::size_t>(v)] ^ (e.sign < 0);
                if (!comp[static_cast<std::size_t>(w)]) {
                    comp[static_cast<std::size_t>(w)] = label;
                    parity[static_cast<std::size_t>(w)] = want;
                    stack.push_back(w);
                } else if (parity[static_cast<std::size_t>(w)] != want) {
                    ok = false;
                }
            }
        }
        balanced += ok;
    }
    return vertices - balanced;
}

/// Minimal dependent sets of the frame matroid, i.e. positive cycles and barbells, as sorted id lists.
inline std::vector<std::vector<EdgeId>> naive_circuits(const SignedGraph& g) {
    const int m = g.edge_count();
    std::vector<std::vector<EdgeId>> out;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        const int size = std::popcount(s);
        if (frame_rank(g, s) != size - 1) continue;
        bool minimal = true;
        for (int i = 0; i < m && minimal; ++i)
            if (s >> i & 1) minimal = frame_rank(g, s & ~(1u << i)) == size - 1;
        if (!minimal) continue;
        std::vector<EdgeId> ids;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) ids.push_back(i + 1);
        out.push_back(ids);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Shortest circuit cover by dynamic programming over covered-edge masks; nullopt if none exists.
inline std::optional<int> brute_scc(const SignedGraph& g) {
    const int m = g.edge_count();
    std::vector<std::uint32_t> sets;
    std::vector<int> cost;
    for (const auto& c : naive_circuits(g)) {
        std::uint32_t w = 0;
        for (EdgeId e : c) w |= 1u << (e - 1);
        sets.push_back(w);
        cost.push_back(static_cast<int>(c.size()));
    }
    const std::uint32_t full = (1u << m) - 1;
    std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
    dp[0] = 0;
    for (std::uint32_t u = 0; u <= full; ++u) {
        if (dp[u] == std::numeric_limits<int>::max()) continue;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::uint32_t v = u | sets[i];
            if (v != u) dp[v] = std::min(dp[v], dp[u] + cost[i]);
        }
    }
    if (dp[full] == std::numeric_limits<int>::max()) return std::nullopt;
    return dp[full];
}

/// Whether some multiset of circuits covers every edge exactly twice (naive search over demands).
inline bool brute_cdc(const SignedGraph& g) {
    const int m = g.edge_count();
    std::vector<std::vector<EdgeId>> circuits = naive_circuits(g);
    std::vector<int> demand(static_cast<std::size_t>(m) + 1, 2);
    std::function<bool(std::size_t)> go = [&](std::size_t from) {
        bool done = true;
        for (int e = 1; e <= m; ++e) done = done && demand[static_cast<std::size_t>(e)] == 0;
        if (done) return true;
        for (std::size_t i = from; i < circuits.size(); ++i) {
            bool fits = true;
            for (EdgeId e : circuits[i]) fits = fits && demand[static_cast<std::size_t>(e)] > 0;
            if (!fits) continue;
            for (EdgeId e : circuits[i]) --demand[static_cast<std::size_t>(e)];
            bool ok = go(i);
            for (EdgeId e : circuits[i]) ++demand[static_cast<std::size_t>(e)];
            if (ok) return true;
        }
        return false;
    };
    return go(0);
}

/// Edge subsets that are connected and 2-regular.
inline std::vector<std::vector<EdgeId>> naive_cycles(const SignedGraph& g) {
    const int m = g.edge_count();
    std::vector<std::vector<EdgeId>> out;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        std::vector<EdgeId> ids;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) ids.push_back(i + 1);
        EdgeSet set = EdgeSet::from(m, ids);
        auto deg = degrees_in(g, set);
        bool two = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; });
        if (two && is_connected(g, set)) out.push_back(ids);
    }
    return out;
}

/// Spanning trees of the masked graph by testing every (n-1)-subset.
inline std::vector<EdgeSet> brute_spanning_trees(const SignedGraph& g, const EdgeSet& mask) {
    auto ids = mask.ids();
    const int n = g.vertex_count();
    std::vector<EdgeSet> out;
    const auto k = static_cast<std::size_t>(n - 1);
    if (ids.size() < k) return out;
    std::vector<char> pick(ids.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
        EdgeSet t(g.edge_count());
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (pick[i]) t.insert(ids[i]);
        if (is_connected(g, t, true)) out.push_back(t);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// ---------------------------------------------------------------------------

/// Random signed cycle-tree of maximum degree 3 with an even number of negative cycles.
/// Cycles are joined by bridge paths hung from degree-2 vertices; every cycle carries a
/// negative edge (one or three on a negative cycle, two on a positive one).
struct GeneratedCycleTree {
    SignedGraph graph;
    std::vector<std::vector<EdgeId>> cycles;
};

inline GeneratedCycleTree random_cycle_tree(Rng& rng, int max_cycles = 7, int max_edges = 40,
                                            bool all_negative = false) {
    for (;;) {
        std::vector<Edge> edges;
        std::vector<std::vector<EdgeId>> cycles;
        std::vector<int> deg(1, 0);
        int n = 0;
        auto vertex = [&] {
            deg.push_back(0);
            return ++n;
        };
        auto add = [&](int a, int b) {
            edges.push_back({a, b, 1});
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
            return static_cast<EdgeId>(edges.size());
        };
        auto cycle_from = [&](int start) {
            int len = 2 + static_cast<int>(rng.below(5));
            std::vector<EdgeId> c;
            int prev = start;
            for (int i = 1; i < len; ++i) {
                int v = vertex();
                c.push_back(add(prev, v));
                prev = v;
            }
            c.push_back(add(prev, start));
            cycles.push_back(c);
        };
        const int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_cycles)));
        cycle_from(vertex());
        while (static_cast<int>(cycles.size()) < target && static_cast<int>(edges.size()) + 9 <= max_edges) {
            std::vector<int> free;
            for (int v = 1; v <= n; ++v)
                if (deg[static_cast<std::size_t>(v)] == 2) free.push_back(v);
            if (free.empty()) break;
            int x = free[rng.below(free.size())];
            int hops = 1 + static_cast<int>(rng.below(3));
            int prev = x;
            for (int i = 0; i < hops; ++i) {
                int v = vertex();
                add(prev, v);
                prev = v;
            }
            cycle_from(prev);
        }
        if (static_cast<int>(edges.size()) > max_edges) continue;

        // Choose which cycles are negative, keeping the count even.
        std::vector<int> negative(cycles.size(), 0);
        int count = 0;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            negative[i] = all_negative ? 1 : static_cast<int>(rng.below(2));
            count += negative[i];
        }
        if (count % 2) {
            if (all_negative) continue;
            negative.back() ^= 1;
        }
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            auto ids = cycles[i];
            rng.shuffle(ids);
            int k = negative[i] ? (ids.size() >= 3 && rng.below(3) == 0 ? 3 : 1) : 2;
            if (static_cast<int>(ids.size()) < k) k = negative[i] ? 1 : static_cast<int>(ids.size());
            for (int j = 0; j < k; ++j) edges[static_cast<std::size_t>(ids[static_cast<std::size_t>(j)] - 1)].sign = -1;
        }
        return {SignedGraph(n, edges), cycles};
    }
}

/// Every edge of the host graph, as one CycleTree.
inline CycleTree whole_tree(const SignedGraph& g) { return analyze_cycle_tree(g, g.all_edges(), true); }

// ---------------------------------------------------------------------------

/// Negativeness by the library when small enough.
inline int eps(const SignedGraph& g) { return *negativeness(g).negativeness; }

/// Random 2-edge-connected cubic signed graph whose negativeness satisfies pred.
template <typename Pred>
SignedGraph random_cubic_with(int n, std::uint64_t& seed, Pred pred) {
    for (;;) {
        Rng pick(seed * 7919 + 13);
        int negatives = static_cast<int>(pick.below(static_cast<std::uint64_t>(n + 1)));
        SignedGraph g = gen_random(n, negatives, seed++);
        if (pred(eps(g))) return g;
    }
}

}  // namespace support
