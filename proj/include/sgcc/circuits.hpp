#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "sgcc/cycles.hpp"

namespace sgcc {

/// All cycles of the masked graph with at most max_length edges, as edge sets in discovery order.
inline std::vector<EdgeSet> enumerate_cycle_sets(const SignedGraph& g, const EdgeSet& mask, int max_length) {
    std::vector<EdgeSet> out;
    const int n = g.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
    std::vector<EdgeId> path_edges;
    EdgeSet current(g.edge_count());

    // Cycles are rooted at their smallest vertex and recorded once per direction pair.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId s, VertexId v) {
        for (EdgeId e : g.incident(v)) {
            if (!mask.contains(e) || (!path_edges.empty() && e == path_edges.back())) continue;
            VertexId w = g.other(e, v);
            const int len = static_cast<int>(path_edges.size()) + 1;
            if (w == s) {
                if (len >= 2 && path_edges.front() < e) {
                    EdgeSet c = current;
                    c.insert(e);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (w < s || on_path[static_cast<std::size_t>(w)] || len + 1 > max_length) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path_edges.push_back(e);
            current.insert(e);
            dfs(s, w);
            current.erase(e);
            path_edges.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (VertexId s = 1; s <= n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return out;
}

inline std::vector<Cycle> enumerate_cycles(const SignedGraph& g, const EdgeSet& mask, int max_length) {
    std::vector<Cycle> out;
    for (const auto& s : enumerate_cycle_sets(g, mask, max_length)) out.push_back(classify_cycle(g, s));
    return out;
}

namespace detail {

struct CycleInfo {
    EdgeSet edges;
    std::vector<char> on;  // vertex membership
    int length = 0;
    int sign = 1;
};

inline std::vector<CycleInfo> cycle_infos(const SignedGraph& g, const std::vector<EdgeSet>& sets) {
    std::vector<CycleInfo> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        CycleInfo ci;
        ci.edges = s;
        ci.on.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        s.for_each([&](EdgeId e) {
            ci.on[static_cast<std::size_t>(g.edge(e).u)] = 1;
            ci.on[static_cast<std::size_t>(g.edge(e).v)] = 1;
            ci.sign *= g.sign(e);
        });
        ci.length = s.size();
        out.push_back(std::move(ci));
    }
    return out;
}

// Calls f(path edges) for each simple path from a vertex of `a` to a vertex of `b` whose interior
// avoids both cycles, with at most max_len edges.
template <typename F>
void for_each_connecting_path(const SignedGraph& g, const CycleInfo& a, const CycleInfo& b, int max_len, F&& f) {
    if (max_len < 1) return;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<EdgeId> path;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        for (EdgeId e : g.incident(v)) {
            if (a.edges.contains(e) || b.edges.contains(e)) continue;
            VertexId w = g.other(e, v);
            auto wi = static_cast<std::size_t>(w);
            if (a.on[wi] || used[wi]) continue;
            path.push_back(e);
            if (b.on[wi]) {
                f(path);
            } else if (static_cast<int>(path.size()) < max_len) {
                used[wi] = 1;
                dfs(w);
                used[wi] = 0;
            }
            path.pop_back();
        }
    };
    for (VertexId x = 1; x <= g.vertex_count(); ++x)
        if (a.on[static_cast<std::size_t>(x)]) dfs(x);
}

}  // namespace detail

/// Edge sets of every circuit (positive cycle or barbell) with at most max_length edges,
/// sorted lexicographically by edge ids. Each circuit appears once.
inline std::vector<EdgeSet> enumerate_circuit_sets(const SignedGraph& g, int max_length) {
    const EdgeSet all = g.all_edges();
    auto cycle_sets = enumerate_cycle_sets(g, all, std::min(max_length, std::max(g.vertex_count(), 2)));
    auto infos = detail::cycle_infos(g, cycle_sets);
    std::vector<EdgeSet> out;
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < infos.size(); ++i) {
        if (infos[i].sign > 0) out.push_back(infos[i].edges);
        else neg.push_back(i);
    }
    for (std::size_t x = 0; x < neg.size(); ++x) {
        const auto& a = infos[neg[x]];
        for (std::size_t y = x + 1; y < neg.size(); ++y) {
            const auto& b = infos[neg[y]];
            const int budget = max_length - a.length - b.length;
            if (budget < 0 || a.edges.intersects(b.edges)) continue;
            int shared = 0;
            for (VertexId v = 1; v <= g.vertex_count(); ++v) shared += a.on[static_cast<std::size_t>(v)] && b.on[static_cast<std::size_t>(v)];
            if (shared == 1) {
                out.push_back(a.edges | b.edges);
            } else if (shared == 0) {
                detail::for_each_connecting_path(g, a, b, budget, [&](const std::vector<EdgeId>& path) {
                    EdgeSet s = a.edges | b.edges;
                    for (EdgeId e : path) s.insert(e);
                    out.push_back(std::move(s));
                });
            }
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline std::vector<Circuit> enumerate_circuits(const SignedGraph& g, int max_length) {
    std::vector<Circuit> out;
    for (const auto& s : enumerate_circuit_sets(g, max_length)) {
        auto c = circuit_from_edges(g, s);
        check_invariant(c.has_value(), "enumerated edge set is not a circuit");
        out.push_back(std::move(*c));
    }
    return out;
}

/// Largest length any circuit of g can have.
inline int circuit_length_cap(const SignedGraph& g) { return g.edge_count() + g.vertex_count(); }

/// Shortest circuit satisfying pred, lexicographically smallest among ties. Iterative deepening on length.
inline std::optional<Circuit> shortest_circuit(const SignedGraph& g, const std::function<bool(const Circuit&)>& pred) {
    const int cap = std::min(circuit_length_cap(g), g.edge_count());
    for (int len = 2; len <= cap; ++len) {
        std::optional<Circuit> best;
        for (const auto& s : enumerate_circuit_sets(g, len)) {
            if (s.size() != len) continue;
            auto c = circuit_from_edges(g, s);
            if (c && pred(*c)) {
                best = std::move(c);
                break;  // sets are sorted lexicographically
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

/// A circuit carries a negative edge iff it is a barbell or a positive cycle through a negative edge.
inline bool has_negative_edge(const SignedGraph& g, const Circuit& c) {
    return c.is_barbell() || c.edges().intersects(g.negative_edges());
}

/// Length of a shortest circuit containing a negative edge; nullopt stands for infinity.
inline std::optional<int> signed_girth(const SignedGraph& g) {
    auto c = shortest_circuit(g, [&](const Circuit& x) { return has_negative_edge(g, x); });
    if (!c) return std::nullopt;
    return c->length();
}

}  // namespace sgcc
