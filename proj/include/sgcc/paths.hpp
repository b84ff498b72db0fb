#pragma once

#include <limits>
#include <vector>

#include "sgcc/signed_graph.hpp"

namespace sgcc {

struct Path {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // edges.size() + 1 entries

    int length() const { return static_cast<int>(edges.size()); }
};

/// k vertex-disjoint paths from `sources` to `targets` whose interiors avoid both sets,
/// minimizing total length (successive shortest paths on the vertex-split network).
inline std::vector<Path> disjoint_paths(const SignedGraph& g, const std::vector<VertexId>& sources,
                                        const std::vector<VertexId>& targets, int k = 2,
                                        const EdgeSet* mask = nullptr) {
    const int n = g.vertex_count();
    std::vector<char> role(static_cast<std::size_t>(n) + 1, 0);  // 1 source, 2 target
    for (VertexId s : sources) {
        require(s >= 1 && s <= n, ErrorKind::invalid_input, "unknown vertex " + std::to_string(s));
        role[static_cast<std::size_t>(s)] = 1;
    }
    for (VertexId t : targets) {
        require(t >= 1 && t <= n, ErrorKind::invalid_input, "unknown vertex " + std::to_string(t));
        require(role[static_cast<std::size_t>(t)] != 1, ErrorKind::precondition, "source and target sets intersect");
        role[static_cast<std::size_t>(t)] = 2;
    }

    struct Arc {
        int to;
        int cap;
        int cost;
        EdgeId edge;  // 0 for internal arcs
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n + 4));
    const int src = 2 * n + 2;
    const int snk = 2 * n + 3;
    auto in_node = [](VertexId v) { return 2 * v; };
    auto out_node = [](VertexId v) { return 2 * v + 1; };
    auto add = [&](int a, int b, int cost, EdgeId e) {
        adj[static_cast<std::size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, 1, cost, e});
        adj[static_cast<std::size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0, -cost, e});
    };
    for (VertexId v = 1; v <= n; ++v) {
        switch (role[static_cast<std::size_t>(v)]) {
            case 0: add(in_node(v), out_node(v), 0, 0); break;
            case 1: add(src, out_node(v), 0, 0); break;
            default: add(in_node(v), snk, 0, 0); break;
        }
    }
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        if (mask && !mask->contains(e)) continue;
        const Edge& ed = g.edge(e);
        add(out_node(ed.u), in_node(ed.v), 1, e);
        add(out_node(ed.v), in_node(ed.u), 1, e);
    }

    const int nodes = 2 * n + 4;
    for (int round = 0; round < k; ++round) {
        // Bellman-Ford: residual costs may be negative.
        std::vector<int> dist(static_cast<std::size_t>(nodes), std::numeric_limits<int>::max());
        std::vector<int> via(static_cast<std::size_t>(nodes), -1);
        dist[static_cast<std::size_t>(src)] = 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (int a = 0; a < nodes; ++a) {
                if (dist[static_cast<std::size_t>(a)] == std::numeric_limits<int>::max()) continue;
                for (int id : adj[static_cast<std::size_t>(a)]) {
                    const Arc& arc = arcs[static_cast<std::size_t>(id)];
                    if (arc.cap <= 0) continue;
                    int nd = dist[static_cast<std::size_t>(a)] + arc.cost;
                    if (nd < dist[static_cast<std::size_t>(arc.to)]) {
                        dist[static_cast<std::size_t>(arc.to)] = nd;
                        via[static_cast<std::size_t>(arc.to)] = id;
                        changed = true;
                    }
                }
            }
        }
        require(via[static_cast<std::size_t>(snk)] >= 0, ErrorKind::precondition,
                "fewer than " + std::to_string(k) + " disjoint paths exist");
        for (int v = snk; v != src;) {
            int id = via[static_cast<std::size_t>(v)];
            arcs[static_cast<std::size_t>(id)].cap -= 1;
            arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
            v = arcs[static_cast<std::size_t>(id ^ 1)].to;
        }
    }

    // Decompose the flow into paths.
    std::vector<Path> out;
    for (int id : adj[static_cast<std::size_t>(src)]) {
        const Arc& first = arcs[static_cast<std::size_t>(id)];
        if (id % 2 != 0 || first.cap != 0) continue;
        Path p;
        int node = first.to;  // out_node(source vertex)
        p.vertices.push_back(node / 2);
        while (node != snk) {
            int next = -1;
            for (int a : adj[static_cast<std::size_t>(node)]) {
                const Arc& arc = arcs[static_cast<std::size_t>(a)];
                if (a % 2 == 0 && arc.cap == 0) {
                    next = a;
                    break;
                }
            }
            check_invariant(next >= 0, "flow decomposition lost the path");
            const Arc& arc = arcs[static_cast<std::size_t>(next)];
            if (arc.edge) {
                p.edges.push_back(arc.edge);
                p.vertices.push_back(arc.to / 2);
            }
            node = arc.to;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace sgcc
