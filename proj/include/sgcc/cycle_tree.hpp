#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "sgcc/cycles.hpp"
#include "sgcc/random.hpp"

namespace sgcc {

/// Connected subgraph without degree-1 vertices whose cycles are pairwise edge-disjoint.
/// Cycles are sorted by smallest edge id; leaf[i] flags leaf-cycles.
struct CycleTree {
    const SignedGraph* host = nullptr;
    EdgeSet edges;
    std::vector<Cycle> cycles;
    std::vector<bool> leaf;
    EdgeSet tree_edges;

    bool empty() const { return edges.empty(); }
    int size() const { return edges.size(); }
    int negative_cycle_count() const {
        return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.negative(); }));
    }
    int leaf_count() const { return static_cast<int>(std::count(leaf.begin(), leaf.end(), true)); }
    /// Total length of the non-leaf cycles.
    int non_leaf_length() const {
        int l = 0;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            if (!leaf[i]) l += cycles[i].length();
        return l;
    }
};

/// Removes degree-1 vertices until none remain.
inline EdgeSet prune_pendant(const SignedGraph& g, EdgeSet edges) {
    auto deg = degrees_in(g, edges);
    std::vector<VertexId> stack;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) stack.push_back(v);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (deg[static_cast<std::size_t>(v)] != 1) continue;
        for (EdgeId e : g.incident(v)) {
            if (!edges.contains(e)) continue;
            edges.erase(e);
            --deg[static_cast<std::size_t>(v)];
            VertexId w = g.other(e, v);
            if (--deg[static_cast<std::size_t>(w)] == 1) stack.push_back(w);
            break;
        }
    }
    return edges;
}

/// Biconnected blocks of the masked multigraph as edge sets.
inline std::vector<EdgeSet> blocks(const SignedGraph& g, const EdgeSet& mask) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> disc(n + 1, 0);
    std::vector<int> low(n + 1, 0);
    std::vector<EdgeId> edge_stack;
    std::vector<EdgeSet> out;
    int timer = 0;
    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (VertexId s = 1; s <= g.vertex_count(); ++s) {
        if (disc[static_cast<std::size_t>(s)]) continue;
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = ++timer;
        stack.push_back({s, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            const auto vi = static_cast<std::size_t>(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (!mask.contains(e) || e == f.parent_edge) continue;
                VertexId w = g.other(e, f.v);
                auto wi = static_cast<std::size_t>(w);
                if (disc[wi]) {
                    if (disc[wi] < disc[vi]) {
                        edge_stack.push_back(e);
                        low[vi] = std::min(low[vi], disc[wi]);
                    }
                } else {
                    edge_stack.push_back(e);
                    disc[wi] = low[wi] = ++timer;
                    stack.push_back({w, e, 0});
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) continue;
                Frame& p = stack.back();
                auto pi = static_cast<std::size_t>(p.v);
                auto di = static_cast<std::size_t>(done.v);
                low[pi] = std::min(low[pi], low[di]);
                if (low[di] >= disc[pi]) {
                    EdgeSet block(g.edge_count());
                    while (true) {
                        EdgeId e = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(e);
                        if (e == done.parent_edge) break;
                    }
                    out.push_back(std::move(block));
                }
            }
        }
    }
    return out;
}

/// Validates `edges` as a cycle-tree of g and computes its cycles and leaf flags.
inline CycleTree analyze_cycle_tree(const SignedGraph& g, const EdgeSet& edges, bool require_signed = false) {
    CycleTree ct;
    ct.host = &g;
    ct.edges = edges;
    ct.tree_edges = EdgeSet(g.edge_count());
    if (edges.empty()) return ct;
    require(is_connected(g, edges), ErrorKind::precondition, "not a cycle-tree: disconnected");
    auto deg = degrees_in(g, edges);
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        require(deg[static_cast<std::size_t>(v)] != 1, ErrorKind::precondition,
                "not a cycle-tree: vertex " + std::to_string(v) + " has degree 1");
    for (auto& b : blocks(g, edges)) {
        if (b.size() == 1) {
            ct.tree_edges |= b;
            continue;
        }
        auto bdeg = degrees_in(g, b);
        bool is_cycle = std::all_of(bdeg.begin(), bdeg.end(), [](int d) { return d == 0 || d == 2; });
        require(is_cycle, ErrorKind::precondition, "not a cycle-tree: cycles share an edge");
        ct.cycles.push_back(classify_cycle(g, b));
    }
    std::sort(ct.cycles.begin(), ct.cycles.end(),
              [](const Cycle& x, const Cycle& y) { return x.edges.first() < y.edges.first(); });
    for (const auto& c : ct.cycles) {
        int attachments = 0;
        for (VertexId v : c.vertices) attachments += deg[static_cast<std::size_t>(v)] > 2;
        ct.leaf.push_back(attachments <= 1);
        if (require_signed)
            require(c.edges.intersects(g.negative_edges()), ErrorKind::precondition,
                    "not a signed cycle-tree: a cycle has no negative edge");
    }
    return ct;
}

// ---------------------------------------------------------------------------

/// Signed cycle-tree spanned by the fundamental cycles of the negative edges (minus `excluded`)
/// with respect to a spanning tree of G+.
inline CycleTree extract_cycle_tree(const SignedGraph& g, const EdgeSet& tree, std::optional<EdgeId> excluded = {}) {
    require(is_spanning_tree(g, tree), ErrorKind::precondition, "tree does not span the graph");
    require(!tree.intersects(g.negative_edges()), ErrorKind::precondition, "tree is not a subgraph of G+");
    if (excluded) require(*excluded >= 1 && *excluded <= g.edge_count() && g.negative(*excluded), ErrorKind::precondition,
                          "excluded edge must be negative");
    EdgeSet acc(g.edge_count());
    EdgeSet wanted = g.negative_edges();
    if (excluded) wanted.erase(*excluded);
    wanted.for_each([&](EdgeId e) { acc ^= fundamental_cycle_edges(g, tree, e); });

    EdgeSet q(g.edge_count());
    for (auto& c : split_disjoint_cycles(g, acc))
        if (c.edges.intersects(wanted)) q |= c.edges;

    // Minimal connected H with Q ⊆ H ⊆ Q ∪ T.
    EdgeSet h = prune_pendant(g, q | tree);
    for (bool changed = true; changed;) {
        changed = false;
        EdgeSet removable = (h - q) - bridges(g, h);
        if (!removable.empty()) {
            h.erase(removable.first());
            h = prune_pendant(g, h);
            changed = true;
        }
    }
    CycleTree ct = analyze_cycle_tree(g, h, true);

    EdgeSet on_cycles(g.edge_count());
    for (const auto& c : ct.cycles) on_cycles |= c.edges;
    check_invariant(wanted.subset_of(on_cycles), "a negative edge is off the cycles of the extracted cycle-tree");
    check_invariant((h & g.negative_edges()) == wanted, "extracted cycle-tree carries the wrong negative edges");
    check_invariant(on_cycles == q, "extracted cycle-tree has cycles outside Q");
    check_invariant(ct.negative_cycle_count() % 2 == wanted.size() % 2, "negative cycle parity mismatch");
    return ct;
}

// ---------------------------------------------------------------------------
// Spanning trees of a masked graph

/// Calls f(tree) for every spanning tree of the masked graph over all vertices; stops and returns
/// false once more than `limit` trees have been produced.
template <typename F>
bool for_each_spanning_tree(const SignedGraph& g, const EdgeSet& mask, long limit, F&& f) {
    const int n = g.vertex_count();
    auto ids = mask.ids();
    long produced = 0;
    EdgeSet chosen(g.edge_count());
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);

    auto find = [](std::vector<int>& p, int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    };
    auto connected_with = [&](std::size_t from) {
        EdgeSet avail = chosen;
        for (std::size_t j = from; j < ids.size(); ++j) avail.insert(ids[j]);
        return is_connected(g, avail, true);
    };
    bool ok = true;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int count) {
        if (!ok) return;
        if (count == n - 1) {
            if (++produced > limit) {
                ok = false;
                return;
            }
            f(chosen);
            return;
        }
        if (i >= ids.size()) return;
        EdgeId e = ids[i];
        std::iota(parent.begin(), parent.end(), 0);
        chosen.for_each([&](EdgeId c) {
            parent[static_cast<std::size_t>(find(parent, g.edge(c).u))] = find(parent, g.edge(c).v);
        });
        if (find(parent, g.edge(e).u) != find(parent, g.edge(e).v)) {
            chosen.insert(e);
            rec(i + 1, count + 1);
            chosen.erase(e);
        }
        if (connected_with(i + 1)) rec(i + 1, count);
    };
    if (n <= 1) {
        f(chosen);
        return true;
    }
    if (!is_connected(g, mask, true)) return true;
    rec(0, 0);
    return ok;
}

/// Random spanning tree (Kruskal over a shuffled edge order).
inline EdgeSet random_spanning_tree(const SignedGraph& g, const EdgeSet& mask, Rng& rng) {
    auto ids = mask.ids();
    rng.shuffle(ids);
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    EdgeSet tree(g.edge_count());
    for (EdgeId e : ids) {
        int a = find(g.edge(e).u);
        int b = find(g.edge(e).v);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        tree.insert(e);
    }
    return tree;
}

struct CycleCountOptions {
    int random_trees = 64;
    std::uint64_t seed = 1;
    long exhaustive_limit = 20000;  // enumerate every spanning tree of G+ when there are at most this many
};

struct CycleCountResult {
    CycleTree tree;
    EdgeSet spanning_tree;
    long trees_evaluated = 0;
    bool exhaustive = false;
};

/// Cycle-tree with the fewest cycles (then fewest edges) over a portfolio of spanning trees of G+.
/// The portfolio is every spanning tree when their number is within `exhaustive_limit`.
inline CycleCountResult minimize_cycle_count(const SignedGraph& g, std::optional<EdgeId> excluded,
                                             const CycleCountOptions& opt = {}) {
    const EdgeSet plus = positive_subgraph(g);
    require(is_connected(g, plus, true), ErrorKind::precondition, "G+ is not connected and spanning");
    std::optional<CycleCountResult> best;
    long evaluated = 0;
    auto offer = [&](const EdgeSet& tree) {
        ++evaluated;
        CycleTree ct = extract_cycle_tree(g, tree, excluded);
        if (!best || ct.cycles.size() < best->tree.cycles.size() ||
            (ct.cycles.size() == best->tree.cycles.size() && ct.size() < best->tree.size())) {
            best = CycleCountResult{std::move(ct), tree, 0, false};
        }
    };
    std::vector<EdgeSet> all;
    bool complete = for_each_spanning_tree(g, plus, opt.exhaustive_limit, [&](const EdgeSet& t) { all.push_back(t); });
    if (complete) {
        for (const auto& t : all) offer(t);
    } else {
        for (VertexId r = 1; r <= g.vertex_count(); ++r) offer(bfs_tree(g, plus, r));
        Rng rng(opt.seed);
        for (int i = 0; i < opt.random_trees; ++i) offer(random_spanning_tree(g, plus, rng));
    }
    best->trees_evaluated = evaluated;
    best->exhaustive = complete;
    return std::move(*best);
}

}  // namespace sgcc
