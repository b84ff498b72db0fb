#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sgcc/edge_set.hpp"
#include "sgcc/error.hpp"

namespace sgcc {

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    int sign = 1;  // +1 or -1

    VertexId other(VertexId w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected signed multigraph. Vertices are 1..n, edges 1..m in insertion order.
/// Loops are rejected; parallel edges are allowed.
class SignedGraph {
public:
    SignedGraph() = default;

    SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        require(n_ >= 0, ErrorKind::invalid_input, "negative vertex count");
        incident_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            const auto id = static_cast<EdgeId>(i + 1);
            require(e.u >= 1 && e.u <= n_ && e.v >= 1 && e.v <= n_, ErrorKind::invalid_input,
                    "edge " + std::to_string(id) + ": vertex id out of range");
            require(e.u != e.v, ErrorKind::invalid_input, "edge " + std::to_string(id) + ": loop edge");
            require(e.sign == 1 || e.sign == -1, ErrorKind::invalid_input,
                    "edge " + std::to_string(id) + ": sign must be +1 or -1");
            incident_[static_cast<std::size_t>(e.u)].push_back(id);
            incident_[static_cast<std::size_t>(e.v)].push_back(id);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e - 1)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int sign(EdgeId e) const { return edge(e).sign; }
    bool negative(EdgeId e) const { return edge(e).sign < 0; }
    VertexId other(EdgeId e, VertexId v) const { return edge(e).other(v); }

    std::span<const EdgeId> incident(VertexId v) const { return incident_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    EdgeSet all_edges() const {
        EdgeSet s(edge_count());
        for (EdgeId e = 1; e <= edge_count(); ++e) s.insert(e);
        return s;
    }
    EdgeSet empty_set() const { return EdgeSet(edge_count()); }

    EdgeSet negative_edges() const {
        EdgeSet s(edge_count());
        for (EdgeId e = 1; e <= edge_count(); ++e)
            if (negative(e)) s.insert(e);
        return s;
    }
    int negative_count() const { return negative_edges().size(); }

    /// Same structure with a replaced signature.
    SignedGraph with_signs(const std::vector<int>& signs) const {
        auto copy = edges_;
        for (std::size_t i = 0; i < copy.size(); ++i) copy[i].sign = signs[i];
        return SignedGraph(n_, std::move(copy));
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

// ---------------------------------------------------------------------------
// Text format: "p sg <n> <m>" then m lines "e <u> <v> <+|->"; '#' starts a comment line.

inline SignedGraph parse_signed_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    auto syntax = [&](const std::string& msg) {
        fail(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            long long n = -1;
            long long m = -1;
            if (header) syntax("duplicate header");
            if (!(ls >> kind >> n >> m) || kind != "sg" || n < 0 || m < 0) syntax("expected 'p sg <n> <m>'");
            header = {static_cast<int>(n), static_cast<int>(m)};
        } else if (tag == "e") {
            if (!header) syntax("edge before header");
            long long u = 0;
            long long v = 0;
            std::string s;
            if (!(ls >> u >> v >> s)) syntax("expected 'e <u> <v> <+|->'");
            int sign = 0;
            if (s == "+" || s == "+1") sign = 1;
            else if (s == "-" || s == "-1" || s == "−") sign = -1;
            else syntax("bad sign '" + s + "'");
            if (u < 1 || v < 1 || u > header->first || v > header->first) syntax("vertex id out of range");
            if (u == v) syntax("loop edge");
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), sign});
        } else {
            syntax("unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#') syntax("trailing characters");
    }
    if (!header) fail(ErrorKind::invalid_input, "missing 'p sg' header");
    if (static_cast<int>(edges.size()) != header->second)
        fail(ErrorKind::invalid_input, "edge count mismatch: header says " + std::to_string(header->second) +
                                           ", found " + std::to_string(edges.size()));
    return SignedGraph(header->first, std::move(edges));
}

inline SignedGraph parse_signed_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_signed_graph(in);
}

inline void write_signed_graph(std::ostream& out, const SignedGraph& g, const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "p sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

inline std::string to_text(const SignedGraph& g) {
    std::ostringstream out;
    write_signed_graph(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// Switching

/// Flips every edge with exactly one endpoint in `vertices`.
inline SignedGraph switch_at(const SignedGraph& g, const std::vector<VertexId>& vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (VertexId v : vertices) {
        require(v >= 1 && v <= g.vertex_count(), ErrorKind::invalid_input, "unknown vertex " + std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> signs;
    signs.reserve(g.edges().size());
    for (const auto& e : g.edges())
        signs.push_back(in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)] ? -e.sign : e.sign);
    return g.with_signs(signs);
}

// ---------------------------------------------------------------------------
// Structure predicates on an edge-masked view of g. Vertices are those touched by the mask
// unless `all_vertices` is set.

inline bool is_cubic(const SignedGraph& g) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

inline std::vector<int> degrees_in(const SignedGraph& g, const EdgeSet& mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    mask.for_each([&](EdgeId e) {
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
    });
    return deg;
}

inline std::vector<VertexId> vertices_of(const SignedGraph& g, const EdgeSet& mask) {
    auto deg = degrees_in(g, mask);
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] > 0) out.push_back(v);
    return out;
}

/// Component label per vertex (0 for vertices not touched by mask); returns number of components.
inline int components(const SignedGraph& g, const EdgeSet& mask, std::vector<int>& label, bool all_vertices = false) {
    auto deg = degrees_in(g, mask);
    label.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    int count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 1; s <= g.vertex_count(); ++s) {
        if (label[static_cast<std::size_t>(s)] || (!all_vertices && deg[static_cast<std::size_t>(s)] == 0)) continue;
        label[static_cast<std::size_t>(s)] = ++count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (!mask.contains(e)) continue;
                VertexId w = g.other(e, v);
                if (!label[static_cast<std::size_t>(w)]) {
                    label[static_cast<std::size_t>(w)] = count;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

inline bool is_connected(const SignedGraph& g, const EdgeSet& mask, bool all_vertices = false) {
    std::vector<int> label;
    return components(g, mask, label, all_vertices) <= 1;
}

inline bool is_connected(const SignedGraph& g) { return is_connected(g, g.all_edges(), true); }

/// Cutedges of the masked multigraph (parallel edges are never bridges).
inline EdgeSet bridges(const SignedGraph& g, const EdgeSet& mask) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> disc(n + 1, 0);
    std::vector<int> low(n + 1, 0);
    EdgeSet out(g.edge_count());
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
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (!mask.contains(e) || e == f.parent_edge) continue;
                VertexId w = g.other(e, f.v);
                auto wi = static_cast<std::size_t>(w);
                if (disc[wi]) {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
                } else {
                    disc[wi] = low[wi] = ++timer;
                    stack.push_back({w, e, 0});
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    auto pi = static_cast<std::size_t>(p.v);
                    auto di = static_cast<std::size_t>(done.v);
                    low[pi] = std::min(low[pi], low[di]);
                    if (low[di] > disc[pi]) out.insert(done.parent_edge);
                }
            }
        }
    }
    return out;
}

struct BridgeReport {
    bool two_edge_connected = false;
    std::vector<EdgeId> bridges;
};

inline BridgeReport is_two_edge_connected(const SignedGraph& g) {
    BridgeReport r;
    r.bridges = bridges(g, g.all_edges()).ids();
    r.two_edge_connected = is_connected(g) && r.bridges.empty();
    return r;
}

/// G+ : the positive edges, on all vertices, with original ids.
inline EdgeSet positive_subgraph(const SignedGraph& g) { return g.all_edges() - g.negative_edges(); }

// ---------------------------------------------------------------------------
// Trees

/// BFS spanning tree (forest) of the masked graph from `root`, scanning edges in id order.
inline EdgeSet bfs_tree(const SignedGraph& g, const EdgeSet& mask, VertexId root) {
    EdgeSet tree(g.edge_count());
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<VertexId> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
        std::sort(inc.begin(), inc.end());
        for (EdgeId e : inc) {
            if (!mask.contains(e)) continue;
            VertexId w = g.other(e, v);
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            tree.insert(e);
            queue.push_back(w);
        }
    }
    return tree;
}

/// True iff `tree` is acyclic and connects every vertex of g.
inline bool is_spanning_tree(const SignedGraph& g, const EdgeSet& tree) {
    return tree.size() == g.vertex_count() - 1 && is_connected(g, tree, true);
}

/// Edge sequence of the unique path from s to t inside an acyclic edge set; nullopt if disconnected.
inline std::optional<std::vector<EdgeId>> tree_path(const SignedGraph& g, const EdgeSet& tree, VertexId s, VertexId t) {
    std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    via[static_cast<std::size_t>(s)] = 0;
    std::vector<VertexId> queue{s};
    for (std::size_t head = 0; head < queue.size() && via[static_cast<std::size_t>(t)] < 0; ++head) {
        VertexId v = queue[head];
        for (EdgeId e : g.incident(v)) {
            if (!tree.contains(e)) continue;
            VertexId w = g.other(e, v);
            if (via[static_cast<std::size_t>(w)] >= 0) continue;
            via[static_cast<std::size_t>(w)] = e;
            queue.push_back(w);
        }
    }
    if (via[static_cast<std::size_t>(t)] < 0) return std::nullopt;
    std::vector<EdgeId> path;
    for (VertexId v = t; v != s;) {
        EdgeId e = via[static_cast<std::size_t>(v)];
        path.push_back(e);
        v = g.other(e, v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace sgcc
