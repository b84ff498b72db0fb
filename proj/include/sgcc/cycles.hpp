#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sgcc/signed_graph.hpp"

namespace sgcc {

/// Connected 2-regular edge set with a traversal order.
/// order[i] joins vertices[i] and vertices[(i + 1) % length].
struct Cycle {
    EdgeSet edges;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> order;
    int sign = 1;

    int length() const { return static_cast<int>(order.size()); }
    bool positive() const { return sign > 0; }
    bool negative() const { return sign < 0; }
    bool touches(VertexId v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }
};

/// Validates `edges` as a cycle of g and computes its sign.
inline Cycle classify_cycle(const SignedGraph& g, const EdgeSet& edges) {
    require(!edges.empty(), ErrorKind::invalid_input, "cycle edge set is empty");
    require(edges.universe() == g.edge_count(), ErrorKind::invalid_input, "edge set does not belong to this graph");
    auto deg = degrees_in(g, edges);
    VertexId start = 0;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        require(d == 0 || d == 2, ErrorKind::invalid_input,
                "not a cycle: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        if (d && !start) start = v;
    }
    Cycle c;
    c.edges = edges;
    VertexId v = start;
    EdgeId prev = 0;
    do {
        EdgeId next = 0;
        for (EdgeId e : g.incident(v))
            if (edges.contains(e) && e != prev && (next == 0 || e < next)) next = e;
        c.vertices.push_back(v);
        c.order.push_back(next);
        c.sign *= g.sign(next);
        prev = next;
        v = g.other(next, v);
    } while (v != start);
    require(c.length() == edges.size(), ErrorKind::invalid_input, "not a cycle: edge set is disconnected");
    return c;
}

inline Cycle classify_cycle(const SignedGraph& g, const std::vector<EdgeId>& ids) {
    return classify_cycle(g, EdgeSet::from(g.edge_count(), ids));
}

/// Two edge-disjoint negative cycles joined by a (possibly empty) path running from `a` to `b`.
struct Barbell {
    Cycle a;
    Cycle b;
    std::vector<EdgeId> path;
    std::vector<VertexId> path_vertices;  // path.size() + 1 vertices, from a to b

    int length() const { return a.length() + b.length() + static_cast<int>(path.size()); }
};

namespace detail {

inline std::optional<std::vector<VertexId>> walk_path(const SignedGraph& g, const std::vector<EdgeId>& path,
                                                      VertexId start) {
    std::vector<VertexId> vs{start};
    VertexId v = start;
    for (EdgeId e : path) {
        const Edge& ed = g.edge(e);
        if (ed.u != v && ed.v != v) return std::nullopt;
        v = ed.other(v);
        vs.push_back(v);
    }
    return vs;
}

}  // namespace detail

inline Barbell make_barbell(const SignedGraph& g, Cycle a, Cycle b, std::vector<EdgeId> path) {
    auto bad = [](const std::string& why) { fail(ErrorKind::invalid_input, "not a barbell: " + why); };
    if (!a.negative() || !b.negative()) bad("a cycle is positive");
    if (a.edges.intersects(b.edges)) bad("cycles share an edge");
    std::vector<VertexId> shared;
    for (VertexId v : a.vertices)
        if (b.touches(v)) shared.push_back(v);

    Barbell out;
    if (path.empty()) {
        if (shared.size() != 1) bad("empty path requires cycles sharing exactly one vertex");
        out.path_vertices = {shared.front()};
    } else {
        if (!shared.empty()) bad("cycles joined by a path must be vertex-disjoint");
        std::optional<std::vector<VertexId>> vs;
        const Edge& first = g.edge(path.front());
        for (VertexId s : {first.u, first.v}) {
            if (a.touches(s)) {
                vs = detail::walk_path(g, path, s);
                break;
            }
        }
        if (!vs) bad("path does not start on the first cycle");
        if (!b.touches(vs->back())) bad("path does not end on the second cycle");
        for (std::size_t i = 1; i + 1 < vs->size(); ++i)
            if (a.touches((*vs)[i]) || b.touches((*vs)[i])) bad("path touches a cycle internally");
        auto sorted = *vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("path repeats a vertex");
        for (EdgeId e : path)
            if (a.edges.contains(e) || b.edges.contains(e)) bad("path reuses a cycle edge");
        out.path_vertices = std::move(*vs);
    }
    out.a = std::move(a);
    out.b = std::move(b);
    out.path = std::move(path);
    return out;
}

/// A positive cycle or a barbell.
class Circuit {
public:
    explicit Circuit(Cycle c) : edges_(c.edges), body_(std::move(c)) {
        require(std::get<Cycle>(body_).positive(), ErrorKind::invalid_input, "a negative cycle is not a circuit");
    }
    explicit Circuit(Barbell b) : edges_(b.a.edges | b.b.edges), body_(std::move(b)) {
        const auto& bb = std::get<Barbell>(body_);
        for (EdgeId e : bb.path) edges_.insert(e);
    }

    bool is_barbell() const { return std::holds_alternative<Barbell>(body_); }
    const Cycle& cycle() const { return std::get<Cycle>(body_); }
    const Barbell& barbell() const { return std::get<Barbell>(body_); }
    const EdgeSet& edges() const { return edges_; }
    int length() const { return edges_.size(); }

    /// Edges lying on a cycle of the circuit (everything except a barbell's path).
    EdgeSet cycle_edges() const {
        if (!is_barbell()) return edges_;
        return barbell().a.edges | barbell().b.edges;
    }

    friend bool operator==(const Circuit& x, const Circuit& y) { return x.edges_ == y.edges_; }

private:
    EdgeSet edges_;
    std::variant<Cycle, Barbell> body_;
};

inline bool circuit_less(const Circuit& x, const Circuit& y) { return lex_less(x.edges(), y.edges()); }

struct CircuitFamily {
    std::vector<Circuit> circuits;

    int length() const {
        int l = 0;
        for (const auto& c : circuits) l += c.length();
        return l;
    }
    std::size_t size() const { return circuits.size(); }
    bool empty() const { return circuits.empty(); }
    void add(Circuit c) { circuits.push_back(std::move(c)); }
    void append(const CircuitFamily& other) {
        circuits.insert(circuits.end(), other.circuits.begin(), other.circuits.end());
    }

    /// coverage[e] = number of members containing edge e (index 0 unused).
    std::vector<int> coverage(int m) const {
        std::vector<int> cov(static_cast<std::size_t>(m) + 1, 0);
        for (const auto& c : circuits) c.edges().for_each([&](EdgeId e) { ++cov[static_cast<std::size_t>(e)]; });
        return cov;
    }
    EdgeSet covered(int m) const {
        EdgeSet s(m);
        for (const auto& c : circuits) s |= c.edges();
        return s;
    }
};

// ---------------------------------------------------------------------------

/// Recognizes an edge set as a circuit (positive cycle or barbell) of g.
inline std::optional<Circuit> circuit_from_edges(const SignedGraph& g, const EdgeSet& edges) {
    if (edges.empty() || !is_connected(g, edges)) return std::nullopt;
    auto deg = degrees_in(g, edges);
    std::vector<VertexId> deg3;
    std::vector<VertexId> deg4;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        if (d == 3) deg3.push_back(v);
        else if (d == 4) deg4.push_back(v);
        else if (d != 0 && d != 2) return std::nullopt;
    }
    try {
        if (deg3.empty() && deg4.empty()) {
            Cycle c = classify_cycle(g, edges);
            if (!c.positive()) return std::nullopt;
            return Circuit(std::move(c));
        }
        if (deg3.empty() && deg4.size() == 1) {
            // Two cycles through one vertex: walk one of them out.
            VertexId x = deg4.front();
            EdgeSet first(g.edge_count());
            EdgeId e = 0;
            for (EdgeId f : g.incident(x))
                if (edges.contains(f) && (e == 0 || f < e)) e = f;
            VertexId v = g.other(e, x);
            first.insert(e);
            while (v != x) {
                EdgeId next = 0;
                for (EdgeId f : g.incident(v))
                    if (edges.contains(f) && !first.contains(f)) next = f;
                if (!next) return std::nullopt;
                first.insert(next);
                v = g.other(next, v);
            }
            Cycle a = classify_cycle(g, first);
            Cycle b = classify_cycle(g, edges - first);
            return Circuit(make_barbell(g, std::move(a), std::move(b), {}));
        }
        if (deg3.size() == 2 && deg4.empty()) {
            EdgeSet path_edges = bridges(g, edges);
            EdgeSet rest = edges - path_edges;
            std::vector<int> label;
            if (components(g, rest, label) != 2) return std::nullopt;
            EdgeSet ca(g.edge_count());
            EdgeSet cb(g.edge_count());
            rest.for_each([&](EdgeId f) { (label[static_cast<std::size_t>(g.edge(f).u)] == 1 ? ca : cb).insert(f); });
            Cycle a = classify_cycle(g, ca);
            Cycle b = classify_cycle(g, cb);
            // Order the path from a to b.
            VertexId start = a.touches(deg3[0]) ? deg3[0] : deg3[1];
            std::vector<EdgeId> path;
            EdgeSet left = path_edges;
            VertexId v = start;
            while (!left.empty()) {
                EdgeId next = 0;
                for (EdgeId f : g.incident(v))
                    if (left.contains(f)) next = f;
                if (!next) return std::nullopt;
                left.erase(next);
                path.push_back(next);
                v = g.other(next, v);
            }
            return Circuit(make_barbell(g, std::move(a), std::move(b), std::move(path)));
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fundamental cycles and cycle-space arithmetic

inline std::vector<Cycle> fundamental_cycles(const SignedGraph& g, const EdgeSet& tree, const std::vector<EdgeId>& chords) {
    require(is_spanning_tree(g, tree), ErrorKind::precondition, "tree is not a spanning tree");
    std::vector<Cycle> out;
    for (EdgeId e : chords) {
        require(e >= 1 && e <= g.edge_count() && !tree.contains(e), ErrorKind::precondition,
                "chord " + std::to_string(e) + " is not a non-tree edge");
        auto path = tree_path(g, tree, g.edge(e).u, g.edge(e).v);
        EdgeSet s = EdgeSet::from(g.edge_count(), *path);
        s.insert(e);
        out.push_back(classify_cycle(g, s));
    }
    return out;
}

/// Edge set of the fundamental cycle of chord e with respect to tree.
inline EdgeSet fundamental_cycle_edges(const SignedGraph& g, const EdgeSet& tree, EdgeId e) {
    auto path = tree_path(g, tree, g.edge(e).u, g.edge(e).v);
    require(path.has_value(), ErrorKind::precondition, "chord endpoints not joined by the tree");
    EdgeSet s = EdgeSet::from(g.edge_count(), *path);
    s.insert(e);
    return s;
}

/// Splits an edge set whose vertices all have degree 2 into its connected cycles, ordered by smallest edge id.
inline std::vector<Cycle> split_disjoint_cycles(const SignedGraph& g, const EdgeSet& edges) {
    auto deg = degrees_in(g, edges);
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        require(d == 0 || d == 2, ErrorKind::precondition,
                "vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " in the symmetric difference");
    }
    std::vector<int> label;
    int k = components(g, edges, label);
    std::vector<EdgeSet> parts(static_cast<std::size_t>(k), EdgeSet(g.edge_count()));
    edges.for_each([&](EdgeId e) { parts[static_cast<std::size_t>(label[static_cast<std::size_t>(g.edge(e).u)] - 1)].insert(e); });
    std::vector<Cycle> out;
    for (auto& p : parts) out.push_back(classify_cycle(g, p));
    std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) { return x.edges.first() < y.edges.first(); });
    return out;
}

/// Symmetric difference of even subgraphs of a subcubic graph, decomposed into vertex-disjoint cycles.
inline std::vector<Cycle> symmetric_difference_cycles(const SignedGraph& g, const std::vector<EdgeSet>& sets) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        require(g.degree(v) <= 3, ErrorKind::precondition, "graph has a vertex of degree above 3");
    EdgeSet acc(g.edge_count());
    for (const auto& s : sets) acc ^= s;
    auto deg = degrees_in(g, acc);
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        require(deg[static_cast<std::size_t>(v)] % 2 == 0, ErrorKind::precondition,
                "symmetric difference has odd degree at vertex " + std::to_string(v));
    return split_disjoint_cycles(g, acc);
}

// ---------------------------------------------------------------------------
// Cover text format: "C <ids>" for a positive cycle, "B <ids of a> | <path ids> | <ids of b>" for a barbell.

inline void write_circuit(std::ostream& out, const Circuit& c) {
    auto ids = [&](const std::vector<EdgeId>& v) {
        for (EdgeId e : v) out << ' ' << e;
    };
    if (!c.is_barbell()) {
        out << 'C';
        ids(c.cycle().order);
    } else {
        const auto& b = c.barbell();
        out << 'B';
        ids(b.a.order);
        out << " |";
        ids(b.path);
        out << " |";
        ids(b.b.order);
    }
    out << '\n';
}

inline void write_family(std::ostream& out, const CircuitFamily& fam) {
    for (const auto& c : fam.circuits) write_circuit(out, c);
}

inline std::string to_text(const CircuitFamily& fam) {
    std::ostringstream out;
    write_family(out, fam);
    return out.str();
}

/// One line of a cover file. Syntax errors throw; a well-formed line that is not a circuit of g
/// is kept with `circuit` empty and the reason in `problem`.
struct ParsedMember {
    int line = 0;
    EdgeSet edges;
    std::optional<Circuit> circuit;
    std::string problem;
};

inline std::vector<ParsedMember> parse_members(const SignedGraph& g, std::istream& in) {
    std::vector<ParsedMember> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#' || line[first] == '{') continue;
        auto where = [&](const std::string& msg) {
            fail(ErrorKind::invalid_input, "cover line " + std::to_string(line_no) + ": " + msg);
        };
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "C" && tag != "B") where("unknown circuit tag '" + tag + "'");
        std::vector<std::vector<EdgeId>> parts(1);
        std::string tok;
        while (ls >> tok) {
            if (tok == "|") {
                parts.emplace_back();
                continue;
            }
            try {
                std::size_t pos = 0;
                int id = std::stoi(tok, &pos);
                if (pos != tok.size()) where("bad edge id '" + tok + "'");
                if (id < 1 || id > g.edge_count()) where("edge id " + tok + " out of range");
                parts.back().push_back(id);
            } catch (const std::logic_error&) {
                where("bad edge id '" + tok + "'");
            }
        }
        if (tag == "C" && parts.size() != 1) where("positive cycle takes one id list");
        if (tag == "B" && parts.size() != 3) where("barbell needs 'a | path | b'");

        ParsedMember m;
        m.line = line_no;
        m.edges = EdgeSet(g.edge_count());
        for (const auto& part : parts)
            for (EdgeId e : part) m.edges.insert(e);
        try {
            if (tag == "C") {
                Cycle c = classify_cycle(g, parts[0]);
                if (!c.positive()) fail(ErrorKind::invalid_input, "negative cycle is not a circuit");
                m.circuit.emplace(std::move(c));
            } else {
                m.circuit.emplace(make_barbell(g, classify_cycle(g, parts[0]), classify_cycle(g, parts[2]), parts[1]));
            }
        } catch (const Error& e) {
            m.problem = e.what();
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<ParsedMember> parse_members(const SignedGraph& g, const std::string& text) {
    std::istringstream in(text);
    return parse_members(g, in);
}

/// Strict reader: every member must be a circuit of g.
inline CircuitFamily parse_family(const SignedGraph& g, std::istream& in) {
    CircuitFamily fam;
    for (auto& m : parse_members(g, in)) {
        require(m.circuit.has_value(), ErrorKind::invalid_input, "cover line " + std::to_string(m.line) + ": " + m.problem);
        fam.add(std::move(*m.circuit));
    }
    return fam;
}

inline CircuitFamily parse_family(const SignedGraph& g, const std::string& text) {
    std::istringstream in(text);
    return parse_family(g, in);
}

}  // namespace sgcc
