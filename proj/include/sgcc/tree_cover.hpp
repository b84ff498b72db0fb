#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgcc/cycle_tree.hpp"

namespace sgcc {

/// Exact non-negative rational, always reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        long long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// How many times `fam` covers cycle D: sum over members of |E(D) ∩ E(member)|, divided by |E(D)|.
/// Empty when some edge of D is uncovered.
inline std::optional<Rational> cycle_multiplicity(const Cycle& d, const CircuitFamily& fam) {
    long long total = 0;
    EdgeSet seen(d.edges.universe());
    for (const auto& c : fam.circuits) {
        EdgeSet common = c.edges() & d.edges;
        total += common.size();
        seen |= common;
    }
    if (!(seen == d.edges)) return std::nullopt;
    return Rational(total, d.length());
}

// ---------------------------------------------------------------------------
// Boundary walk of a cactus

struct BoundaryWalk {
    std::vector<int> leaf_cycles;                  // indices into CycleTree::cycles, in walk order
    std::vector<VertexId> attachments;             // where the walk enters each leaf-cycle
    std::vector<std::vector<EdgeId>> segments;     // segments[i] runs from leaf i to leaf i+1 (mod k)
};

namespace detail {

struct WalkStep {
    EdgeId edge;
    int block;  // cycle index, or -1 for a tree edge
    VertexId from;
    VertexId to;
};

inline std::vector<WalkStep> outer_walk(const SignedGraph& g, const CycleTree& ct, VertexId root, int first_block) {
    const int nc = static_cast<int>(ct.cycles.size());
    // Blocks at each vertex: cycles as their index, tree edges as nc + edge id.
    std::vector<std::vector<int>> at(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (int i = 0; i < nc; ++i)
        for (VertexId v : ct.cycles[static_cast<std::size_t>(i)].vertices) at[static_cast<std::size_t>(v)].push_back(i);
    ct.tree_edges.for_each([&](EdgeId e) {
        at[static_cast<std::size_t>(g.edge(e).u)].push_back(nc + e);
        at[static_cast<std::size_t>(g.edge(e).v)].push_back(nc + e);
    });
    for (auto& list : at) std::sort(list.begin(), list.end());
    if (first_block >= 0) {
        auto& list = at[static_cast<std::size_t>(root)];
        std::stable_partition(list.begin(), list.end(), [&](int b) { return b == first_block; });
    }

    std::vector<WalkStep> steps;
    std::function<void(VertexId, int)> visit = [&](VertexId v, int from_block) {
        for (int b : at[static_cast<std::size_t>(v)]) {
            if (b == from_block) continue;
            if (b >= nc) {
                EdgeId e = b - nc;
                VertexId w = g.other(e, v);
                steps.push_back({e, -1, v, w});
                visit(w, b);
                steps.push_back({e, -1, w, v});
            } else {
                const Cycle& c = ct.cycles[static_cast<std::size_t>(b)];
                const int len = c.length();
                auto r = static_cast<int>(std::find(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin());
                for (int j = 0; j < len; ++j) {
                    auto idx = static_cast<std::size_t>((r + j) % len);
                    VertexId w = c.vertices[static_cast<std::size_t>((r + j + 1) % len)];
                    steps.push_back({c.order[idx], b, c.vertices[idx], w});
                    if (w != v) visit(w, b);
                }
            }
        }
    };
    visit(root, -2);
    return steps;
}

}  // namespace detail

/// Leaf-cycles in the cyclic order of an outerplanar boundary walk, with the joining segments.
inline BoundaryWalk boundary_walk_order(const CycleTree& ct) {
    require(ct.host != nullptr, ErrorKind::precondition, "cycle-tree has no host graph");
    const SignedGraph& g = *ct.host;
    require(ct.leaf_count() >= 2, ErrorKind::precondition, "boundary walk needs at least two leaf-cycles");
    auto deg = degrees_in(g, ct.edges);

    int first_leaf = -1;
    for (std::size_t i = 0; i < ct.cycles.size() && first_leaf < 0; ++i)
        if (ct.leaf[i]) first_leaf = static_cast<int>(i);
    VertexId root = 0;
    for (VertexId v : ct.cycles[static_cast<std::size_t>(first_leaf)].vertices)
        if (deg[static_cast<std::size_t>(v)] > 2) root = v;
    check_invariant(root != 0, "leaf-cycle without attachment in a multi-cycle cactus");

    auto steps = detail::outer_walk(g, ct, root, first_leaf);
    check_invariant(static_cast<int>(steps.size()) == 2 * ct.tree_edges.size() + (ct.size() - ct.tree_edges.size()),
                    "boundary walk length");

    // Runs of leaf-cycle steps.
    struct Run {
        std::size_t begin;
        std::size_t end;
        int cycle;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < steps.size();) {
        int b = steps[i].block;
        if (b >= 0 && ct.leaf[static_cast<std::size_t>(b)]) {
            std::size_t j = i;
            while (j < steps.size() && steps[j].block == b) ++j;
            check_invariant(static_cast<int>(j - i) == ct.cycles[static_cast<std::size_t>(b)].length(),
                            "leaf-cycle not traversed contiguously");
            runs.push_back({i, j, b});
            i = j;
        } else {
            ++i;
        }
    }
    check_invariant(static_cast<int>(runs.size()) == ct.leaf_count(), "leaf-cycle visited twice by the walk");

    BoundaryWalk out;
    const std::size_t k = runs.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Run& r = runs[i];
        out.leaf_cycles.push_back(r.cycle);
        out.attachments.push_back(steps[r.begin].from);
        std::size_t from = r.end;
        std::size_t to = i + 1 < k ? runs[i + 1].begin : steps.size();
        std::vector<EdgeId> seg;
        std::vector<VertexId> seen;
        for (std::size_t s = from; s < to; ++s) {
            seg.push_back(steps[s].edge);
            seen.push_back(steps[s].from);
        }
        seen.push_back(to < steps.size() ? steps[to].from : root);
        std::sort(seen.begin(), seen.end());
        check_invariant(std::adjacent_find(seen.begin(), seen.end()) == seen.end() || seg.empty(),
                        "boundary segment is not a path");
        out.segments.push_back(std::move(seg));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle-tree cover: leaf-cycles covered once, other cycles at most 3/2 times.

namespace detail {

// Edges of the component of (h - removed) that contains vertex x.
inline EdgeSet component_at(const SignedGraph& g, const EdgeSet& h, VertexId x) {
    EdgeSet out(g.edge_count());
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<VertexId> stack{x};
    seen[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            if (!h.contains(e)) continue;
            out.insert(e);
            VertexId w = g.other(e, v);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return out;
}

// Attachment positions along a cycle and the gaps (edge runs) between consecutive ones.
struct Attachments {
    std::vector<VertexId> vertices;
    std::vector<std::vector<EdgeId>> gaps;  // gaps[t] runs from vertices[t] to vertices[t+1 mod size]
};

inline Attachments attachments_of(const Cycle& c, const std::vector<int>& deg) {
    Attachments a;
    std::vector<int> pos;
    for (int i = 0; i < c.length(); ++i)
        if (deg[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(i)])] > 2) {
            pos.push_back(i);
            a.vertices.push_back(c.vertices[static_cast<std::size_t>(i)]);
        }
    for (std::size_t t = 0; t < pos.size(); ++t) {
        std::vector<EdgeId> gap;
        int from = pos[t];
        int to = pos[(t + 1) % pos.size()];
        int i = from;
        do {
            gap.push_back(c.order[static_cast<std::size_t>(i)]);
            i = (i + 1) % c.length();
        } while (i != to);
        a.gaps.push_back(std::move(gap));
    }
    return a;
}

inline std::vector<EdgeId> sorted_union(const std::vector<std::vector<EdgeId>>& parts, const std::vector<std::size_t>& pick) {
    std::vector<EdgeId> out;
    for (auto i : pick) out.insert(out.end(), parts[i].begin(), parts[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

inline void tree_cover_rec(const SignedGraph& g, EdgeSet h, CircuitFamily& out);

// Cutvertex splitting H into two parts with an even number of negative cycles each.
inline std::optional<std::pair<EdgeSet, EdgeSet>> even_split(const SignedGraph& g, const CycleTree& ct,
                                                             const std::vector<int>& deg) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (deg[static_cast<std::size_t>(v)] < 3) continue;
        EdgeSet away = ct.edges;
        for (EdgeId e : g.incident(v)) away.erase(e);
        std::vector<int> label;
        components(g, away, label, true);
        // Branch of each edge of H at v: the component of its far endpoint.
        std::vector<int> branch_ids;
        auto branch_of = [&](EdgeId e) {
            const Edge& ed = g.edge(e);
            VertexId w = ed.u == v ? ed.v : (ed.v == v ? ed.u : ed.u);
            return label[static_cast<std::size_t>(w)];
        };
        ct.edges.for_each([&](EdgeId e) { branch_ids.push_back(branch_of(e)); });
        std::sort(branch_ids.begin(), branch_ids.end());
        branch_ids.erase(std::unique(branch_ids.begin(), branch_ids.end()), branch_ids.end());
        if (branch_ids.size() < 2) continue;

        std::vector<EdgeSet> parts(branch_ids.size(), EdgeSet(g.edge_count()));
        std::vector<int> neg(branch_ids.size(), 0);
        auto index_of = [&](int lbl) {
            return static_cast<std::size_t>(std::lower_bound(branch_ids.begin(), branch_ids.end(), lbl) - branch_ids.begin());
        };
        ct.edges.for_each([&](EdgeId e) { parts[index_of(branch_of(e))].insert(e); });
        for (const auto& c : ct.cycles)
            if (c.negative()) ++neg[index_of(branch_of(c.order.front()))];

        for (std::size_t i = 0; i < parts.size(); ++i)
            if (neg[i] % 2 == 0) return std::make_pair(parts[i], ct.edges - parts[i]);
        if (parts.size() >= 4) {
            EdgeSet first = parts[0] | parts[1];
            return std::make_pair(first, ct.edges - first);
        }
    }
    return std::nullopt;
}

inline void tree_cover_rec(const SignedGraph& g, EdgeSet h, CircuitFamily& out) {
    h = prune_pendant(g, h);
    if (h.empty()) return;
    CycleTree ct = analyze_cycle_tree(g, h);
    const int neg = ct.negative_cycle_count();
    check_invariant(neg % 2 == 0, "odd number of negative cycles in a recursive subproblem");
    auto deg = degrees_in(g, h);

    if (auto split = even_split(g, ct, deg)) {
        tree_cover_rec(g, split->first, out);
        tree_cover_rec(g, split->second, out);
        return;
    }

    auto positive = std::find_if(ct.cycles.begin(), ct.cycles.end(), [](const Cycle& c) { return c.positive(); });
    if (positive != ct.cycles.end()) {
        const Cycle& c = *positive;
        Attachments at = attachments_of(c, deg);
        const std::size_t count = at.vertices.size();
        check_invariant(count % 2 == 0, "positive cycle with an odd number of attached components");
        if (count > 0) {
            // Two ways to pair consecutive components; keep the one with shorter joining segments.
            std::vector<std::size_t> pick[2];
            int total[2] = {0, 0};
            for (int o = 0; o < 2; ++o)
                for (std::size_t t = static_cast<std::size_t>(o); t < count; t += 2) {
                    pick[o].push_back(t);
                    total[o] += static_cast<int>(at.gaps[t].size());
                }
            int o = total[0] < total[1] ? 0
                    : total[1] < total[0] ? 1
                    : (sorted_union(at.gaps, pick[1]) < sorted_union(at.gaps, pick[0]) ? 1 : 0);
            check_invariant(2 * total[o] <= c.length(), "segment selection exceeds half the cycle");
            const EdgeSet rest = h - c.edges;
            for (std::size_t t : pick[o]) {
                EdgeSet sub = component_at(g, rest, at.vertices[t]) | component_at(g, rest, at.vertices[(t + 1) % count]);
                for (EdgeId e : at.gaps[t]) sub.insert(e);
                tree_cover_rec(g, sub, out);
            }
        }
        out.add(Circuit(c));
        return;
    }

    if (neg == 0) return;
    if (neg == 2) {
        auto b = circuit_from_edges(g, h);
        check_invariant(b.has_value() && b->is_barbell(), "two-cycle cactus is not a barbell");
        out.add(std::move(*b));
        return;
    }

    // Negative cycle with the most attached components.
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < ct.cycles.size(); ++i) {
        std::size_t cnt = attachments_of(ct.cycles[i], deg).vertices.size();
        const Cycle& ci = ct.cycles[i];
        const Cycle& cb = ct.cycles[best];
        if (cnt > best_count || (cnt == best_count && (ci.length() < cb.length() ||
                                                        (ci.length() == cb.length() && lex_less(ci.edges, cb.edges))))) {
            best = i;
            best_count = cnt;
        }
    }
    const Cycle& d = ct.cycles[best];
    Attachments at = attachments_of(d, deg);
    const std::size_t count = at.vertices.size();
    check_invariant(count >= 3 && count % 2 == 1, "negative cycle split needs an odd number (>= 3) of components");

    // Q0 at position j; pairs (j+1, j+2), (j+3, j+4), ...
    std::optional<std::size_t> start;
    int best_total = 0;
    std::vector<EdgeId> best_key;
    for (std::size_t j = 0; j < count; ++j) {
        std::vector<std::size_t> pick;
        int total = 0;
        for (std::size_t t = j + 1; t + 1 < j + count; t += 2) {
            pick.push_back(t % count);
            total += static_cast<int>(at.gaps[t % count].size());
        }
        auto key = sorted_union(at.gaps, pick);
        if (!start || total < best_total || (total == best_total && key < best_key)) {
            start = j;
            best_total = total;
            best_key = std::move(key);
        }
    }
    check_invariant(2 * best_total <= d.length(), "segment selection exceeds half the cycle");
    const EdgeSet rest = h - d.edges;
    const std::size_t j = *start;
    tree_cover_rec(g, component_at(g, rest, at.vertices[j]) | d.edges, out);
    for (std::size_t t = j + 1; t + 1 < j + count; t += 2) {
        std::size_t p = t % count;
        std::size_t q = (t + 1) % count;
        EdgeSet sub = component_at(g, rest, at.vertices[p]) | component_at(g, rest, at.vertices[q]);
        for (EdgeId e : at.gaps[p]) sub.insert(e);
        tree_cover_rec(g, sub, out);
    }
}

}  // namespace detail

struct CoverageAudit {
    bool ok = true;
    std::string problem;
    std::vector<Rational> multiplicity;  // per cycle of the cycle-tree
    int max_tree_edge_coverage = 0;
};

/// Checks leaf-cycles covered exactly once and the rest at most 3/2 times, with exact arithmetic.
inline CoverageAudit audit_cycle_tree_cover(const CycleTree& ct, const CircuitFamily& fam) {
    CoverageAudit a;
    for (std::size_t i = 0; i < ct.cycles.size(); ++i) {
        auto t = cycle_multiplicity(ct.cycles[i], fam);
        if (!t) {
            a.ok = false;
            a.problem = "cycle " + std::to_string(i) + " not fully covered";
            a.multiplicity.emplace_back(0, 1);
            continue;
        }
        a.multiplicity.push_back(*t);
        if (ct.leaf[i]) {
            auto cov = fam.coverage(ct.edges.universe());
            bool once = true;
            ct.cycles[i].edges.for_each([&](EdgeId e) { once = once && cov[static_cast<std::size_t>(e)] == 1; });
            if (!once) {
                a.ok = false;
                a.problem = "leaf-cycle " + std::to_string(i) + " covered more than once";
            }
        } else if (!(*t <= Rational(3, 2))) {
            a.ok = false;
            a.problem = "cycle " + std::to_string(i) + " covered " + t->str() + " times";
        }
    }
    auto cov = fam.coverage(ct.edges.universe());
    ct.tree_edges.for_each([&](EdgeId e) { a.max_tree_edge_coverage = std::max(a.max_tree_edge_coverage, cov[static_cast<std::size_t>(e)]); });
    return a;
}

/// Family of circuits of a signed cycle-tree with an even number of negative cycles that covers
/// every leaf-cycle once and every other cycle at most 3/2 times.
inline CircuitFamily cycle_tree_cover(const CycleTree& ct) {
    require(ct.host != nullptr, ErrorKind::precondition, "cycle-tree has no host graph");
    require(ct.negative_cycle_count() % 2 == 0, ErrorKind::precondition,
            "cycle-tree has an odd number of negative cycles");
    const SignedGraph& g = *ct.host;
    CircuitFamily fam;
    detail::tree_cover_rec(g, ct.edges, fam);
    for (const auto& c : fam.circuits) check_invariant(c.edges().subset_of(ct.edges), "circuit leaves the cycle-tree");
    auto audit = audit_cycle_tree_cover(ct, fam);
    check_invariant(audit.ok, audit.problem);
    // Tree edges are covered at most once, so the total is at most |E(H)| + l/2.
    check_invariant(2 * fam.length() <= 2 * ct.size() + ct.non_leaf_length(), "cycle-tree cover exceeds |E(H)| + l/2");
    return fam;
}

// ---------------------------------------------------------------------------

struct TreeCoverStats {
    int chain_length = -1;       // barbell chain over the leaf-cycles, -1 when not built at top level
    int tree_cover_length = -1;  // cycle-tree cover, -1 when not built at top level
    int positive_leaves_stripped = 0;
};

namespace detail {

inline CircuitFamily short_cover_rec(const SignedGraph& g, EdgeSet h, TreeCoverStats& stats, bool top) {
    h = prune_pendant(g, h);
    CircuitFamily fam;
    if (h.empty()) return fam;
    CycleTree ct = analyze_cycle_tree(g, h);
    for (std::size_t i = 0; i < ct.cycles.size(); ++i) {
        if (ct.cycles[i].positive() && ct.leaf[i]) {
            ++stats.positive_leaves_stripped;
            fam = short_cover_rec(g, h - ct.cycles[i].edges, stats, top);
            fam.add(Circuit(ct.cycles[i]));
            return fam;
        }
    }
    CircuitFamily chain;
    auto walk = boundary_walk_order(ct);
    const std::size_t k = walk.leaf_cycles.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Cycle& a = ct.cycles[static_cast<std::size_t>(walk.leaf_cycles[i])];
        const Cycle& b = ct.cycles[static_cast<std::size_t>(walk.leaf_cycles[(i + 1) % k])];
        chain.add(Circuit(make_barbell(g, a, b, walk.segments[i])));
    }
    check_invariant(chain.length() == 2 * ct.size() - ct.non_leaf_length(), "barbell chain length");
    CircuitFamily by_tree_cover = cycle_tree_cover(ct);
    if (top) {
        stats.chain_length = chain.length();
        stats.tree_cover_length = by_tree_cover.length();
    }
    return chain.length() < by_tree_cover.length() ? chain : by_tree_cover;
}

}  // namespace detail

/// Family covering every cycle of a signed cycle-tree (even number of negative cycles)
/// with total length at most 4/3 |E(H)|.
inline CircuitFamily short_cycle_tree_cover(const CycleTree& ct, TreeCoverStats* stats = nullptr) {
    require(ct.host != nullptr, ErrorKind::precondition, "cycle-tree has no host graph");
    require(ct.negative_cycle_count() % 2 == 0, ErrorKind::precondition,
            "cycle-tree has an odd number of negative cycles");
    TreeCoverStats local;
    CircuitFamily fam = detail::short_cover_rec(*ct.host, ct.edges, local, true);
    EdgeSet covered = fam.covered(ct.edges.universe());
    for (const auto& c : ct.cycles) check_invariant(c.edges.subset_of(covered), "short cycle-tree cover misses a cycle edge");
    check_invariant(3 * fam.length() <= 4 * ct.size(), "short cycle-tree cover exceeds 4/3 |E(H)|");
    if (stats) *stats = local;
    return fam;
}

}  // namespace sgcc
