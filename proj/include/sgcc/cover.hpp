#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgcc/circuits.hpp"
#include "sgcc/cycle_tree.hpp"
#include "sgcc/negativeness.hpp"
#include "sgcc/oracle.hpp"
#include "sgcc/paths.hpp"
#include "sgcc/set_cover.hpp"
#include "sgcc/tree_cover.hpp"

namespace sgcc {

inline bool below_23_9(long long length, long long m) { return 9 * length < 23 * m; }
inline bool below_26_9(long long length, long long m) { return 9 * length < 26 * m; }

struct CoverReport {
    bool valid = false;
    std::vector<EdgeId> uncovered;
    std::vector<std::string> invalid_members;
    int length = 0;
    int m = 0;
    bool bound_23_9 = false;
    bool bound_26_9 = false;
    std::vector<int> coverage;  // coverage[e] for e in 1..m
    std::optional<int> oracle_gap;
    std::string branch = "none";
    std::string candidate = "none";
    std::vector<std::string> trace;

    /// Number of edges covered exactly k times, for each k that occurs.
    std::map<int, int> histogram() const {
        std::map<int, int> h;
        for (std::size_t e = 1; e < coverage.size(); ++e) ++h[coverage[e]];
        return h;
    }
};

namespace detail {

inline CoverReport make_report(const SignedGraph& g, const std::vector<const EdgeSet*>& members,
                               std::vector<std::string> problems) {
    CoverReport r;
    r.m = g.edge_count();
    r.coverage.assign(static_cast<std::size_t>(r.m) + 1, 0);
    for (const EdgeSet* s : members) {
        r.length += s->size();
        s->for_each([&](EdgeId e) {
            if (e >= 1 && e <= r.m) ++r.coverage[static_cast<std::size_t>(e)];
        });
    }
    for (EdgeId e = 1; e <= r.m; ++e)
        if (!r.coverage[static_cast<std::size_t>(e)]) r.uncovered.push_back(e);
    r.invalid_members = std::move(problems);
    r.valid = r.uncovered.empty() && r.invalid_members.empty();
    r.bound_23_9 = below_23_9(r.length, r.m);
    r.bound_26_9 = below_26_9(r.length, r.m);
    return r;
}

}  // namespace detail

/// Checks every member against g and computes coverage, length and the bound flags.
inline CoverReport verify_cover(const SignedGraph& g, const CircuitFamily& fam) {
    std::vector<const EdgeSet*> members;
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const EdgeSet& s = fam.circuits[i].edges();
        members.push_back(&s);
        bool in_range = s.universe() == g.edge_count();
        if (!in_range || !circuit_from_edges(g, s))
            problems.push_back("member " + std::to_string(i + 1) + " is not a circuit of the graph");
    }
    return detail::make_report(g, members, std::move(problems));
}

inline CoverReport verify_cover(const SignedGraph& g, const std::vector<ParsedMember>& parsed) {
    std::vector<const EdgeSet*> members;
    std::vector<std::string> problems;
    for (const auto& p : parsed) {
        members.push_back(&p.edges);
        if (!p.circuit) problems.push_back("line " + std::to_string(p.line) + ": " + p.problem);
    }
    return detail::make_report(g, members, std::move(problems));
}

/// Fills in length minus the exact optimum when the oracle finishes within budget.
inline void add_oracle_gap(CoverReport& r, const SignedGraph& g, const Budget& budget) {
    try {
        auto o = exact_scc(g, budget, r.valid ? std::optional<int>(r.length) : std::nullopt);
        if (o.status == SearchStatus::exact) r.oracle_gap = r.length - o.optimum;
    } catch (const Error&) {
    }
}

/// Rebuilds each member on g; circuits are preserved by switching, so this never fails for
/// families built on a switching of g.
inline CircuitFamily rehost(const SignedGraph& g, const CircuitFamily& fam) {
    CircuitFamily out;
    for (const auto& c : fam.circuits) {
        auto r = circuit_from_edges(g, c.edges());
        check_invariant(r.has_value(), "member is not a circuit after switching");
        out.add(std::move(*r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle covers of bridgeless positive subgraphs

struct BridgelessOptions {
    int exact_limit = 30;  // components with at most this many edges are solved exactly
    long long node_limit = 5'000'000;
    std::size_t pool_limit = 2000;  // short cycles offered to the heuristic
    long long improve_nodes = 2000;  // branch-and-bound nodes spent improving the greedy cover
};

namespace detail {

// Shortest cycle of comp through e (BFS in comp - e).
inline EdgeSet shortest_cycle_through(const SignedGraph& g, const EdgeSet& comp, EdgeId e) {
    EdgeSet rest = comp;
    rest.erase(e);
    const Edge& ed = g.edge(e);
    std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<VertexId> queue{ed.u};
    seen[static_cast<std::size_t>(ed.u)] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[static_cast<std::size_t>(ed.v)]; ++head) {
        VertexId x = queue[head];
        for (EdgeId f : g.incident(x)) {
            if (!rest.contains(f)) continue;
            VertexId y = g.other(f, x);
            if (seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            via[static_cast<std::size_t>(y)] = f;
            queue.push_back(y);
        }
    }
    require(seen[static_cast<std::size_t>(ed.v)], ErrorKind::precondition,
            "bridge present: edge " + std::to_string(e) + " lies on no cycle");
    EdgeSet c(g.edge_count());
    c.insert(e);
    for (VertexId x = ed.v; x != ed.u; x = g.other(via[static_cast<std::size_t>(x)], x)) c.insert(via[static_cast<std::size_t>(x)]);
    return c;
}

// Candidate pool for the heuristic: every cycle up to a length cap, plus the shortest cycle through each edge.
inline std::vector<EdgeSet> cycle_pool(const SignedGraph& g, const EdgeSet& comp, std::size_t max_pool) {
    std::vector<EdgeSet> pool;
    for (int cap = 3; cap <= comp.size(); ++cap) {
        auto next = enumerate_cycle_sets(g, comp, cap);
        if (next.size() > max_pool && !pool.empty()) break;
        pool = std::move(next);
        if (pool.size() > max_pool) break;
    }
    std::unordered_set<EdgeSet, EdgeSetHash> have(pool.begin(), pool.end());
    for (EdgeId e : comp.ids()) {
        EdgeSet c = shortest_cycle_through(g, comp, e);
        if (have.insert(c).second) pool.push_back(std::move(c));
    }
    return pool;
}

// Ratio greedy over the pool, then redundant cycles dropped longest first.
inline std::vector<EdgeSet> greedy_cycle_cover(const SignedGraph& g, const EdgeSet& comp, const std::vector<EdgeSet>& pool) {
    std::vector<std::size_t> chosen;
    EdgeSet uncovered = comp;
    while (!uncovered.empty()) {
        std::size_t best = pool.size();
        long long best_gain = 0;
        long long best_cost = 1;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            long long gain = (pool[i] & uncovered).size();
            long long cost = pool[i].size();
            if (gain && (best == pool.size() || gain * best_cost > best_gain * cost)) {
                best = i;
                best_gain = gain;
                best_cost = cost;
            }
        }
        check_invariant(best < pool.size(), "cycle pool does not cover the component");
        chosen.push_back(best);
        uncovered -= pool[best];
    }
    std::stable_sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) { return pool[a].size() > pool[b].size(); });
    std::vector<char> keep(chosen.size(), 1);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        EdgeSet others(g.edge_count());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i && keep[j]) others |= pool[chosen[j]];
        if (pool[chosen[i]].subset_of(others)) keep[i] = 0;
    }
    std::vector<EdgeSet> out;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (keep[i]) out.push_back(pool[chosen[i]]);
    return out;
}

// Heuristic for large components: greedy over a pool of short cycles, improved by a
// node-limited branch and bound over the same pool when the component fits in 64 edges.
inline std::vector<EdgeSet> heuristic_cycle_cover(const SignedGraph& g, const EdgeSet& comp, std::size_t pool_limit,
                                                  long long node_limit) {
    auto pool = cycle_pool(g, comp, pool_limit);
    auto greedy = greedy_cycle_cover(g, comp, pool);
    if (comp.size() > 64) return greedy;
    auto ids = comp.ids();
    std::unordered_map<EdgeId, int> local;
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    SetCoverProblem p;
    p.elements = static_cast<int>(ids.size());
    for (const auto& c : pool) {
        std::uint64_t w = 0;
        c.for_each([&](EdgeId e) { w |= std::uint64_t{1} << local[e]; });
        p.sets.push_back(w);
        p.costs.push_back(c.size());
    }
    Budget budget;
    budget.max_nodes = node_limit;
    auto r = solve_set_cover(p, budget);
    int greedy_len = 0;
    for (const auto& c : greedy) greedy_len += c.size();
    if (!r.feasible || r.cost >= greedy_len) return greedy;
    std::vector<EdgeSet> out;
    for (std::size_t i : r.chosen) out.push_back(pool[i]);
    return out;
}

inline std::vector<EdgeSet> exact_cycle_cover(const SignedGraph& g, const EdgeSet& comp, long long node_limit) {
    auto ids = comp.ids();
    std::unordered_map<EdgeId, int> local;
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    auto cycles = enumerate_cycle_sets(g, comp, comp.size());
    SetCoverProblem p;
    p.elements = static_cast<int>(ids.size());
    for (const auto& c : cycles) {
        std::uint64_t w = 0;
        c.for_each([&](EdgeId e) { w |= std::uint64_t{1} << local[e]; });
        p.sets.push_back(w);
        p.costs.push_back(c.size());
    }
    Budget budget;
    budget.max_nodes = node_limit;
    auto r = solve_set_cover(p, budget);
    require(r.feasible, ErrorKind::precondition, "bridge present: some edge lies on no cycle");
    std::vector<EdgeSet> out;
    for (std::size_t i : r.chosen) out.push_back(cycles[i]);
    return out;
}

}  // namespace detail

/// Short cycle cover of the positive, bridgeless subgraph `mask`, solved per component.
/// Each component's cover has length at most 5/3 of its edge count.
inline CircuitFamily bridgeless_cycle_cover(const SignedGraph& g, const EdgeSet& mask, const BridgelessOptions& opt = {}) {
    require(!mask.intersects(g.negative_edges()), ErrorKind::precondition, "cycle cover backend needs positive edges only");
    auto br = bridges(g, mask);
    require(br.empty(), ErrorKind::precondition, "bridge present: edge " + (br.empty() ? std::string() : std::to_string(br.first())));
    std::vector<int> label;
    const int count = components(g, mask, label);
    CircuitFamily out;
    for (int k = 1; k <= count; ++k) {
        EdgeSet comp(g.edge_count());
        mask.for_each([&](EdgeId e) {
            if (label[static_cast<std::size_t>(g.edge(e).u)] == k) comp.insert(e);
        });
        auto cycles = comp.size() <= std::min(opt.exact_limit, 64) ? detail::exact_cycle_cover(g, comp, opt.node_limit)
                                                                    : detail::heuristic_cycle_cover(g, comp, opt.pool_limit, opt.improve_nodes);
        int len = 0;
        for (const auto& c : cycles) len += c.size();
        if (3 * len > 5 * comp.size()) {
            std::string ids;
            for (EdgeId e : comp.ids()) ids += " " + std::to_string(e);
            fail(ErrorKind::bound_violation, "cycle cover of length " + std::to_string(len) + " exceeds 5/3 of " +
                                                 std::to_string(comp.size()) + " edges on component {" + ids +
                                                 " } of instance:\n" + to_text(g));
        }
        for (auto& c : cycles) out.add(Circuit(classify_cycle(g, c)));
    }
    return out;
}

inline CircuitFamily bridgeless_cycle_cover(const SignedGraph& g, const BridgelessOptions& opt = {}) {
    return bridgeless_cycle_cover(g, g.all_edges(), opt);
}

// ---------------------------------------------------------------------------

struct CutedgeCoverage {
    bool negatives_in_cycles = false;
    bool cutedges_covered = false;
    std::vector<EdgeId> negatives_off_cycles;
    std::vector<EdgeId> uncovered_cutedges;

    bool ok() const { return negatives_in_cycles && cutedges_covered; }
};

/// (a) every negative edge lies on a cycle of some member; (b) every cutedge of G+ is covered.
/// On a minimized signature (a) implies (b).
inline CutedgeCoverage check_cutedge_coverage(const SignedGraph& g, const CircuitFamily& fam) {
    EdgeSet on_cycles(g.edge_count());
    EdgeSet covered(g.edge_count());
    for (const auto& c : fam.circuits) {
        on_cycles |= c.cycle_edges();
        covered |= c.edges();
    }
    CutedgeCoverage r;
    r.negatives_off_cycles = (g.negative_edges() - on_cycles).ids();
    r.uncovered_cutedges = (bridges(g, positive_subgraph(g)) - covered).ids();
    r.negatives_in_cycles = r.negatives_off_cycles.empty();
    r.cutedges_covered = r.uncovered_cutedges.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Pipelines

struct PipelineOptions {
    NegativenessOptions negativeness;
    CycleCountOptions cycle_count;
    BridgelessOptions bridgeless;
    bool oracle_fallback = true;
    double oracle_seconds = 20;
};

struct CoverResult {
    CircuitFamily family;
    CoverReport report;
    int negativeness = 0;
    std::optional<int> signed_girth;
};

namespace detail {

inline SignatureSummary pipeline_summary(const SignedGraph& g, const PipelineOptions& opt) {
    require(is_cubic(g), ErrorKind::precondition, "graph is not cubic");
    require(is_two_edge_connected(g).two_edge_connected, ErrorKind::precondition, "graph is not 2-edge-connected");
    auto s = negativeness(g, opt.negativeness);
    require(s.exact(), ErrorKind::budget_exceeded,
            "exact negativeness unavailable above " + std::to_string(opt.negativeness.max_vertices) + " vertices");
    return s;
}

// Covers G+ minus its cutedges.
inline CircuitFamily positive_part_cover(const SignedGraph& h, const PipelineOptions& opt) {
    const EdgeSet plus = positive_subgraph(h);
    return bridgeless_cycle_cover(h, plus - bridges(h, plus), opt.bridgeless);
}

inline std::vector<std::vector<EdgeId>> family_key(const CircuitFamily& fam) {
    std::vector<std::vector<EdgeId>> key;
    for (const auto& c : fam.circuits) key.push_back(c.edges().ids());
    std::sort(key.begin(), key.end());
    return key;
}

inline std::string describe(const CycleTree& ct) {
    return "cycle-tree with " + std::to_string(ct.size()) + " edges, " + std::to_string(ct.cycles.size()) + " cycles (" +
           std::to_string(ct.negative_cycle_count()) + " negative, " + std::to_string(ct.leaf_count()) + " leaf)";
}

inline CoverResult cover_even_impl(const SignedGraph& g, const SignatureSummary& s, const PipelineOptions& opt) {
    const int eps = *s.negativeness;
    require(eps % 2 == 0, ErrorKind::precondition, "negativeness " + std::to_string(eps) + " is odd");
    const SignedGraph h = switch_at(g, s.minimizing_switching);
    CoverResult out;
    out.negativeness = eps;
    CircuitFamily fam;
    std::vector<std::string> trace;
    std::string candidate;
    if (eps == 0) {
        fam = bridgeless_cycle_cover(h, opt.bridgeless);
        candidate = "cycle-cover";
        trace.push_back("balanced signature: cycle cover of the whole graph, length " + std::to_string(fam.length()));
    } else {
        const EdgeSet plus = positive_subgraph(h);
        CycleTree ct = extract_cycle_tree(h, bfs_tree(h, plus, 1));
        check_invariant(ct.negative_cycle_count() % 2 == 0, "odd number of negative cycles under even negativeness");
        TreeCoverStats stats;
        CircuitFamily f1 = short_cycle_tree_cover(ct, &stats);
        check_invariant(check_cutedge_coverage(h, f1).ok(), "cycle-tree cover misses a cutedge of G+");
        CircuitFamily f2 = positive_part_cover(h, opt);
        trace.push_back(describe(ct));
        trace.push_back("cycle-tree cover length " + std::to_string(f1.length()));
        trace.push_back("positive part cover length " + std::to_string(f2.length()));
        fam = std::move(f1);
        fam.append(f2);
        candidate = "cycle-tree";
    }
    out.family = rehost(g, fam);
    out.report = verify_cover(g, out.family);
    out.report.branch = "even";
    out.report.candidate = candidate;
    out.report.trace = std::move(trace);
    const long long m = g.edge_count();
    const long long len = out.report.length;
    check_invariant(out.report.valid, "even pipeline produced an invalid cover");
    check_invariant(out.report.bound_23_9, "even pipeline cover is not below 23m/9");
    if (eps >= 2) check_invariant(9 * len <= 23 * m - 3 * eps - 12, "even pipeline cover exceeds 23m/9 - eps/3 - 4/3");
    return out;
}

}  // namespace detail

/// Circuit cover of a cubic 2-edge-connected signed graph with even negativeness, below 23m/9.
inline CoverResult cover_even(const SignedGraph& g, const PipelineOptions& opt = {}) {
    return detail::cover_even_impl(g, detail::pipeline_summary(g, opt), opt);
}

/// Circuit cover of a flow-admissible cubic 2-edge-connected signed graph, below 26m/9.
inline CoverResult cover_main(const SignedGraph& g, const PipelineOptions& opt = {}) {
    const auto s = detail::pipeline_summary(g, opt);
    const int eps = *s.negativeness;
    require(eps != 1, ErrorKind::precondition, "no circuit cover exists: negativeness is 1, the graph is not flow-admissible");
    if (eps % 2 == 0) return detail::cover_even_impl(g, s, opt);

    const SignedGraph h = switch_at(g, s.minimizing_switching);
    const int m = h.edge_count();
    const CircuitFamily positive = detail::positive_part_cover(h, opt);
    const auto gs = signed_girth(h);
    check_invariant(gs.has_value(), "flow-admissible graph without a circuit through a negative edge");

    CoverResult out;
    out.negativeness = eps;
    out.signed_girth = gs;
    std::vector<std::string> trace;
    trace.push_back("negativeness " + std::to_string(eps) + ", signed girth " + std::to_string(*gs));

    std::unordered_map<EdgeId, CycleTree> trees;
    auto tree_without = [&](EdgeId e) -> const CycleTree& {
        auto it = trees.find(e);
        if (it == trees.end()) it = trees.emplace(e, minimize_cycle_count(h, e, opt.cycle_count).tree).first;
        return it->second;
    };

    CircuitFamily chosen;
    std::string candidate;
    std::string branch;
    if (3 * *gs <= m + 3) {
        branch = "A";
        auto c = shortest_circuit(h, [&](const Circuit& x) { return has_negative_edge(h, x); });
        const EdgeId e = (c->cycle_edges() & h.negative_edges()).first();
        const CycleTree& ct = tree_without(e);
        chosen = short_cycle_tree_cover(ct);
        chosen.add(*c);
        check_invariant(check_cutedge_coverage(h, chosen).ok(), "negative-edge cover misses a cutedge of G+");
        trace.push_back("shortest circuit of length " + std::to_string(c->length()) + ", excluded edge " + std::to_string(e));
        trace.push_back(detail::describe(ct));
        chosen.append(positive);
        candidate = "shortest-circuit e=" + std::to_string(e);
    } else {
        branch = "B";
        std::optional<std::pair<CircuitFamily, CoverReport>> best;
        auto consider = [&](const std::string& name, CircuitFamily fam) {
            fam.append(positive);
            auto rep = verify_cover(h, fam);
            trace.push_back(name + ": length " + std::to_string(rep.length) + (rep.valid ? "" : " (invalid)"));
            if (!rep.valid) return;
            if (!best || rep.length < best->second.length ||
                (rep.length == best->second.length && detail::family_key(fam) < detail::family_key(best->first))) {
                best.emplace(std::move(fam), std::move(rep));
                candidate = name;
            }
        };
        const auto negatives = h.negative_edges().ids();

        // Shortest circuit carrying e on a cycle, plus the cycle-tree cover without e.
        for (EdgeId e : negatives) {
            auto c = shortest_circuit(h, [&](const Circuit& x) { return x.cycle_edges().contains(e); });
            if (!c) {
                trace.push_back("through-edge e=" + std::to_string(e) + ": no circuit has it on a cycle");
                continue;
            }
            CircuitFamily fam = short_cycle_tree_cover(tree_without(e));
            fam.add(*c);
            consider("through-edge e=" + std::to_string(e), std::move(fam));
        }

        // Pairs of negative edges: the circuit inside the sum of their fundamental cycles, closed
        // into a barbell along either of two disjoint paths, together with the cycle-tree without one of them.
        const EdgeSet tree = bfs_tree(h, positive_subgraph(h), 1);
        for (std::size_t i = 0; i < negatives.size(); ++i) {
            for (std::size_t j = i + 1; j < negatives.size(); ++j) {
                const EdgeId ei = negatives[i];
                const EdgeId ej = negatives[j];
                const std::string pair = "pair " + std::to_string(ei) + "," + std::to_string(ej);
                auto sum = fundamental_cycle_edges(h, tree, ei) ^ fundamental_cycle_edges(h, tree, ej);
                std::optional<Cycle> ci, cj;
                for (auto& c : split_disjoint_cycles(h, sum)) {
                    if (c.edges.contains(ei)) ci = c;
                    if (c.edges.contains(ej)) cj = c;
                }
                check_invariant(ci && cj, "fundamental cycle sum lost a negative edge");
                std::vector<std::pair<std::string, Circuit>> closings;
                if (ci->edges == cj->edges) {
                    closings.emplace_back(pair + " cycle", Circuit(*ci));
                } else {
                    try {
                        auto paths = disjoint_paths(h, vertices_of(h, ci->edges), vertices_of(h, cj->edges), 2);
                        for (std::size_t k = 0; k < paths.size(); ++k)
                            closings.emplace_back(pair + " path " + std::to_string(k + 1),
                                                  Circuit(make_barbell(h, *ci, *cj, paths[k].edges)));
                    } catch (const Error& err) {
                        if (err.kind() == ErrorKind::bound_violation) throw;
                        trace.push_back(pair + ": " + err.what());
                    }
                }
                for (const auto& [name, k] : closings) {
                    for (EdgeId e : {ei, ej}) {
                        const CycleTree& ct = tree_without(e);
                        CircuitFamily fam;
                        fam.add(k);
                        if (auto whole = circuit_from_edges(h, ct.edges)) fam.add(*whole);
                        else fam.append(short_cycle_tree_cover(ct));
                        consider(name + " without " + std::to_string(e), std::move(fam));
                    }
                }
            }
        }

        if ((!best || !below_26_9(best->second.length, m)) && opt.oracle_fallback) {
            trace.push_back(best ? "portfolio minimum is not below 26m/9; consulting the oracle"
                                 : "no valid candidate; consulting the oracle");
            try {
                auto o = exact_scc(h, Budget::seconds(opt.oracle_seconds));
                trace.push_back(std::string("oracle ") + to_string(o.status) + ", length " + std::to_string(o.optimum));
                if (!o.witness.empty() && (!best || o.optimum < best->second.length)) {
                    auto rep = verify_cover(h, o.witness);
                    if (rep.valid) {
                        best.emplace(o.witness, rep);
                        candidate = "oracle";
                    }
                }
            } catch (const Error& err) {
                trace.push_back(std::string("oracle unavailable: ") + err.what());
            }
        }
        if (!best) {
            std::string all;
            for (const auto& t : trace) all += "\n  " + t;
            fail(ErrorKind::bound_violation, "no valid cover candidate" + all);
        }
        chosen = std::move(best->first);
    }

    out.family = rehost(g, chosen);
    out.report = verify_cover(g, out.family);
    out.report.branch = branch;
    out.report.candidate = candidate;
    out.report.trace = std::move(trace);
    check_invariant(out.report.valid, "general pipeline produced an invalid cover");
    if (branch == "A") {
        const long long len = out.report.length;
        check_invariant(9 * len <= 26LL * m - 3 * eps - 15, "short-circuit branch exceeds its length bound");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure of instances with large signed girth

struct StructuralOptions {
    NegativenessOptions negativeness;
    std::size_t max_circuits = 20000;
    long tree_limit = 2000;  // every spanning tree of G+ when there are at most this many
    int random_trees = 32;
    std::uint64_t seed = 1;
};

struct StructuralReport {
    int m = 0;
    std::optional<int> signed_girth;
    bool applicable = false;  // 3 * signed girth >= m + 6
    bool circuits_checked = false;
    std::size_t negative_circuits = 0;
    std::optional<std::pair<EdgeSet, EdgeSet>> disjoint_pair;
    long trees_checked = 0;
    int max_leaf_cycles = 0;
    int max_non_leaf_cycles = 0;
    bool leaf_signs_ok = true;
    std::vector<std::string> notices;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// With large signed girth: no two vertex-disjoint circuits carry negative edges, and every
/// signed cycle-tree has at most three leaf-cycles and at most one non-leaf cycle (whose
/// presence forces every leaf-cycle negative). Violations count only when applicable.
inline StructuralReport structural_checks(const SignedGraph& g, const StructuralOptions& opt = {}) {
    require(is_cubic(g), ErrorKind::precondition, "graph is not cubic");
    StructuralReport r;
    r.m = g.edge_count();
    auto s = negativeness(g, opt.negativeness);
    if (!s.exact()) {
        r.notices.push_back("negativeness unavailable; checks skipped");
        return r;
    }
    const SignedGraph h = switch_at(g, s.minimizing_switching);
    r.signed_girth = signed_girth(h);
    r.applicable = r.signed_girth && 3 * *r.signed_girth >= r.m + 6;
    if (!r.applicable) r.notices.push_back("signed girth below m/3 + 2; results are informational");

    if (h.vertex_count() > 64) {
        r.notices.push_back("more than 64 vertices; circuit check skipped");
    } else {
        auto sets = enumerate_circuit_sets(h, circuit_length_cap(h));
        if (sets.size() > opt.max_circuits) {
            r.notices.push_back("circuit count " + std::to_string(sets.size()) + " exceeds budget; circuit check skipped");
        } else {
            std::vector<std::pair<std::uint64_t, std::size_t>> marked;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                if (!sets[i].intersects(h.negative_edges())) continue;
                std::uint64_t w = 0;
                for (VertexId v : vertices_of(h, sets[i])) w |= std::uint64_t{1} << (v - 1);
                marked.emplace_back(w, i);
            }
            r.negative_circuits = marked.size();
            for (std::size_t a = 0; a < marked.size() && !r.disjoint_pair; ++a)
                for (std::size_t b = a + 1; b < marked.size(); ++b)
                    if (!(marked[a].first & marked[b].first)) {
                        r.disjoint_pair.emplace(sets[marked[a].second], sets[marked[b].second]);
                        break;
                    }
            r.circuits_checked = true;
            if (r.disjoint_pair && r.applicable) r.violations.push_back("two vertex-disjoint circuits carry negative edges");
        }
    }

    const EdgeSet plus = positive_subgraph(h);
    std::vector<EdgeSet> trees;
    if (!for_each_spanning_tree(h, plus, opt.tree_limit, [&](const EdgeSet& t) { trees.push_back(t); })) {
        trees.clear();
        for (VertexId v = 1; v <= h.vertex_count(); ++v) trees.push_back(bfs_tree(h, plus, v));
        Rng rng(opt.seed);
        for (int i = 0; i < opt.random_trees; ++i) trees.push_back(random_spanning_tree(h, plus, rng));
        r.notices.push_back("spanning trees sampled, not enumerated");
    }
    std::vector<std::optional<EdgeId>> exclusions{std::nullopt};
    for (EdgeId e : h.negative_edges().ids()) exclusions.emplace_back(e);
    for (const auto& t : trees) {
        for (const auto& ex : exclusions) {
            CycleTree ct = extract_cycle_tree(h, t, ex);
            if (ct.empty()) continue;
            ++r.trees_checked;
            const int leaves = ct.leaf_count();
            const int inner = static_cast<int>(ct.cycles.size()) - leaves;
            r.max_leaf_cycles = std::max(r.max_leaf_cycles, leaves);
            r.max_non_leaf_cycles = std::max(r.max_non_leaf_cycles, inner);
            bool signs = true;
            if (inner > 0)
                for (std::size_t i = 0; i < ct.cycles.size(); ++i)
                    if (ct.leaf[i] && ct.cycles[i].positive()) signs = false;
            r.leaf_signs_ok = r.leaf_signs_ok && signs;
        }
    }
    if (r.applicable) {
        if (r.max_leaf_cycles > 3) r.violations.push_back("a cycle-tree has more than three leaf-cycles");
        if (r.max_non_leaf_cycles > 1) r.violations.push_back("a cycle-tree has more than one non-leaf cycle");
        if (!r.leaf_signs_ok) r.violations.push_back("a positive leaf-cycle beside a non-leaf cycle");
    }
    return r;
}

}  // namespace sgcc
