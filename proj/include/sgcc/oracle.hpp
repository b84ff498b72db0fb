#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgcc/circuits.hpp"
#include "sgcc/negativeness.hpp"
#include "sgcc/set_cover.hpp"

namespace sgcc {

enum class SearchStatus { exact, budget_exceeded };

inline const char* to_string(SearchStatus s) { return s == SearchStatus::exact ? "exact" : "budget_exceeded"; }

struct OracleResult {
    int optimum = 0;
    CircuitFamily witness;
    long long node_count = 0;
    std::size_t circuit_count = 0;
    SearchStatus status = SearchStatus::exact;
};

namespace detail {

inline std::uint64_t edge_mask(const EdgeSet& s) {
    std::uint64_t w = 0;
    s.for_each([&](EdgeId e) { w |= std::uint64_t{1} << (e - 1); });
    return w;
}

}  // namespace detail

/// Minimum-length circuit cover by branch and bound over every circuit of g.
/// Throws a precondition error when some edge lies in no circuit (no cover exists).
inline OracleResult exact_scc(const SignedGraph& g, const Budget& budget = {}, std::optional<int> known_upper = {}) {
    const int m = g.edge_count();
    require(m <= 64, ErrorKind::budget_exceeded, "exact search is limited to 64 edges");
    require(m > 0, ErrorKind::precondition, "graph has no edges");
    const auto sets = enumerate_circuit_sets(g, circuit_length_cap(g));
    SetCoverProblem p;
    p.elements = m;
    std::uint64_t reachable = 0;
    for (const auto& s : sets) {
        p.sets.push_back(detail::edge_mask(s));
        p.costs.push_back(s.size());
        reachable |= p.sets.back();
    }
    for (EdgeId e = 1; e <= m; ++e)
        require(reachable >> (e - 1) & 1, ErrorKind::precondition,
                "no circuit cover exists: edge " + std::to_string(e) + " lies in no circuit");

    auto r = solve_set_cover(p, budget, known_upper);
    OracleResult out;
    out.node_count = r.nodes;
    out.circuit_count = sets.size();
    out.status = r.exact ? SearchStatus::exact : SearchStatus::budget_exceeded;
    if (r.feasible) {
        out.optimum = r.cost;
        for (std::size_t i : r.chosen) out.witness.add(*circuit_from_edges(g, sets[i]));
    }
    if (out.status == SearchStatus::exact)
        check_invariant(r.feasible && out.witness.length() == out.optimum, "oracle witness does not attain the optimum");
    return out;
}

// ---------------------------------------------------------------------------

enum class Tristate { no, yes, unknown };

inline const char* to_string(Tristate t) {
    switch (t) {
        case Tristate::no: return "no";
        case Tristate::yes: return "yes";
        default: return "unknown";
    }
}

struct CdcResult {
    Tristate exists = Tristate::unknown;
    CircuitFamily witness;
    long long node_count = 0;
    std::size_t circuit_count = 0;
};

namespace detail {

class CdcSearch {
public:
    CdcSearch(int m, std::vector<std::uint64_t> sets, const Budget& budget)
        : m_(m), sets_(std::move(sets)), budget_(budget), containing_(static_cast<std::size_t>(m)) {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (int e = 0; e < m_; ++e)
                if (sets_[s] >> e & 1) containing_[static_cast<std::size_t>(e)].push_back(s);
    }

    // Demand encoding: bit e of `twice` set = edge still needs 2, bit of `once` = needs 1.
    std::optional<bool> run() {
        const std::uint64_t all = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
        bool found = search(all, 0);
        if (aborted_) return std::nullopt;
        return found;
    }

    const std::vector<std::size_t>& chosen() const { return chosen_; }
    long long nodes() const { return nodes_; }

private:
    static bool fits(std::uint64_t s, std::uint64_t twice, std::uint64_t once) { return (s & ~(twice | once)) == 0; }

    // Subtract one unit of demand on every edge of s.
    static void take(std::uint64_t s, std::uint64_t& twice, std::uint64_t& once) {
        std::uint64_t from_two = s & twice;
        std::uint64_t from_one = s & once;
        twice &= ~from_two;
        once = (once & ~from_one) | from_two;
    }

    bool search(std::uint64_t twice, std::uint64_t once) {
        if (!twice && !once) return true;
        if (budget_.exhausted(++nodes_)) {
            aborted_ = true;
            return false;
        }
        if (failed_.count({twice, once})) return false;

        const std::uint64_t open = twice | once;
        const int pivot = std::countr_zero(open);
        const bool needs_two = twice >> pivot & 1;
        const auto& cands = containing_[static_cast<std::size_t>(pivot)];
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const std::uint64_t a = sets_[cands[i]];
            if (!fits(a, twice, once)) continue;
            std::uint64_t t1 = twice, o1 = once;
            take(a, t1, o1);
            if (!needs_two) {
                chosen_.push_back(cands[i]);
                if (search(t1, o1)) return true;
                chosen_.pop_back();
                if (aborted_) return false;
                continue;
            }
            // The pivot needs two circuits; choose them as an unordered pair.
            for (std::size_t j = i; j < cands.size(); ++j) {
                const std::uint64_t b = sets_[cands[j]];
                if (!fits(b, t1, o1)) continue;
                std::uint64_t t2 = t1, o2 = o1;
                take(b, t2, o2);
                chosen_.push_back(cands[i]);
                chosen_.push_back(cands[j]);
                if (search(t2, o2)) return true;
                chosen_.pop_back();
                chosen_.pop_back();
                if (aborted_) return false;
            }
        }
        failed_.insert({twice, once});
        return false;
    }

    struct PairHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
            return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
        }
    };

    int m_;
    std::vector<std::uint64_t> sets_;
    Budget budget_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::size_t> chosen_;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> failed_;
    long long nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/// Decides whether some multiset of circuits covers every edge exactly twice.
inline CdcResult cdc_exists(const SignedGraph& g, const Budget& budget = {}) {
    const int m = g.edge_count();
    require(m <= 64, ErrorKind::budget_exceeded, "exact search is limited to 64 edges");
    CdcResult out;
    if (m == 0) {
        out.exists = Tristate::yes;
        return out;
    }
    const auto sets = enumerate_circuit_sets(g, circuit_length_cap(g));
    out.circuit_count = sets.size();
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) masks.push_back(detail::edge_mask(s));
    detail::CdcSearch search(m, masks, budget);
    auto found = search.run();
    out.node_count = search.nodes();
    if (!found) return out;
    out.exists = *found ? Tristate::yes : Tristate::no;
    if (*found) {
        for (std::size_t i : search.chosen()) out.witness.add(*circuit_from_edges(g, sets[i]));
        auto cov = out.witness.coverage(m);
        for (EdgeId e = 1; e <= m; ++e)
            check_invariant(cov[static_cast<std::size_t>(e)] == 2, "double cover witness miscounts an edge");
    }
    return out;
}

// ---------------------------------------------------------------------------

struct BarbellPropertyResult {
    bool holds = true;
    std::size_t barbell = 0;  // counter-witness: index into the family
    VertexId vertex = 0;
};

namespace detail {

inline std::vector<VertexId> degree_three_vertices(const SignedGraph& g, const Circuit& c) {
    auto deg = degrees_in(g, c.edges());
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] == 3) out.push_back(v);
    return out;
}

}  // namespace detail

/// In a circuit double cover of a cubic graph, every degree-3 vertex of a barbell is also a
/// degree-3 vertex of another barbell of the family.
inline BarbellPropertyResult barbell_cdc_property(const SignedGraph& g, const CircuitFamily& fam) {
    require(is_cubic(g), ErrorKind::precondition, "graph is not cubic");
    auto cov = fam.coverage(g.edge_count());
    for (EdgeId e = 1; e <= g.edge_count(); ++e)
        require(cov[static_cast<std::size_t>(e)] == 2, ErrorKind::precondition,
                "family is not a double cover: edge " + std::to_string(e) + " covered " +
                    std::to_string(cov[static_cast<std::size_t>(e)]) + " times");
    std::vector<std::vector<VertexId>> d3(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam.circuits[i].is_barbell()) d3[i] = detail::degree_three_vertices(g, fam.circuits[i]);
    BarbellPropertyResult out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (VertexId v : d3[i]) {
            bool again = false;
            for (std::size_t j = 0; j < fam.size() && !again; ++j)
                again = j != i && std::find(d3[j].begin(), d3[j].end(), v) != d3[j].end();
            if (!again) return {false, i, v};
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Lexicographically smallest pair of edges whose removal disconnects g, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> find_two_edge_cut(const SignedGraph& g) {
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        EdgeSet rest = g.all_edges();
        rest.erase(e);
        auto br = bridges(g, rest);
        if (!br.empty()) return std::make_pair(e, br.first());
    }
    return std::nullopt;
}

struct NoCdcConstruction {
    SignedGraph graph;
    std::pair<EdgeId, EdgeId> cut;
    EdgeId e1 = 0;
    EdgeId e2 = 0;
    std::vector<std::string> comments;
};

/// Signs the edges beside one end of a 2-edge-cut negative so the result has a circuit cover
/// but no circuit double cover. With cut edge e = uv, e1 and e2 are the smallest-id edges at u
/// and v outside the cut.
inline NoCdcConstruction gen_no_cdc(const SignedGraph& g, std::optional<std::pair<EdgeId, EdgeId>> cut = {}) {
    require(is_cubic(g), ErrorKind::precondition, "graph is not cubic");
    require(is_two_edge_connected(g).two_edge_connected, ErrorKind::precondition, "graph is not 2-edge-connected");
    if (cut) {
        auto [a, b] = *cut;
        require(a >= 1 && a <= g.edge_count() && b >= 1 && b <= g.edge_count() && a != b, ErrorKind::invalid_input,
                "cut edges out of range");
        EdgeSet rest = g.all_edges();
        rest.erase(a);
        rest.erase(b);
        require(!is_connected(g, rest, true), ErrorKind::precondition, "given edges are not an edge cut");
    } else {
        cut = find_two_edge_cut(g);
        require(cut.has_value(), ErrorKind::precondition, "graph has no 2-edge-cut (it is 3-edge-connected)");
    }
    const auto [e, e_other] = *cut;
    auto pick = [&](VertexId x) {
        EdgeId best = 0;
        for (EdgeId f : g.incident(x))
            if (f != e && f != e_other && (!best || f < best)) best = f;
        require(best != 0, ErrorKind::precondition, "cut edge end has no other edge");
        return best;
    };
    const Edge& ed = g.edge(e);
    NoCdcConstruction out{g, *cut, pick(ed.u), pick(ed.v), {}};
    require(out.e1 != out.e2, ErrorKind::precondition, "degenerate 2-edge-cut");
    std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), +1);
    signs[static_cast<std::size_t>(out.e1 - 1)] = -1;
    signs[static_cast<std::size_t>(out.e2 - 1)] = -1;
    out.graph = g.with_signs(signs);
    out.comments = {"no-cdc construction: cut edges " + std::to_string(e) + " " + std::to_string(e_other),
                    "negative edges e1=" + std::to_string(out.e1) + " (at vertex " + std::to_string(ed.u) + "), e2=" +
                        std::to_string(out.e2) + " (at vertex " + std::to_string(ed.v) + ")"};
    return out;
}

}  // namespace sgcc
