#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sgcc/signed_graph.hpp"

namespace sgcc {

/// Worker cap from SGCC_THREADS (unset or 0 = hardware concurrency).
inline unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SGCC_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, 256));
    }
    return hw;
}

struct SignatureSummary {
    int negative_edge_count = 0;
    std::optional<int> negativeness;           // empty when the exact search exceeded its budget
    std::vector<VertexId> minimizing_switching;  // sorted, never contains vertex 1
    bool two_edge_connected = false;
    bool flow_admissible = false;

    bool exact() const { return negativeness.has_value(); }
};

struct NegativenessOptions {
    int max_vertices = 26;
    unsigned threads = 0;  // 0 = thread_count()
};

namespace detail {

// Lexicographic order on vertex sets encoded as bitmasks (bit i = vertex i + 2).
inline bool vertex_set_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    int x = std::countr_zero(diff);
    std::uint64_t above = x >= 63 ? 0 : ~((std::uint64_t{2} << x) - 1);
    if (a >> x & 1) return (b & above) != 0;
    return (a & above) == 0;
}

struct SwitchBest {
    int count = 0;
    std::uint64_t set = 0;
    bool valid = false;

    void offer(int c, std::uint64_t s) {
        if (!valid || c < count || (c == count && vertex_set_less(s, set))) {
            count = c;
            set = s;
            valid = true;
        }
    }
};

// Scans Gray-code indices [begin, end) of the switchings U ⊆ {2..n}.
inline SwitchBest scan_switchings(const SignedGraph& g, std::uint64_t begin, std::uint64_t end) {
    const int m = g.edge_count();
    std::uint64_t set = begin ^ (begin >> 1);
    std::vector<int> sign(static_cast<std::size_t>(m) + 1);
    int count = 0;
    auto in_set = [&](VertexId v) { return v >= 2 && ((set >> (v - 2)) & 1); };
    for (EdgeId e = 1; e <= m; ++e) {
        const Edge& ed = g.edge(e);
        int s = ed.sign * (in_set(ed.u) != in_set(ed.v) ? -1 : 1);
        sign[static_cast<std::size_t>(e)] = s;
        count += s < 0;
    }
    SwitchBest best;
    best.offer(count, set);
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        int bitpos = std::countr_zero(i);
        set ^= std::uint64_t{1} << bitpos;
        for (EdgeId e : g.incident(bitpos + 2)) {
            int& s = sign[static_cast<std::size_t>(e)];
            s = -s;
            count += s < 0 ? 1 : -1;
        }
        best.offer(count, set);
    }
    return best;
}

}  // namespace detail

/// Exact negativeness by enumerating all 2^(n-1) switchings. Ties go to the
/// lexicographically smallest vertex set not containing vertex 1.
inline SignatureSummary negativeness(const SignedGraph& g, const NegativenessOptions& opt = {}) {
    SignatureSummary out;
    out.negative_edge_count = g.negative_count();
    out.two_edge_connected = is_two_edge_connected(g).two_edge_connected;
    const int n = g.vertex_count();
    if (n > opt.max_vertices || n > 63) return out;

    const std::uint64_t total = n <= 1 ? 1 : std::uint64_t{1} << (n - 1);
    unsigned workers = opt.threads ? opt.threads : thread_count();
    if (total < (std::uint64_t{1} << 16)) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<detail::SwitchBest> partial(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    if (workers == 1) {
        partial[0] = detail::scan_switchings(g, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t b = w * chunk;
            std::uint64_t e = std::min(total, b + chunk);
            if (b >= e) continue;
            pool.emplace_back([&, w, b, e] { partial[w] = detail::scan_switchings(g, b, e); });
        }
        for (auto& t : pool) t.join();
    }
    detail::SwitchBest best;
    for (const auto& p : partial)
        if (p.valid) best.offer(p.count, p.set);

    out.negativeness = best.count;
    for (int i = 0; i + 2 <= n; ++i)
        if ((best.set >> i) & 1) out.minimizing_switching.push_back(i + 2);
    out.flow_admissible = out.two_edge_connected && best.count != 1;
    return out;
}

/// Equivalent signature with exactly ε negative edges.
inline SignedGraph minimize_signature(const SignedGraph& g, const NegativenessOptions& opt = {}) {
    auto summary = negativeness(g, opt);
    require(summary.exact(), ErrorKind::budget_exceeded,
            "exact negativeness unavailable: " + std::to_string(g.vertex_count()) + " vertices exceeds budget of " +
                std::to_string(opt.max_vertices));
    return switch_at(g, summary.minimizing_switching);
}

/// Balanced iff a two-coloring exists with negative edges joining different colors.
inline bool is_balanced(const SignedGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (VertexId s = 1; s <= g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)]) continue;
        color[static_cast<std::size_t>(s)] = 1;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other(e, v);
                int want = color[static_cast<std::size_t>(v)] * g.sign(e);
                int& cw = color[static_cast<std::size_t>(w)];
                if (!cw) {
                    cw = want;
                    stack.push_back(w);
                } else if (cw != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace sgcc
