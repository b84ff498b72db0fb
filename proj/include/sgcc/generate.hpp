#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgcc/random.hpp"
#include "sgcc/signed_graph.hpp"

namespace sgcc {

/// Simple cubic graph on n vertices: K4 for n = 4, otherwise the prism over an n/2-cycle.
inline std::vector<std::pair<VertexId, VertexId>> cubic_base(int n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (n == 4) {
        for (VertexId a = 1; a <= 4; ++a)
            for (VertexId b = a + 1; b <= 4; ++b) out.emplace_back(a, b);
        return out;
    }
    const int k = n / 2;
    for (int i = 0; i < k; ++i) {
        out.emplace_back(i + 1, (i + 1) % k + 1);
        out.emplace_back(k + i + 1, k + (i + 1) % k + 1);
        out.emplace_back(i + 1, k + i + 1);
    }
    return out;
}

/// Random simple 2-edge-connected cubic signed graph with exactly `negatives` negative edges.
/// The structure comes from 20m degree-preserving edge swaps started at cubic_base(n); the
/// chain restarts until the result is 2-edge-connected. Deterministic per seed.
inline SignedGraph gen_random(int n, int negatives, std::uint64_t seed) {
    require(n >= 4 && n % 2 == 0, ErrorKind::precondition, "cubic graphs need an even vertex count of at least 4");
    const int m = 3 * n / 2;
    require(negatives >= 0 && negatives <= m, ErrorKind::precondition,
            "negative edge count must lie in 0.." + std::to_string(m));
    Rng rng(seed);
    auto key = [](VertexId a, VertexId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (;;) {
        auto edges = cubic_base(n);
        std::set<std::pair<VertexId, VertexId>> present;
        for (auto& [a, b] : edges) present.insert(key(a, b));
        for (int step = 0; step < 20 * m; ++step) {
            auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
            auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
            if (i == j) continue;
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (rng.below(2)) std::swap(c, d);
            // ab, cd -> ad, cb
            if (a == d || c == b || present.count(key(a, d)) || present.count(key(c, b))) continue;
            present.erase(key(a, b));
            present.erase(key(c, d));
            present.insert(key(a, d));
            present.insert(key(c, b));
            edges[i] = {a, d};
            edges[j] = {c, b};
        }
        std::vector<Edge> out;
        for (const auto& [a, b] : present) out.push_back({a, b, +1});
        SignedGraph g(n, std::move(out));
        if (!is_two_edge_connected(g).two_edge_connected) continue;

        std::vector<EdgeId> ids(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) ids[static_cast<std::size_t>(e)] = e + 1;
        rng.shuffle(ids);
        std::vector<int> signs(static_cast<std::size_t>(m), +1);
        for (int k = 0; k < negatives; ++k) signs[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)] - 1)] = -1;
        return g.with_signs(signs);
    }
}

}  // namespace sgcc
