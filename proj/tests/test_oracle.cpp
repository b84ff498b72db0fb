#include <gtest/gtest.h>

#include "support.hpp"

using namespace sgcc;
using namespace support;

namespace {

SignedGraph prism() {
    return graph("p sg 6 9\ne 1 2 +\ne 2 3 +\ne 1 3 +\ne 4 5 +\ne 5 6 +\ne 4 6 +\ne 1 4 +\ne 2 5 +\ne 3 6 +\n");
}

// Two copies of K4 minus the edge 12, joined by 1-5 and 2-6.
SignedGraph two_blocks() {
    return graph(
        "p sg 8 12\n"
        "e 1 3 +\ne 1 4 +\ne 2 3 +\ne 2 4 +\ne 3 4 +\n"
        "e 5 7 +\ne 5 8 +\ne 6 7 +\ne 6 8 +\ne 7 8 +\n"
        "e 1 5 +\ne 2 6 +\n");
}

// Random cubic graph with a 2-edge-cut: two cubic graphs with one edge removed each, joined twice.
SignedGraph joined(std::uint64_t seed, int na, int nb) {
    Rng rng(seed);
    auto a = gen_random(na, 0, seed);
    auto b = gen_random(nb, 0, seed + 77);
    std::vector<Edge> edges;
    auto ea = static_cast<EdgeId>(1 + rng.below(static_cast<std::uint64_t>(a.edge_count())));
    auto eb = static_cast<EdgeId>(1 + rng.below(static_cast<std::uint64_t>(b.edge_count())));
    for (EdgeId e = 1; e <= a.edge_count(); ++e)
        if (e != ea) edges.push_back(a.edge(e));
    for (EdgeId e = 1; e <= b.edge_count(); ++e)
        if (e != eb) edges.push_back({b.edge(e).u + na, b.edge(e).v + na, 1});
    edges.push_back({a.edge(ea).u, b.edge(eb).u + na, 1});
    edges.push_back({a.edge(ea).v, b.edge(eb).v + na, 1});
    return SignedGraph(na + nb, edges);
}

void expect_double_cover(const SignedGraph& g, const CircuitFamily& fam) {
    auto cov = fam.coverage(g.edge_count());
    for (EdgeId e = 1; e <= g.edge_count(); ++e) EXPECT_EQ(cov[static_cast<std::size_t>(e)], 2);
    for (const auto& c : fam.circuits) EXPECT_TRUE(circuit_from_edges(g, c.edges()).has_value());
}

}  // namespace

TEST(ExactScc, Examples) {
    auto c5 = graph("p sg 5 5\ne 1 2 +\ne 2 3 +\ne 3 4 +\ne 4 5 +\ne 5 1 +\n");
    auto r = exact_scc(c5);
    EXPECT_EQ(r.optimum, 5);
    EXPECT_EQ(r.witness.size(), 1u);
    EXPECT_EQ(r.status, SearchStatus::exact);

    EXPECT_EQ(exact_scc(k4()).optimum, *brute_scc(k4()));
    auto g = k4({{1, 2}, {3, 4}});
    auto o = exact_scc(g);
    EXPECT_EQ(o.optimum, *brute_scc(g));
    EXPECT_LT(9 * o.optimum, 23 * 6);
    EXPECT_TRUE(verify_cover(g, o.witness).valid);
}

TEST(ExactScc, MatchesDynamicProgramOnSmallGraphs) {
    Rng rng(3);
    int compared = 0;
    int infeasible = 0;
    for (std::uint64_t seed = 1; compared < 60; ++seed) {
        SignedGraph g = seed % 2 ? gen_random(seed % 4 ? 8 : 6, static_cast<int>(seed % 7), seed) : [&] {
            const int n = 4 + static_cast<int>(rng.below(3));
            std::vector<Edge> edges;
            for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1, 1});
            while (static_cast<int>(edges.size()) < 12 && rng.below(4)) {
                int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
                int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
                if (a != b) edges.push_back({a, b, 1});
            }
            for (auto& e : edges) e.sign = rng.below(3) ? 1 : -1;
            return SignedGraph(n, edges);
        }();
        auto truth = brute_scc(g);
        ++compared;
        if (!truth) {
            ++infeasible;
            EXPECT_THROW(exact_scc(g), Error);
            continue;
        }
        auto r = exact_scc(g);
        EXPECT_EQ(r.optimum, *truth) << to_text(g);
        EXPECT_EQ(r.witness.length(), r.optimum);
        EXPECT_TRUE(verify_cover(g, r.witness).valid);
    }
    EXPECT_GT(infeasible, 0);
}

TEST(ExactScc, SwitchingInvariantAtTheOptimum) {
    for (std::uint64_t seed : {3u, 8u, 21u}) {
        auto g = gen_random(8, 3 + static_cast<int>(seed % 3), seed);
        if (negativeness(g).negativeness == 1) continue;
        const int base = exact_scc(g).optimum;
        for (std::uint32_t u = 0; u < (1u << 8); ++u) {
            std::vector<VertexId> set;
            for (int i = 0; i < 8; ++i)
                if (u >> i & 1) set.push_back(i + 1);
            EXPECT_EQ(exact_scc(switch_at(g, set)).optimum, base);
        }
    }
}

TEST(ExactScc, OptimumBelowBothBounds) {
    std::uint64_t seed = 1;
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_cubic_with(6 + 2 * (trial % 4), seed, [](int x) { return x != 1; });
        const int m = g.edge_count();
        const int opt = exact_scc(g).optimum;
        EXPECT_LT(9 * opt, 26 * m);
        if (eps(g) % 2 == 0) {
            EXPECT_LT(9 * opt, 23 * m);
        }
    }
}

TEST(ExactScc, BudgetAndLimits) {
    std::uint64_t seed = 40;
    auto g = random_cubic_with(16, seed, [](int x) { return x == 3; });
    Budget tiny;
    tiny.max_nodes = 1;
    auto r = exact_scc(g, tiny);
    EXPECT_EQ(r.status, SearchStatus::budget_exceeded);
    EXPECT_GT(r.optimum, 0);
    EXPECT_TRUE(verify_cover(g, r.witness).valid);

    auto big = gen_random(44, 0, 1);
    try {
        exact_scc(big);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
    }
}

TEST(CdcExists, Examples) {
    for (const auto& g : {k4(), prism()}) {
        auto r = cdc_exists(g);
        EXPECT_EQ(r.exists, Tristate::yes);
        expect_double_cover(g, r.witness);
    }
    auto neg = graph("p sg 3 3\ne 1 2 -\ne 2 3 +\ne 1 3 +\n");
    EXPECT_EQ(cdc_exists(neg).exists, Tristate::no);
    auto digon = graph("p sg 2 2\ne 1 2 +\ne 1 2 -\n");
    EXPECT_EQ(cdc_exists(digon).exists, Tristate::no);
}

TEST(CdcExists, MatchesNaiveSearch) {
    // Every signature of K4, plus small random cubic graphs.
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        std::vector<EdgeId> neg;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) neg.push_back(i + 1);
        auto g = with_negatives(k4(), neg);
        auto r = cdc_exists(g);
        EXPECT_EQ(r.exists == Tristate::yes, brute_cdc(g)) << to_text(g);
        if (r.exists == Tristate::yes) expect_double_cover(g, r.witness);
    }
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = gen_random(seed % 2 ? 6 : 8, static_cast<int>(seed % 5), seed);
        auto r = cdc_exists(g);
        EXPECT_EQ(r.exists == Tristate::yes, brute_cdc(g)) << to_text(g);
    }
}

TEST(CdcExists, BudgetGivesUnknown) {
    Budget tiny;
    tiny.max_nodes = 1;
    auto g = gen_random(14, 4, 9);
    EXPECT_EQ(cdc_exists(g, tiny).exists, Tristate::unknown);
}

TEST(FindTwoEdgeCut, Examples) {
    EXPECT_FALSE(find_two_edge_cut(k4()).has_value());
    EXPECT_FALSE(find_two_edge_cut(prism()).has_value());
    auto cut = find_two_edge_cut(two_blocks());
    ASSERT_TRUE(cut.has_value());
    EXPECT_EQ(*cut, std::make_pair(EdgeId{11}, EdgeId{12}));
}

TEST(GenNoCdc, TwoBlocks) {
    auto c = gen_no_cdc(two_blocks());
    EXPECT_EQ(c.cut, std::make_pair(EdgeId{11}, EdgeId{12}));
    // e = 1-5; smallest other edges at 1 and 5.
    EXPECT_EQ(c.e1, 1);
    EXPECT_EQ(c.e2, 6);
    EXPECT_EQ(c.graph.negative_edges().ids(), (std::vector<EdgeId>{1, 6}));
    EXPECT_EQ(eps(c.graph), 2);
    EXPECT_EQ(cdc_exists(c.graph).exists, Tristate::no);
    EXPECT_FALSE(brute_cdc(c.graph));
    auto cover = cover_even(c.graph);
    EXPECT_TRUE(cover.report.valid);
    EXPECT_TRUE(cover.report.bound_23_9);
    ASSERT_EQ(c.comments.size(), 2u);
    EXPECT_NE(c.comments[1].find("e1=1"), std::string::npos);
}

TEST(GenNoCdc, Rejections) {
    EXPECT_THROW(gen_no_cdc(k4()), Error);
    EXPECT_THROW(gen_no_cdc(graph("p sg 3 3\ne 1 2 +\ne 2 3 +\ne 1 3 +\n")), Error);
    EXPECT_THROW(gen_no_cdc(two_blocks(), std::make_pair(EdgeId{1}, EdgeId{2})), Error);
}

TEST(GenNoCdc, CorpusWithTwoEdgeCuts) {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int na = 4 + 2 * static_cast<int>(seed % 2);
        const int nb = 4 + 2 * static_cast<int>(seed % 3 == 0);
        auto base = joined(seed, na, nb);
        auto c = gen_no_cdc(base);
        EXPECT_EQ(eps(c.graph), 2);
        EXPECT_EQ(cdc_exists(c.graph).exists, Tristate::no) << to_text(c.graph);
        EXPECT_TRUE(cover_even(c.graph).report.valid);
        ++checked;
    }
    EXPECT_EQ(checked, 12);
}

TEST(BarbellProperty, VacuousAndOnFoundDoubleCovers) {
    auto p = prism();
    auto r = cdc_exists(p);
    ASSERT_EQ(r.exists, Tristate::yes);
    EXPECT_TRUE(barbell_cdc_property(p, r.witness).holds);

    int with_barbells = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = gen_random(seed % 2 ? 8 : 10, 2 + static_cast<int>(seed % 5), seed);
        auto d = cdc_exists(g);
        if (d.exists != Tristate::yes) continue;
        with_barbells += std::any_of(d.witness.circuits.begin(), d.witness.circuits.end(),
                                     [](const Circuit& c) { return c.is_barbell(); });
        auto b = barbell_cdc_property(g, d.witness);
        EXPECT_TRUE(b.holds) << to_text(g) << to_text(d.witness);
    }
    EXPECT_GT(with_barbells, 0);
}

TEST(BarbellProperty, RequiresDoubleCover) {
    auto p = prism();
    auto once = bridgeless_cycle_cover(p);
    EXPECT_THROW(barbell_cdc_property(p, once), Error);
    EXPECT_THROW(barbell_cdc_property(graph("p sg 3 3\ne 1 2 +\ne 2 3 +\ne 1 3 +\n"), {}), Error);
}

TEST(Oracle, Deterministic) {
    auto g = gen_random(12, 5, 77);
    if (eps(g) == 1) GTEST_SKIP();
    EXPECT_EQ(to_text(exact_scc(g).witness), to_text(exact_scc(g).witness));
    EXPECT_EQ(to_text(cdc_exists(g).witness), to_text(cdc_exists(g).witness));
}
