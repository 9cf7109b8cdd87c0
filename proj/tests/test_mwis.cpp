#include <p5hom/generators.hpp>
#include <p5hom/mwis.hpp>

#include "support/brute.hpp"

#include <gtest/gtest.h>

using namespace p5hom;

namespace {

WeightedGraph unit(Graph g)
{
    auto n = static_cast<std::size_t>(g.order());
    return {std::move(g), std::vector<Rational>(n, Rational(1))};
}

void expect_valid(const WeightedGraph & wg, const MwisResult & r)
{
    EXPECT_TRUE(is_independent(wg.graph, r.set));
    Rational sum = 0;
    r.set.for_each([&](Vertex v) { sum += wg.weight[v]; });
    EXPECT_EQ(sum, r.weight);
}

}

TEST(Mwis, Examples)
{
    auto c5 = unit(cycle_graph(5));
    auto r = solve_mwis(c5);
    EXPECT_EQ(r.weight, 2);
    expect_valid(c5, r);

    WeightedGraph k3{complete_graph(3), {1, 2, 3}};
    EXPECT_EQ(solve_mwis(k3).weight, 3);
    EXPECT_EQ(solve_mwis(k3).set, VertexSet(3, {2}));

    WeightedGraph p4{path_graph(4), {2, 1, 1, 2}};
    EXPECT_EQ(solve_mwis(p4).weight, 4);
    EXPECT_EQ(solve_mwis(p4).set, VertexSet(4, {0, 3}));
}

TEST(Mwis, EmptyGraph)
{
    EXPECT_EQ(solve_mwis(WeightedGraph{}).weight, 0);
}

TEST(Mwis, RationalWeights)
{
    WeightedGraph g{path_graph(3), {Rational(1, 3), Rational(1, 2), Rational(1, 4)}};
    EXPECT_EQ(solve_mwis(g).weight, Rational(7, 12));
}

TEST(Mwis, MatchesBruteForce)
{
    StableRng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(rng.below(15));
        WeightedGraph wg{Graph(n), {}};
        Rational p(static_cast<long>(1 + rng.below(8)), 10);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(p))
                    wg.graph.add_edge(u, v);
        for (int v = 0; v < n; ++v)
            wg.weight.emplace_back(static_cast<long>(rng.below(20)), static_cast<long>(1 + rng.below(5)));
        for (auto & w : wg.weight)
            w.canonicalize();
        auto r = solve_mwis(wg);
        expect_valid(wg, r);
        ASSERT_EQ(r.weight, brute::mwis(wg.graph, wg.weight)) << "trial " << trial;
    }
}

TEST(Mwis, IsolatedVertexAddsItsWeightAndZeroWeightsAreHarmless)
{
    StableRng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(10));
        WeightedGraph wg{Graph(n), {}};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(Rational(1, 2)))
                    wg.graph.add_edge(u, v);
        for (int v = 0; v < n; ++v)
            wg.weight.emplace_back(static_cast<long>(1 + rng.below(9)));
        auto base = solve_mwis(wg).weight;

        WeightedGraph bigger{Graph(n + 1), wg.weight};
        for (auto [u, v] : wg.graph.edges())
            bigger.graph.add_edge(u, v);
        bigger.weight.emplace_back(Rational(5, 3));
        EXPECT_EQ(solve_mwis(bigger).weight, base + Rational(5, 3));

        bigger.weight.back() = 0;
        for (int u = 0; u < n; ++u)
            if (rng.below(2))
                bigger.graph.add_edge(u, n);
        EXPECT_EQ(solve_mwis(bigger).weight, base);
    }
}

TEST(Mwis, ScalingErrors)
{
    std::vector<Rational> neg{Rational(-1)};
    EXPECT_THROW(scale_to_integers(neg), std::invalid_argument);
    std::vector<Rational> huge{Rational(mpz_class(1) << 70)};
    EXPECT_THROW(scale_to_integers(huge), std::overflow_error);
    std::vector<Rational> mixed{Rational(1, 2), Rational(2, 3)};
    EXPECT_EQ(scale_to_integers(mixed), (std::vector<std::int64_t>{3, 4}));
}
