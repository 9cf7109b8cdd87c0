#include <p5hom/blob.hpp>
#include <p5hom/family.hpp>
#include <p5hom/generators.hpp>

#include "support/brute.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace p5hom;

namespace {

bool contains_member(const Family & f, const VertexSet & s)
{
    return std::find(f.members.begin(), f.members.end(), s) != f.members.end();
}

}

TEST(PruneCommonNeighbors, Examples)
{
    // d1=0, d2=1, u=2 adjacent to both
    Graph g(4, {{0, 2}, {1, 2}, {0, 3}});
    std::vector<Vertex> d{0, 1};
    std::vector<Color> h{0, 1};
    auto left = prune_common_neighbors(g, g.vertices(), d, h, all_colors(2));
    EXPECT_EQ(left, VertexSet(4, {0, 1, 3}));

    Graph only_one(3, {{0, 2}});
    auto kept = prune_common_neighbors(only_one, only_one.vertices(), d, h, all_colors(2));
    EXPECT_EQ(kept, only_one.vertices());
}

TEST(PruneCommonNeighbors, EmptyClassThrows)
{
    Graph g(3, {{0, 1}});
    std::vector<Vertex> d{0, 1};
    std::vector<Color> h{0, 0};
    EXPECT_THROW(prune_common_neighbors(g, g.vertices(), d, h, all_colors(2)), std::invalid_argument);
}

TEST(PruneCommonNeighbors, RepeatsToAFixpoint)
{
    // no survivor may see a dominator of every class
    StableRng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        GenSpec spec;
        spec.family = static_cast<GraphFamily>(trial % 3);
        spec.n = 9;
        spec.seed = rng.below(1U << 30);
        auto g = generate(spec).graph;
        std::vector<Vertex> d{0, 1, 2};
        std::vector<Color> h{0, 1, static_cast<Color>(rng.below(2))};
        auto left = prune_common_neighbors(g, g.vertices(), d, h, all_colors(2));
        left.for_each([&](Vertex u) {
            bool sees0 = false, sees1 = false;
            for (std::size_t i = 0; i < d.size(); ++i)
                if (left.contains(d[i]) && g.has_edge(u, d[i]))
                    (h[i] == 0 ? sees0 : sees1) = true;
            EXPECT_FALSE(sees0 && sees1) << "vertex " << u;
        });
    }
}

TEST(PruneNonModules, Examples)
{
    // d-a-b-c as 0-1-2-3
    auto p4 = path_graph(4);
    auto left = prune_non_module_components(p4, p4.vertices(), VertexSet(4, {0}));
    EXPECT_EQ(left, VertexSet(4, {0, 1}));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(prune_non_module_components(star, star.vertices(), VertexSet(4, {0})), star.vertices());

    // {2} is the only component outside N[0]; singletons are modules
    auto p3 = path_graph(3);
    EXPECT_EQ(prune_non_module_components(p3, p3.vertices(), VertexSet(3, {0})), p3.vertices());
}

TEST(CoreRegion, Examples)
{
    auto p3 = path_graph(3);
    auto a = core_region(p3, p3.vertices(), VertexSet(3, {1}), VertexSet(3));
    EXPECT_EQ(a.region, p3.vertices());
    EXPECT_EQ(a.remaining, p3.vertices());

    auto p4 = path_graph(4);
    auto b = core_region(p4, p4.vertices(), VertexSet(4, {1}), VertexSet(4));
    EXPECT_EQ(b.region, VertexSet(4, {0, 1}));
    EXPECT_EQ(b.remaining, VertexSet(4, {0, 1, 3}));

    auto c = core_region(p4, p4.vertices(), VertexSet(4, {0, 1}), VertexSet(4, {2, 3}));
    EXPECT_EQ(c.region, p4.vertices());
}

TEST(CoreRegion, ResultIsAUnionOfComponents)
{
    StableRng rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec;
        spec.family = static_cast<GraphFamily>(trial % 3);
        spec.n = 9;
        spec.seed = rng.below(1U << 30);
        auto g = generate(spec).graph;
        VertexSet d(9, {static_cast<Vertex>(rng.below(9))});
        VertexSet extra(9);
        if (rng.below(2))
            extra.insert(static_cast<Vertex>(rng.below(9)));
        auto r = core_region(g, g.vertices(), d, extra);
        EXPECT_TRUE(r.region.is_subset_of(r.remaining));
        EXPECT_FALSE(g.neighbors(r.region).intersects(r.remaining)) << "trial " << trial;
        EXPECT_TRUE(r.region.is_subset_of(g.closed_neighbors(d | extra)));
    }
}

TEST(Family, EdgelessGraphGivesSingletons)
{
    auto inst = Instance::uniform(Graph(4), complete_pattern(3));
    auto f = build_family(inst);
    ASSERT_EQ(f.members.size(), 4U);
    for (int v = 0; v < 4; ++v) {
        EXPECT_EQ(f.members[v], VertexSet(4, {v}));
        EXPECT_TRUE(f.provenance[v].singleton());
    }
}

TEST(Family, C5HasAPathOnFourVertices)
{
    auto f = build_family(Instance::uniform(cycle_graph(5), complete_pattern(2)));
    bool found = false;
    for (const auto & m : f.members)
        found |= m.size() == 4 && is_connected(cycle_graph(5), m);
    EXPECT_TRUE(found);
}

TEST(Family, TwoDisjointEdges)
{
    Graph g(4, {{0, 1}, {2, 3}});
    auto f = build_family(Instance::uniform(g, complete_pattern(2)));
    EXPECT_TRUE(contains_member(f, VertexSet(4, {0, 1})));
    EXPECT_TRUE(contains_member(f, VertexSet(4, {2, 3})));
}

TEST(Family, EmptyListVerticesAreNeverMembers)
{
    auto inst = Instance::uniform(path_graph(3), complete_pattern(2));
    inst.lists[1] = 0;
    auto f = build_family(inst);
    for (const auto & m : f.members)
        EXPECT_FALSE(m.contains(1));
}

TEST(Family, RejectsInducedP5)
{
    auto inst = Instance::uniform(path_graph(5), complete_pattern(2));
    try {
        build_family(inst);
        FAIL() << "expected NotP5FreeError";
    } catch (const NotP5FreeError & e) {
        EXPECT_EQ(e.witness().size(), 5U);
    }
}

TEST(Family, MembersAreConnectedColorableDistinctAndFew)
{
    for (int trial = 0; trial < 90; ++trial) {
        auto kind = trial % 3 == 2 ? PatternKind::path : PatternKind::complete;
        const int k = 2 + trial % 2;
        auto inst = generate(trial_spec(808, trial, 8, kind, k));
        auto f = build_family(inst);
        EXPECT_TRUE(f.exhaustive);
        ASSERT_EQ(f.members.size(), f.provenance.size());
        auto sorted = f.members;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
        for (const auto & m : f.members) {
            EXPECT_TRUE(is_connected(inst.graph, m));
            EXPECT_TRUE(brute::list_hom(inst.graph, inst.pattern, inst.lists, brute::bits(m)));
        }
        const double n = inst.order();
        EXPECT_LE(static_cast<double>(f.members.size()), std::pow(k, k) * std::pow(n, 3 * (k + 1)));
    }
}

TEST(Family, ProvenanceDescribesTheGuess)
{
    auto inst = Instance::uniform(cycle_graph(5), complete_pattern(2));
    auto f = build_family(inst);
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto & p = f.provenance[i];
        if (p.singleton())
            continue;
        ASSERT_EQ(p.dominators.size(), p.assignment.size());
        ColorSet used = 0;
        for (auto c : p.assignment)
            used |= color_bit(c);
        EXPECT_EQ(used, p.colors);
        EXPECT_GE(p.dominators.size(), static_cast<std::size_t>(std::popcount(p.colors)));
    }
}

TEST(Family, ParallelBuildIsIdentical)
{
    for (int trial = 0; trial < 15; ++trial) {
        auto inst = generate(trial_spec(5, trial, 8, PatternKind::complete, 3));
        SolverOptions par;
        par.parallel = 4;
        auto a = build_family(inst);
        auto b = build_family(inst, par);
        EXPECT_EQ(a.members, b.members);
    }
}
