#pragma once

#include <p5hom/graph.hpp>
#include <p5hom/rational.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace p5hom {

struct WeightedGraph {
    Graph graph;
    std::vector<Rational> weight;
};

struct MwisResult {
    VertexSet set;
    Rational weight;
};

/// Exact maximum weight independent set on an arbitrary graph.
///
/// Branch and bound: branch on a maximum-degree vertex (take it and drop its closed
/// neighbourhood, or drop it), after exhausting the degree-0 and degree-1 reductions.
/// Subtrees are cut with the smaller of two upper bounds: the total remaining weight and a
/// greedy weighted clique cover. Exponential in the worst case.
MwisResult solve_mwis(const WeightedGraph & wg);

/// Same search on integer weights; returns the chosen set.
VertexSet solve_mwis_scaled(const Graph & g, std::span<const std::int64_t> weight);

/// Multiplies every weight by the lcm of the denominators. Throws std::overflow_error when the
/// scaled total does not fit comfortably in 64 bits, std::invalid_argument on a negative weight.
std::vector<std::int64_t> scale_to_integers(std::span<const Rational> weight);

}
