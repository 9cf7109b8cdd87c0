#pragma once

#include <p5hom/instance.hpp>

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace p5hom {

enum class GraphFamily { cograph, split, random_p5free };
enum class PatternKind { complete, path, explicit_edges };

GraphFamily parse_graph_family(std::string_view name);
std::string_view to_string(GraphFamily f);

struct GenSpec {
    GraphFamily family = GraphFamily::cograph;
    int n = 6;
    /// Cograph: chance an internal cotree node is a join. Split: chance of each clique-independent
    /// edge. Random: edge probability.
    Rational density{1, 2};
    std::uint64_t seed = 1;
    int k = 2;
    PatternKind pattern = PatternKind::complete;
    std::vector<std::pair<Color, Color>> pattern_edges;  ///< for explicit_edges
    Rational list_density = 1;  ///< chance each color stays in a vertex's list
    int weight_lo = 1;
    int weight_hi = 1;
    int max_denominator = 1;  ///< weights are p/q with q drawn from 1..max_denominator
    int max_tries = 10000;    ///< rejection sampling cap for random_p5free
};

/// Deterministic in the spec. The bit stream is std::mt19937_64 seeded with spec.seed; every
/// bounded draw uses rejection on raw 64-bit outputs, so results do not depend on the standard
/// library's distribution implementations. Throws std::runtime_error when random_p5free
/// exhausts max_tries and std::invalid_argument on a malformed spec.
Instance generate(const GenSpec & spec);

/// Spec for trial `index` of a seeded random campaign: the graph family cycles through all
/// three, n is drawn from 1..max_n, lists keep each color with probability 7/10 and weights
/// are p/q with q <= 4 and p/q in [0, 5].
GenSpec trial_spec(std::uint64_t seed, int index, int max_n, PatternKind pattern, int k);

/// Bounded draws on top of mt19937_64 that are identical on every platform.
class StableRng {
public:
    explicit StableRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability p, p in [0, 1].
    bool chance(const Rational & p);

private:
    std::mt19937_64 engine_;
};

}
