#pragma once

#include <p5hom/graph.hpp>
#include <p5hom/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace p5hom {

/// Colors are 0-based (0..k-1) inside the library.
using Color = int;
/// Bitmask of colors; limits patterns to 32 colors.
using ColorSet = std::uint32_t;

inline constexpr int max_colors = 32;

inline ColorSet color_bit(Color c) { return ColorSet{1} << c; }
inline ColorSet all_colors(int k) { return k >= 32 ? ~ColorSet{0} : (ColorSet{1} << k) - 1; }

/// The fixed target graph H. Loopless and simple.
class PatternGraph {
public:
    PatternGraph() = default;
    explicit PatternGraph(int k);

    /// Idempotent. Throws std::invalid_argument on a loop, std::out_of_range on a bad color.
    void add_edge(Color a, Color b);

    [[nodiscard]] int size() const { return k_; }
    [[nodiscard]] bool adjacent(Color a, Color b) const { return (adj_[a] >> b) & 1U; }
    [[nodiscard]] ColorSet neighbors(Color c) const { return adj_[c]; }
    [[nodiscard]] bool is_complete() const;
    [[nodiscard]] std::vector<std::pair<Color, Color>> edges() const;

    friend bool operator==(const PatternGraph &, const PatternGraph &) = default;

private:
    int k_ = 0;
    std::vector<ColorSet> adj_;
};

PatternGraph complete_pattern(int k);
PatternGraph path_pattern(int k);

struct Instance {
    Graph graph;
    PatternGraph pattern;
    std::vector<Rational> weight;  ///< nonnegative, one per vertex
    std::vector<ColorSet> lists;   ///< allowed colors, one per vertex; may be empty

    /// Unit weights and full lists.
    static Instance uniform(Graph g, PatternGraph h);

    [[nodiscard]] int order() const { return graph.order(); }
    /// Throws std::invalid_argument when weights or lists are not total, negative or out of range.
    void validate() const;

    friend bool operator==(const Instance &, const Instance &) = default;
};

struct Solution {
    VertexSet chosen;
    std::vector<Color> coloring;  ///< per vertex of the instance; -1 outside `chosen`
    Rational weight;

    static Solution empty(int n);
    [[nodiscard]] Color color_of(Vertex v) const { return coloring[v]; }
};

struct Violation {
    enum class Kind { list, edge, weight, coloring_shape };
    Kind kind;
    Vertex u = -1;
    Vertex v = -1;
    std::string message;
};

/// nullopt when the solution satisfies every constraint of the instance.
/// Throws std::out_of_range for a chosen vertex outside the graph.
std::optional<Violation> verify_solution(const Instance & inst, const Solution & sol);

/// Total coloring of g respecting lists and the edges of h, or nullopt if none exists.
std::optional<std::vector<Color>> exists_list_hom(const Graph & g, const PatternGraph & h,
                                                  std::span<const ColorSet> lists);

Rational weight_of(const Instance & inst, const VertexSet & s);

}
