#pragma once

#include <p5hom/instance.hpp>
#include <p5hom/options.hpp>

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace p5hom {

/// Raised by the exact pipeline when its input contains an induced P5.
class NotP5FreeError : public std::invalid_argument {
public:
    explicit NotP5FreeError(std::array<Vertex, 5> witness);
    [[nodiscard]] const std::array<Vertex, 5> & witness() const { return witness_; }

private:
    std::array<Vertex, 5> witness_;
};

/// Throws NotP5FreeError if g has an induced P5.
void require_p5_free(const Graph & g);

/// Where a family member came from: the color subset, the connected dominator set with its
/// coloring, and the second dominator set of the core region. Singletons have no dominators.
struct FamilyProvenance {
    ColorSet colors = 0;
    std::vector<Vertex> dominators;
    std::vector<Color> assignment;
    std::vector<Vertex> extra;

    [[nodiscard]] bool singleton() const { return dominators.empty(); }
};

/// Connected vertex sets of the original graph, each list-homomorphic to H, such that some
/// optimum is a disjoint non-touching union of members. Members are distinct.
struct Family {
    std::vector<VertexSet> members;
    std::vector<FamilyProvenance> provenance;
    bool exhaustive = true;
    SolveStats stats;
};

/// Repeatedly deletes vertices adjacent to some dominator of every color in `colors`.
/// `alive` is the current graph; returns the survivors. Throws std::invalid_argument when a
/// color of `colors` has no dominator.
VertexSet prune_common_neighbors(const Graph & g, const VertexSet & alive, std::span<const Vertex> dominators,
                                 std::span<const Color> assignment, ColorSet colors);

/// Repeatedly deletes components of (current graph) - N[dominators] that are not modules of
/// the current graph. Returns the survivors.
VertexSet prune_non_module_components(const Graph & g, const VertexSet & alive, const VertexSet & dominators);

struct CoreRegion {
    VertexSet remaining;  ///< current graph after the deletions
    VertexSet region;     ///< closed under neighbourhood inside `remaining`
};

/// Starts from N[dominators + extra] and deletes region vertices with a neighbour outside the
/// region until none is left.
CoreRegion core_region(const Graph & g, const VertexSet & alive, const VertexSet & dominators,
                       const VertexSet & extra);

/// Builds the family. Throws NotP5FreeError when the graph contains an induced P5 and
/// std::length_error above 64 vertices.
Family build_family(const Instance & inst, const SolverOptions & opts = {});

}
