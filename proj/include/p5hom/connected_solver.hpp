#pragma once

#include <p5hom/instance.hpp>
#include <p5hom/options.hpp>

#include <map>
#include <span>
#include <tuple>
#include <vector>

namespace p5hom {

/// Split of V(G) around an ordered dominator list: part i holds the neighbours of the i-th
/// dominator not already claimed by an earlier part or by a dominator; `rest` is everything else.
struct DominatorPartition {
    std::vector<Vertex> dominators;
    std::vector<VertexSet> parts;
    VertexSet rest;
};

DominatorPartition partition_around(const Graph & g, std::span<const Vertex> dominators);

/// Guessed independent sets of at most two vertices, keyed by (i, j, r) with i < j indexing
/// parts and r a color. Missing keys mean the empty guess.
struct TildeGuess {
    std::map<std::tuple<int, int, Color>, VertexSet> sets;
};

/// A sub-instance of a fixed instance: the surviving vertices and their current lists.
struct Restriction {
    VertexSet alive;
    std::vector<ColorSet> lists;
};

/// Both list cleanups for one guess. Neighbours of a guessed set in the later part keep only
/// colors adjacent in H to the guessed color; then, across every edge between parts i < j,
/// colors shared with the j-side are removed from the i-side vertex, to a fixpoint. Vertices left
/// with empty lists are dropped, as is the partition's rest. Throws std::invalid_argument for a
/// malformed guess.
Restriction apply_tilde_cleanup(const Instance & inst, const DominatorPartition & partition, const TildeGuess & guess);

/// Optimum when every vertex with a nonempty list has exactly one color: a maximum weight
/// independent set of the conflict graph. Throws std::invalid_argument otherwise.
Solution solve_base_singleton_lists(const Instance & inst);

/// Dominator-guessing solver; exact whenever some optimum is connected and H is complete.
/// Every returned solution is feasible for any H. Requires at most 64 vertices.
SolveResult solve_connected_case(const Instance & inst, const SolverOptions & opts = {});

}
