#pragma once

#include <p5hom/instance.hpp>

#include <cstddef>

namespace p5hom {

/// How the connected-case recursion solves the per-part sub-instances.
enum class SubproblemSolver {
    connected,  ///< recurse into the connected-case solver itself
    full,       ///< recurse into the full family + blob pipeline (exact without a connectivity promise)
};

struct SolverOptions {
    /// Maximum branches explored by any single enumeration loop; 0 means unlimited.
    std::size_t budget = 0;
    /// Worker threads for the outermost enumeration loop.
    int parallel = 1;
    SubproblemSolver subproblems = SubproblemSolver::full;
};

struct SolveStats {
    std::size_t connected_calls = 0;
    std::size_t memo_hits = 0;
    std::size_t branches = 0;
    std::size_t family_tasks = 0;
};

struct SolveResult {
    Solution solution;
    /// False when a budget cap cut an enumeration short.
    bool exhaustive = true;
    SolveStats stats;
};

}
