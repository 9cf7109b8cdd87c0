#pragma once

#include <p5hom/instance.hpp>

namespace p5hom {

struct OracleOptions {
    int max_vertices = 14;
    bool force = false;  ///< ignore max_vertices
};

/// Exhaustive reference solver: backtracking over vertices in id order, each either left out or
/// taken with one of its list colors, cut by the remaining-weight bound. Shares no search code
/// with the pipeline. Throws std::length_error above the size cap unless forced.
Solution oracle_solve(const Instance & inst, const OracleOptions & opts = {});

}
