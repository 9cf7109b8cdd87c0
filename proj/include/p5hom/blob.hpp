#pragma once

#include <p5hom/family.hpp>
#include <p5hom/mwis.hpp>

namespace p5hom {

/// True iff a and b intersect or an edge of g joins them.
[[nodiscard]] bool touches(const Graph & g, const VertexSet & a, const VertexSet & b);

/// One vertex per family member (same index), edges between touching members, member weights summed.
struct BlobGraph {
    WeightedGraph weighted;
    std::vector<VertexSet> member_of;
};

BlobGraph build_blob_graph(const Instance & inst, const Family & family);

/// Everything the exact pipeline computed for one instance.
struct PipelineResult {
    Family family;
    BlobGraph blob;
    VertexSet picked;  ///< blob vertices of the chosen packing
    SolveResult result;
};

/// Family, blob graph, MWIS on the blob graph, then a per-member coloring of the packing.
/// Throws NotP5FreeError on inputs with an induced P5.
PipelineResult run_pipeline(const Instance & inst, const SolverOptions & opts = {});

inline SolveResult solve_full(const Instance & inst, const SolverOptions & opts = {})
{
    return run_pipeline(inst, opts).result;
}

}
