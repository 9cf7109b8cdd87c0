#include <p5hom/blob.hpp>

#include "detail/engine.hpp"
#include "detail/family_runner.hpp"

#include <stdexcept>

namespace p5hom {

bool touches(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    return a.intersects(b) || g.neighbors(a).intersects(b);
}

BlobGraph build_blob_graph(const Instance & inst, const Family & family)
{
    const auto m = static_cast<int>(family.members.size());
    BlobGraph blob{WeightedGraph{Graph(m), {}}, family.members};
    std::vector<VertexSet> reach;
    reach.reserve(family.members.size());
    for (const auto & c : family.members) {
        if (c.universe() != inst.order())
            throw std::invalid_argument("family member does not belong to the instance");
        blob.weighted.weight.push_back(weight_of(inst, c));
        reach.push_back(inst.graph.closed_neighbors(c));
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (reach[a].intersects(family.members[b]))
                blob.weighted.graph.add_edge(a, b);
    return blob;
}

PipelineResult run_pipeline(const Instance & inst, const SolverOptions & opts)
{
    require_p5_free(inst.graph);
    detail::Engine engine(inst, opts);
    auto entries = detail::run_family(engine, inst, opts);

    PipelineResult out;
    out.family = detail::to_family(inst, engine, entries);
    out.blob = build_blob_graph(inst, out.family);
    auto packing = solve_mwis(out.blob.weighted);
    out.picked = packing.set;

    std::vector<detail::Mask> members;
    packing.set.for_each([&](Vertex b) { members.push_back(detail::to_mask(out.family.members[b])); });
    detail::Mask chosen = 0;
    for (auto m : members) {
        if (chosen & m)
            throw std::logic_error("blob packing selected overlapping members");
        chosen |= m;
    }
    auto partial = engine.color_members(engine.all(), inst.lists, members);

    out.result.solution = detail::to_solution(inst, partial);
    if (out.result.solution.weight != packing.weight)
        throw std::logic_error("packing weight differs from the blob independent set weight");
    out.result.exhaustive = engine.exhaustive();
    out.result.stats = engine.stats();
    return out;
}

}
