#include <p5hom/family.hpp>

#include "detail/engine.hpp"
#include "detail/family_runner.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace p5hom {

using detail::Mask;
using detail::MaskGraph;

namespace {
    std::string describe(const std::array<Vertex, 5> & w)
    {
        std::string s = "graph contains an induced P5:";
        for (auto v : w)
            s += " " + std::to_string(v + 1);
        return s;
    }

    std::vector<Vertex> checked_dominators(const Graph & g, std::span<const Vertex> dominators)
    {
        for (auto d : dominators)
            if (d < 0 || d >= g.order())
                throw std::out_of_range("dominator out of range");
        return {dominators.begin(), dominators.end()};
    }
}

NotP5FreeError::NotP5FreeError(std::array<Vertex, 5> witness) : std::invalid_argument(describe(witness)), witness_(witness)
{
}

void require_p5_free(const Graph & g)
{
    if (auto w = find_induced_p5(g))
        throw NotP5FreeError(*w);
}

VertexSet prune_common_neighbors(const Graph & g, const VertexSet & alive, std::span<const Vertex> dominators,
                                 std::span<const Color> assignment, ColorSet colors)
{
    if (assignment.size() != dominators.size())
        throw std::invalid_argument("prune_common_neighbors: assignment must cover the dominators");
    ColorSet hit = 0;
    for (auto c : assignment) {
        if (c < 0 || c >= max_colors)
            throw std::out_of_range("prune_common_neighbors: color out of range");
        hit |= color_bit(c);
    }
    if ((hit & colors) != colors)
        throw std::invalid_argument("prune_common_neighbors: empty color class");
    MaskGraph mg(g);
    auto ds = checked_dominators(g, dominators);
    return detail::to_set(detail::prune_common_neighbors(mg, detail::to_mask(alive), ds, assignment, colors), g.order());
}

VertexSet prune_non_module_components(const Graph & g, const VertexSet & alive, const VertexSet & dominators)
{
    MaskGraph mg(g);
    return detail::to_set(detail::prune_non_module_components(mg, detail::to_mask(alive), detail::to_mask(dominators)),
                          g.order());
}

CoreRegion core_region(const Graph & g, const VertexSet & alive, const VertexSet & dominators, const VertexSet & extra)
{
    if (!dominators.is_subset_of(alive) || !extra.is_subset_of(alive))
        throw std::invalid_argument("core_region: dominators must lie in the current graph");
    MaskGraph mg(g);
    auto r = detail::core_region(mg, detail::to_mask(alive), detail::to_mask(dominators), detail::to_mask(extra));
    return {detail::to_set(r.remaining, g.order()), detail::to_set(r.region, g.order())};
}

namespace detail {

    std::vector<FamilyEntry> run_family(Engine & engine, const Instance & inst, const SolverOptions & opts)
    {
        const Mask alive = engine.all();
        const auto & lists = inst.lists;
        const auto workers = static_cast<std::size_t>(std::max(1, opts.parallel));
        auto tasks = engine.family_tasks(alive, lists);

        std::vector<std::vector<FamilyEntry>> produced(tasks.size());
        if (workers == 1) {
            for (std::size_t t = 0; t < tasks.size(); ++t)
                produced[t] = engine.run_family_task(tasks[t], alive, lists);
        }
        else {
            std::vector<Engine> engines;
            engines.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
                engines.emplace_back(inst, opts);
            std::vector<std::thread> threads;
            for (std::size_t w = 0; w < workers; ++w)
                threads.emplace_back([&, w] {
                    for (std::size_t t = w; t < tasks.size(); t += workers)
                        produced[t] = engines[w].run_family_task(tasks[t], alive, lists);
                });
            for (auto & t : threads)
                t.join();
            for (const auto & e : engines)
                engine.merge_stats(e);
        }

        // Singletons first, then task output in task order; first occurrence wins.
        std::vector<FamilyEntry> members;
        std::unordered_set<Mask> have;
        for (Vertex v = 0; v < inst.order(); ++v)
            if (lists[v]) {
                have.insert(vbit(v));
                members.push_back(FamilyEntry{vbit(v), {}, {}});
            }
        for (auto & batch : produced)
            for (auto & e : batch)
                if (have.insert(e.set).second)
                    members.push_back(std::move(e));
        return members;
    }

    Family to_family(const Instance & inst, const Engine & engine, const std::vector<FamilyEntry> & entries)
    {
        Family fam;
        for (const auto & e : entries) {
            fam.members.push_back(to_set(e.set, inst.order()));
            fam.provenance.push_back(
                FamilyProvenance{e.origin.colors, e.origin.dominators, e.origin.assignment, e.extra});
        }
        fam.exhaustive = engine.exhaustive();
        fam.stats = engine.stats();
        return fam;
    }

}

Family build_family(const Instance & inst, const SolverOptions & opts)
{
    require_p5_free(inst.graph);
    detail::Engine engine(inst, opts);
    auto entries = detail::run_family(engine, inst, opts);
    return detail::to_family(inst, engine, entries);
}

}
