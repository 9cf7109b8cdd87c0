#include <p5hom/connected_solver.hpp>

#include "detail/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace p5hom {

using detail::Engine;
using detail::Mask;

DominatorPartition partition_around(const Graph & g, std::span<const Vertex> dominators)
{
    if (dominators.empty())
        throw std::invalid_argument("partition_around: no dominators");
    VertexSet used(g.order());
    for (auto d : dominators) {
        if (d < 0 || d >= g.order())
            throw std::out_of_range("partition_around: dominator out of range");
        if (used.contains(d))
            throw std::invalid_argument("partition_around: repeated dominator");
        used.insert(d);
    }
    DominatorPartition out{{dominators.begin(), dominators.end()}, {}, VertexSet(g.order())};
    for (auto d : dominators) {
        auto part = g.neighbors(d) - used;
        used |= part;
        out.parts.push_back(std::move(part));
    }
    out.rest = g.vertices() - used;
    return out;
}

Restriction apply_tilde_cleanup(const Instance & inst, const DominatorPartition & partition, const TildeGuess & guess)
{
    const auto & g = inst.graph;
    const int parts = static_cast<int>(partition.parts.size());
    std::vector<ColorSet> lists = inst.lists;

    for (const auto & [key, set] : guess.sets) {
        auto [i, j, r] = key;
        if (i < 0 || j <= i || j >= parts || r < 0 || r >= inst.pattern.size())
            throw std::invalid_argument("tilde guess key out of range");
        if (set.size() > 2 || !set.is_subset_of(partition.parts[i]) || !is_independent(g, set))
            throw std::invalid_argument("tilde guess must be an independent set of at most two vertices of its part");
        (g.neighbors(set) & partition.parts[j]).for_each([&](Vertex v) { lists[v] &= inst.pattern.neighbors(r); });
    }

    Engine engine(inst, {});
    std::vector<Mask> masks;
    for (const auto & p : partition.parts)
        masks.push_back(detail::to_mask(p));
    engine.second_cleanup(masks, lists);

    Restriction out{g.vertices() - partition.rest, std::move(lists)};
    for (Vertex v = 0; v < g.order(); ++v)
        if (out.lists[v] == 0)
            out.alive.erase(v);
    return out;
}

Solution solve_base_singleton_lists(const Instance & inst)
{
    for (auto l : inst.lists)
        if (std::popcount(l) > 1)
            throw std::invalid_argument("solve_base_singleton_lists: every list must have at most one color");
    Engine engine(inst, {});
    return detail::to_solution(inst, engine.singleton_lists(engine.all(), inst.lists));
}

SolveResult solve_connected_case(const Instance & inst, const SolverOptions & opts)
{
    const auto workers = static_cast<std::size_t>(std::max(1, opts.parallel));
    if (workers == 1) {
        Engine engine(inst, opts);
        auto best = engine.connected(engine.all(), inst.lists, engine.default_dominator_limit());
        return {detail::to_solution(inst, best), engine.exhaustive(), engine.stats()};
    }

    std::vector<Engine> engines;
    engines.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        engines.emplace_back(inst, opts);
    std::vector<detail::Partial> results(workers);
    std::vector<std::size_t> found(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            auto & e = engines[w];
            results[w] = e.connected_slice(e.all(), inst.lists, e.default_dominator_limit(), w, workers, &found[w]);
        });
    for (auto & t : threads)
        t.join();

    // Heaviest wins; ties go to the earliest dominator set so the answer matches a serial run.
    std::size_t pick = 0;
    for (std::size_t w = 1; w < workers; ++w)
        if (results[w].weight > results[pick].weight ||
            (results[w].weight == results[pick].weight && found[w] < found[pick]))
            pick = w;
    for (std::size_t w = 1; w < workers; ++w)
        engines[0].merge_stats(engines[w]);
    return {detail::to_solution(inst, results[pick]), engines[0].exhaustive(), engines[0].stats()};
}

}
