#pragma once

#include "mask_graph.hpp"

#include <p5hom/instance.hpp>
#include <p5hom/options.hpp>

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace p5hom::detail {

/// Current list per vertex of the base instance; entries outside the live mask are ignored.
using Lists = std::vector<ColorSet>;

/// A partial solution over the base instance.
struct Partial {
    Mask chosen = 0;
    std::vector<std::int8_t> color;  ///< -1 outside chosen
    std::int64_t weight = 0;         ///< scaled
};

struct FamilyTask {
    ColorSet colors = 0;
    std::vector<Vertex> dominators;
    std::vector<Color> assignment;
};

struct FamilyEntry {
    Mask set = 0;
    FamilyTask origin;          ///< empty dominators for singletons
    std::vector<Vertex> extra;  ///< the second dominator set
};

struct CoreRegion {
    Mask remaining = 0;
    Mask region = 0;
};

// Family pruning steps; `alive` is the current graph throughout.
Mask prune_common_neighbors(const MaskGraph & g, Mask alive, std::span<const Vertex> dominators,
                            std::span<const Color> assignment, ColorSet colors);
Mask prune_non_module_components(const MaskGraph & g, Mask alive, Mask dominators);
CoreRegion core_region(const MaskGraph & g, Mask alive, Mask dominators, Mask extra);

/// Bitmask implementation of the connected-case solver, the family construction and the
/// blob reduction, all over sub-instances (live mask + lists) of one base instance.
/// Not thread-safe; parallel callers use one engine per worker.
class Engine {
public:
    Engine(const Instance & inst, SolverOptions opts);

    [[nodiscard]] int order() const { return graph_.n; }
    [[nodiscard]] const MaskGraph & graph() const { return graph_; }
    [[nodiscard]] Mask all() const { return graph_.all(); }
    [[nodiscard]] const Lists & base_lists() const { return base_lists_; }
    [[nodiscard]] int default_dominator_limit() const;
    [[nodiscard]] bool exhaustive() const { return exhaustive_; }
    [[nodiscard]] const SolveStats & stats() const { return stats_; }

    Partial empty_partial() const;

    /// Connected-case solver. Considers dominator sets with index % stride == offset only;
    /// the default visits all of them. found_at reports the index of the winning dominator set.
    Partial connected(Mask alive, const Lists & lists, int dominator_limit);
    Partial connected_slice(Mask alive, const Lists & lists, int dominator_limit, std::size_t offset,
                            std::size_t stride, std::size_t * found_at);

    /// Base case: every live vertex has exactly one color.
    Partial singleton_lists(Mask alive, const Lists & lists);

    /// Family construction, blob graph and MWIS over the sub-instance.
    Partial full(Mask alive, const Lists & lists);

    std::vector<FamilyTask> family_tasks(Mask alive, const Lists & lists) const;
    std::vector<FamilyEntry> run_family_task(const FamilyTask & task, Mask alive, const Lists & lists);
    std::vector<FamilyEntry> family(Mask alive, const Lists & lists);
    /// MWIS over the blob graph of `members`, then colors the chosen packing.
    Partial pack(Mask alive, const Lists & lists, std::span<const Mask> members);
    /// Colors pairwise non-touching members independently.
    Partial color_members(Mask alive, const Lists & lists, std::span<const Mask> members) const;

    // Individual steps, exposed for the public wrappers.
    std::vector<Mask> partition(Mask alive, std::span<const Vertex> dominators) const;
    void second_cleanup(std::span<const Mask> parts, Lists & lists) const;
    bool feasible(Mask alive, const Lists & lists, const Partial & p) const;
    std::int64_t weight_of(Mask s) const;

    void merge_stats(const Engine & other);

private:
    struct Key {
        std::vector<std::uint32_t> data;
        bool operator==(const Key &) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key & k) const;
    };
    Key make_key(Mask alive, const Lists & lists, int tag) const;

    Partial best_singleton(Mask alive, const Lists & lists) const;
    Partial branch(Mask alive, const Lists & lists, int limit, std::size_t offset, std::size_t stride,
                   std::size_t * found_at);
    Partial subproblem(Mask alive, const Lists & lists, int limit);
    bool charge(std::size_t & counter);

    Graph source_;
    MaskGraph graph_;
    PatternGraph pattern_;
    std::vector<std::int64_t> weight_;
    Lists base_lists_;
    SolverOptions opts_;
    bool exhaustive_ = true;
    SolveStats stats_;
    std::unordered_map<Key, Partial, KeyHash> connected_memo_;
    std::unordered_map<Key, Partial, KeyHash> full_memo_;
};

/// Converts an engine partial into a public solution with exact weights.
Solution to_solution(const Instance & inst, const Partial & p);

}
