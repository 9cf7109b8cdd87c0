#pragma once

#include <p5hom/graph.hpp>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace p5hom::detail {

/// Vertex subset of a graph with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr int mask_capacity = 64;

inline Mask vbit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(Mask m, F && f)
{
    for (; m; m &= m - 1)
        f(static_cast<Vertex>(std::countr_zero(m)));
}

inline Mask to_mask(const VertexSet & s)
{
    return s.words().empty() ? 0 : s.words()[0];
}

inline VertexSet to_set(Mask m, int n)
{
    VertexSet s(n);
    for_each_bit(m, [&](Vertex v) { s.insert(v); });
    return s;
}

struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;

    explicit MaskGraph(const Graph & g) : n(g.order()), adj(static_cast<std::size_t>(g.order()))
    {
        if (n > mask_capacity)
            throw std::length_error("the exact pipeline supports at most 64 vertices");
        for (Vertex v = 0; v < n; ++v)
            adj[v] = to_mask(g.neighbors(v));
    }

    [[nodiscard]] Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    /// Union of neighbourhoods of s, including s itself, intersected with within.
    [[nodiscard]] Mask closed_nbhd(Mask s, Mask within) const
    {
        Mask out = s;
        for_each_bit(s, [&](Vertex v) { out |= adj[v]; });
        return out & within;
    }
    [[nodiscard]] Mask open_nbhd(Mask s, Mask within) const { return closed_nbhd(s, within) & ~s; }

    /// Component of g[within] containing root.
    [[nodiscard]] Mask component(Vertex root, Mask within) const
    {
        Mask comp = vbit(root);
        Mask frontier = comp;
        while (frontier) {
            Mask grow = 0;
            for_each_bit(frontier, [&](Vertex v) { grow |= adj[v]; });
            frontier = grow & within & ~comp;
            comp |= frontier;
        }
        return comp;
    }

    /// Components of g[within], ordered by lowest member.
    [[nodiscard]] std::vector<Mask> components(Mask within) const
    {
        std::vector<Mask> out;
        while (within) {
            auto c = component(lowest(within), within);
            out.push_back(c);
            within &= ~c;
        }
        return out;
    }

    [[nodiscard]] bool connected(Mask s) const { return s && component(lowest(s), s) == s; }

    [[nodiscard]] bool independent(Mask s) const
    {
        bool ok = true;
        for_each_bit(s, [&](Vertex v) { ok = ok && !(adj[v] & s); });
        return ok;
    }

    /// Module test inside g[within].
    [[nodiscard]] bool is_module(Mask s, Mask within) const
    {
        Mask outside = adj[lowest(s)] & within & ~s;
        bool ok = true;
        for_each_bit(s, [&](Vertex v) { ok = ok && (adj[v] & within & ~s) == outside; });
        return ok;
    }
};

/// Visits subsets of pool with 1..hi members in lexicographic order; visit returns false to stop.
template <typename F>
bool for_each_small_subset(Mask pool, int hi, F && visit, Mask cur = 0, int size = 0)
{
    if (size == hi)
        return true;
    for (Mask rest = pool; rest; rest &= rest - 1) {
        Mask b = rest & (~rest + 1);
        Mask next = cur | b;
        if (!visit(next, size + 1))
            return false;
        Mask later = pool & ~((b << 1) - 1);
        if (!for_each_small_subset(later, hi, visit, next, size + 1))
            return false;
    }
    return true;
}

}
