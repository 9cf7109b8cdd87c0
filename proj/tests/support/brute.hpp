#pragma once

// Exhaustive reference implementations. Deliberately naive and sharing no code with the
// library beyond its data types, so the tests can referee the real solvers.

#include <p5hom/instance.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace brute {

using namespace p5hom;

inline bool independent(const Graph & g, std::uint32_t subset)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((subset >> u & 1) && (subset >> v & 1) && g.has_edge(u, v))
                return false;
    return true;
}

/// Every subset, built up from the subset without its lowest vertex. Fine up to about 20
/// vertices.
inline Rational mwis(const Graph & g, const std::vector<Rational> & w)
{
    const int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1U << v;
        adj[v] |= 1U << u;
    }
    const std::uint32_t count = 1U << n;
    std::vector<char> independent(count, 1);
    std::vector<Rational> sum(count);
    Rational best = 0;
    for (std::uint32_t s = 1; s < count; ++s) {
        int v = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        independent[s] = independent[rest] && !(adj[v] & rest);
        if (!independent[s])
            continue;
        sum[s] = sum[rest] + w[v];
        if (sum[s] > best)
            best = sum[s];
    }
    return best;
}

inline bool connected(const Graph & g, std::uint32_t subset)
{
    if (subset == 0)
        return false;
    std::uint32_t seen = subset & (~subset + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (int u = 0; u < g.order(); ++u)
            if (seen >> u & 1)
                for (int v = 0; v < g.order(); ++v)
                    if ((subset >> v & 1) && !(seen >> v & 1) && g.has_edge(u, v)) {
                        seen |= 1U << v;
                        grew = true;
                    }
    }
    return seen == subset;
}

/// Checks all 5-subsets: a connected 5-vertex subgraph with four edges is a tree, and a tree
/// with maximum degree two is a path.
inline bool has_induced_p5(const Graph & g)
{
    const int n = g.order();
    if (n < 5)
        return false;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (std::popcount(s) != 5 || !connected(g, s))
            continue;
        int edges = 0;
        int max_deg = 0;
        for (int u = 0; u < n; ++u) {
            if (!(s >> u & 1))
                continue;
            int deg = 0;
            for (int v = 0; v < n; ++v)
                if ((s >> v & 1) && g.has_edge(u, v))
                    ++deg;
            edges += deg;
            max_deg = std::max(max_deg, deg);
        }
        if (edges == 8 && max_deg == 2)
            return true;
    }
    return false;
}

/// Tries every color tuple over the vertices of `subset`.
inline bool list_hom(const Graph & g, const PatternGraph & h, const std::vector<ColorSet> & lists,
                     std::uint32_t subset)
{
    std::vector<int> vs;
    for (int v = 0; v < g.order(); ++v)
        if (subset >> v & 1)
            vs.push_back(v);
    std::vector<Color> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> digit(vs.size(), 0);
    const int k = h.size();
    if (k == 0)
        return vs.empty();
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i) {
            color[vs[i]] = digit[i];
            ok = (lists[vs[i]] >> digit[i]) & 1;
        }
        for (std::size_t i = 0; i < vs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && ok; ++j)
                if (g.has_edge(vs[i], vs[j]) && !h.adjacent(color[vs[i]], color[vs[j]]))
                    ok = false;
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == k)
            digit[i++] = 0;
        if (i == digit.size())
            return false;
    }
}

struct Optimum {
    Rational weight = 0;
    bool has_connected_optimum = false;  ///< some maximum-weight feasible set is connected or empty
};

/// Literal definition of the problem: best feasible subset by enumeration.
inline Optimum optimum(const Instance & inst)
{
    const int n = inst.order();
    Optimum out;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (!list_hom(inst.graph, inst.pattern, inst.lists, s))
            continue;
        Rational w = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1)
                w += inst.weight[v];
        bool conn = s == 0 || connected(inst.graph, s);
        if (w > out.weight) {
            out.weight = w;
            out.has_connected_optimum = conn;
        } else if (w == out.weight && conn) {
            out.has_connected_optimum = true;
        }
    }
    return out;
}

inline std::uint32_t bits(const VertexSet & s)
{
    std::uint32_t b = 0;
    s.for_each([&](Vertex v) { b |= 1U << v; });
    return b;
}

}
