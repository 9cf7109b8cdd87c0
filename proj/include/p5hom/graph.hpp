#pragma once

#include <p5hom/vertex_set.hpp>

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace p5hom {

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    /// Idempotent. Throws std::out_of_range for bad ids and std::invalid_argument for loops.
    void add_edge(Vertex u, Vertex v);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    [[nodiscard]] const VertexSet & neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return adj_[v].size(); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::full(n_); }
    [[nodiscard]] VertexSet empty_set() const { return VertexSet(n_); }

    /// Open neighbourhood of a set: vertices outside s adjacent to some member of s.
    [[nodiscard]] VertexSet neighbors(const VertexSet & s) const;
    /// Closed neighbourhood N[s].
    [[nodiscard]] VertexSet closed_neighbors(const VertexSet & s) const;

    /// Edges as (u, v) pairs with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;
    [[nodiscard]] int edge_count() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;  ///< new id -> old id
    std::vector<Vertex> to_local;     ///< old id -> new id, -1 if dropped
};

/// Re-indexes s in increasing id order. Throws std::out_of_range if s has a different universe.
InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph & g);
/// Components of g[within].
std::vector<VertexSet> connected_components(const Graph & g, const VertexSet & within);

[[nodiscard]] bool is_connected(const Graph & g, const VertexSet & s);

/// True iff every vertex of s has the same neighbourhood outside s. Throws on empty s.
[[nodiscard]] bool is_module(const Graph & g, const VertexSet & s);

/// An ordered 5-tuple inducing a path, if one exists.
std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph & g);

[[nodiscard]] bool is_independent(const Graph & g, const VertexSet & s);

/// Visits every S with lo <= |S| <= hi and g[S] connected, in lexicographic order of the
/// sorted member list. The visitor returns false to stop early.
void for_each_connected_subset(const Graph & g, int lo, int hi, const std::function<bool(const VertexSet &)> & visit);
std::vector<VertexSet> enumerate_connected_subsets(const Graph & g, int lo, int hi);

/// Visits every independent subset of pool with at most maxsize members, the empty set first,
/// in lexicographic order.
void for_each_independent_subset(const Graph & g, const VertexSet & pool, int maxsize,
                                 const std::function<bool(const VertexSet &)> & visit);
std::vector<VertexSet> enumerate_independent_subsets(const Graph & g, const VertexSet & pool, int maxsize);

}
