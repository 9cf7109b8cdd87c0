#include <p5hom/graph.hpp>

#include <stdexcept>
#include <string>

namespace p5hom {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

VertexSet Graph::neighbors(const VertexSet & s) const
{
    VertexSet out(n_);
    s.for_each([&](Vertex v) { out |= adj_[v]; });
    return out - s;
}

VertexSet Graph::closed_neighbors(const VertexSet & s) const
{
    VertexSet out = s;
    s.for_each([&](Vertex v) { out |= adj_[v]; });
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (auto v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto & row : adj_)
        twice += row.size();
    return twice / 2;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw std::out_of_range("vertex set universe does not match graph order");
    InducedSubgraph out;
    out.to_local.assign(static_cast<std::size_t>(g.order()), -1);
    out.to_original = s.to_vector();
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        out.to_local[out.to_original[i]] = static_cast<Vertex>(i);
    out.graph = Graph(static_cast<int>(out.to_original.size()));
    for (std::size_t i = 0; i < out.to_original.size(); ++i)
        (g.neighbors(out.to_original[i]) & s).for_each([&](Vertex w) {
            auto j = out.to_local[w];
            if (j > static_cast<Vertex>(i))
                out.graph.add_edge(static_cast<Vertex>(i), j);
        });
    return out;
}

std::vector<VertexSet> connected_components(const Graph & g, const VertexSet & within)
{
    std::vector<VertexSet> out;
    VertexSet left = within;
    for (auto root = left.first(); root != -1; root = left.first()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(root);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grow(g.order());
            frontier.for_each([&](Vertex v) { grow |= g.neighbors(v); });
            frontier = (grow & within) - comp;
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph & g)
{
    return connected_components(g, g.vertices());
}

bool is_connected(const Graph & g, const VertexSet & s)
{
    return !s.empty() && connected_components(g, s).size() == 1;
}

bool is_module(const Graph & g, const VertexSet & s)
{
    if (s.empty())
        throw std::invalid_argument("is_module: empty set");
    auto first = s.first();
    VertexSet outside = g.neighbors(first) - s;
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbors(v) - s != outside)
            ok = false;
    });
    return ok;
}

std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph & g)
{
    // Grow induced paths v1..v5: each next vertex is adjacent to the last and to no earlier one.
    for (Vertex a = 0; a < g.order(); ++a) {
        VertexSet blocked_a = g.neighbors(a);
        blocked_a.insert(a);
        for (auto b : g.neighbors(a).to_vector()) {
            VertexSet blocked_ab = blocked_a | g.neighbors(b);
            for (auto c : (g.neighbors(b) - blocked_a).to_vector()) {
                VertexSet blocked_abc = blocked_ab | g.neighbors(c);
                for (auto d : (g.neighbors(c) - blocked_ab).to_vector()) {
                    auto e = (g.neighbors(d) - blocked_abc).first();
                    if (e != -1)
                        return std::array<Vertex, 5>{a, b, c, d, e};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_independent(const Graph & g, const VertexSet & s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbors(v).intersects(s))
            ok = false;
    });
    return ok;
}

namespace {
    // Lexicographic DFS over combinations drawn from `pool`; `accept` filters candidate extensions.
    template <typename Accept>
    bool lex_subsets(const VertexSet & pool, VertexSet & cur, int size, int hi, Vertex from, Accept && accept,
                     const std::function<bool(const VertexSet &)> & visit)
    {
        for (auto v = pool.next(from); v != -1; v = pool.next(v + 1)) {
            if (!accept(cur, v))
                continue;
            cur.insert(v);
            bool go = true;
            if (!visit(cur))
                go = false;
            else if (size + 1 < hi)
                go = lex_subsets(pool, cur, size + 1, hi, v + 1, accept, visit);
            cur.erase(v);
            if (!go)
                return false;
        }
        return true;
    }
}

void for_each_connected_subset(const Graph & g, int lo, int hi, const std::function<bool(const VertexSet &)> & visit)
{
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("enumerate_connected_subsets: need 1 <= lo <= hi");
    VertexSet cur(g.order());
    lex_subsets(
        g.vertices(), cur, 0, hi, 0, [](const VertexSet &, Vertex) { return true; },
        [&](const VertexSet & s) {
            auto sz = s.size();
            if (sz < lo || !is_connected(g, s))
                return true;
            return visit(s);
        });
}

std::vector<VertexSet> enumerate_connected_subsets(const Graph & g, int lo, int hi)
{
    std::vector<VertexSet> out;
    for_each_connected_subset(g, lo, hi, [&](const VertexSet & s) {
        out.push_back(s);
        return true;
    });
    return out;
}

void for_each_independent_subset(const Graph & g, const VertexSet & pool, int maxsize,
                                 const std::function<bool(const VertexSet &)> & visit)
{
    if (maxsize < 0)
        throw std::invalid_argument("enumerate_independent_subsets: negative maxsize");
    VertexSet cur(g.order());
    if (!visit(cur) || maxsize == 0)
        return;
    lex_subsets(
        pool, cur, 0, maxsize, 0, [&](const VertexSet & c, Vertex v) { return !g.neighbors(v).intersects(c); },
        visit);
}

std::vector<VertexSet> enumerate_independent_subsets(const Graph & g, const VertexSet & pool, int maxsize)
{
    std::vector<VertexSet> out;
    for_each_independent_subset(g, pool, maxsize, [&](const VertexSet & s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}
