#include <p5hom/instance.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace p5hom {

PatternGraph::PatternGraph(int k) : k_(k)
{
    if (k < 0 || k > max_colors)
        throw std::invalid_argument("pattern size must be in 0.." + std::to_string(max_colors));
    adj_.assign(static_cast<std::size_t>(k), 0);
}

void PatternGraph::add_edge(Color a, Color b)
{
    if (a < 0 || b < 0 || a >= k_ || b >= k_)
        throw std::out_of_range("pattern edge endpoint out of range");
    if (a == b)
        throw std::invalid_argument("pattern graph must be loopless (color " + std::to_string(a + 1) + ")");
    adj_[a] |= color_bit(b);
    adj_[b] |= color_bit(a);
}

bool PatternGraph::is_complete() const
{
    for (Color c = 0; c < k_; ++c)
        if (adj_[c] != (all_colors(k_) & ~color_bit(c)))
            return false;
    return true;
}

std::vector<std::pair<Color, Color>> PatternGraph::edges() const
{
    std::vector<std::pair<Color, Color>> out;
    for (Color a = 0; a < k_; ++a)
        for (Color b = a + 1; b < k_; ++b)
            if (adjacent(a, b))
                out.emplace_back(a, b);
    return out;
}

PatternGraph complete_pattern(int k)
{
    PatternGraph h(k);
    for (Color a = 0; a < k; ++a)
        for (Color b = a + 1; b < k; ++b)
            h.add_edge(a, b);
    return h;
}

PatternGraph path_pattern(int k)
{
    PatternGraph h(k);
    for (Color a = 0; a + 1 < k; ++a)
        h.add_edge(a, a + 1);
    return h;
}

Instance Instance::uniform(Graph g, PatternGraph h)
{
    Instance inst;
    auto n = static_cast<std::size_t>(g.order());
    inst.lists.assign(n, all_colors(h.size()));
    inst.weight.assign(n, Rational(1));
    inst.graph = std::move(g);
    inst.pattern = std::move(h);
    return inst;
}

void Instance::validate() const
{
    auto n = static_cast<std::size_t>(graph.order());
    if (weight.size() != n || lists.size() != n)
        throw std::invalid_argument("weights and lists must cover every vertex");
    for (std::size_t v = 0; v < n; ++v) {
        if (weight[v] < 0)
            throw std::invalid_argument("negative weight at vertex " + std::to_string(v + 1));
        if (lists[v] & ~all_colors(pattern.size()))
            throw std::invalid_argument("list of vertex " + std::to_string(v + 1) + " names a color outside H");
    }
}

Solution Solution::empty(int n)
{
    return Solution{VertexSet(n), std::vector<Color>(static_cast<std::size_t>(n), -1), Rational(0)};
}

Rational weight_of(const Instance & inst, const VertexSet & s)
{
    Rational w = 0;
    s.for_each([&](Vertex v) { w += inst.weight[v]; });
    return w;
}

std::optional<Violation> verify_solution(const Instance & inst, const Solution & sol)
{
    auto n = inst.order();
    if (sol.chosen.universe() != n)
        throw std::out_of_range("solution vertex set does not match the instance");
    if (sol.coloring.size() != static_cast<std::size_t>(n))
        return Violation{Violation::Kind::coloring_shape, -1, -1, "coloring does not cover the instance"};

    for (Vertex v = 0; v < n; ++v) {
        auto c = sol.coloring[v];
        if (!sol.chosen.contains(v)) {
            if (c != -1)
                return Violation{Violation::Kind::coloring_shape, v, -1,
                                 "vertex " + std::to_string(v + 1) + " is colored but not chosen"};
            continue;
        }
        if (c < 0 || c >= inst.pattern.size() || !(inst.lists[v] & color_bit(c)))
            return Violation{Violation::Kind::list, v, -1,
                             "vertex " + std::to_string(v + 1) + " has color " + std::to_string(c + 1) +
                                 " outside its list"};
    }
    for (auto [u, v] : inst.graph.edges()) {
        if (!sol.chosen.contains(u) || !sol.chosen.contains(v))
            continue;
        if (!inst.pattern.adjacent(sol.coloring[u], sol.coloring[v]))
            return Violation{Violation::Kind::edge, u, v,
                             "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " maps to non-edge (" +
                                 std::to_string(sol.coloring[u] + 1) + "," + std::to_string(sol.coloring[v] + 1) +
                                 ") of H"};
    }
    if (auto w = weight_of(inst, sol.chosen); w != sol.weight)
        return Violation{Violation::Kind::weight, -1, -1,
                         "weight " + format_fraction(sol.weight) + " differs from actual " + format_fraction(w)};
    return std::nullopt;
}

namespace {
    struct HomSearch {
        const Graph & g;
        const PatternGraph & h;
        std::vector<Color> color;

        bool run(std::vector<ColorSet> & domain)
        {
            // Most constrained unassigned vertex first.
            Vertex pick = -1;
            int best = max_colors + 1;
            for (Vertex v = 0; v < g.order(); ++v)
                if (color[v] == -1 && std::popcount(domain[v]) < best) {
                    best = std::popcount(domain[v]);
                    pick = v;
                }
            if (pick == -1)
                return true;
            for (auto options = domain[pick]; options; options &= options - 1) {
                Color c = std::countr_zero(options);
                auto saved = domain;
                bool wiped = false;
                g.neighbors(pick).for_each([&](Vertex w) {
                    if (color[w] == -1) {
                        domain[w] &= h.neighbors(c);
                        wiped = wiped || domain[w] == 0;
                    }
                });
                color[pick] = c;
                if (!wiped && run(domain))
                    return true;
                color[pick] = -1;
                domain = std::move(saved);
            }
            return false;
        }
    };
}

std::optional<std::vector<Color>> exists_list_hom(const Graph & g, const PatternGraph & h,
                                                  std::span<const ColorSet> lists)
{
    if (lists.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("exists_list_hom: lists must be total");
    std::vector<ColorSet> domain(lists.begin(), lists.end());
    for (auto & d : domain)
        d &= all_colors(h.size());
    HomSearch search{g, h, std::vector<Color>(static_cast<std::size_t>(g.order()), -1)};
    if (!search.run(domain))
        return std::nullopt;
    return std::move(search.color);
}

}
