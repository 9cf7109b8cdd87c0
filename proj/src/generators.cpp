#include <p5hom/generators.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace p5hom {

GraphFamily parse_graph_family(std::string_view name)
{
    if (name == "cograph")
        return GraphFamily::cograph;
    if (name == "split")
        return GraphFamily::split;
    if (name == "random" || name == "random-p5free")
        return GraphFamily::random_p5free;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(GraphFamily f)
{
    switch (f) {
    case GraphFamily::cograph:
        return "cograph";
    case GraphFamily::split:
        return "split";
    case GraphFamily::random_p5free:
        return "random";
    }
    return "?";
}

std::uint64_t StableRng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("StableRng::below: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        auto x = engine_();
        if (x >= threshold)
            return x % bound;
    }
}

bool StableRng::chance(const Rational & p)
{
    if (p <= 0)
        return false;
    if (p >= 1)
        return true;
    if (!p.get_den().fits_ulong_p())
        throw std::invalid_argument("probability denominator too large");
    return below(p.get_den().get_ui()) < p.get_num().get_ui();
}

namespace {
    void cotree(Graph & g, StableRng & rng, const Rational & join, std::vector<Vertex>::const_iterator first,
                std::vector<Vertex>::const_iterator last)
    {
        auto size = last - first;
        if (size <= 1)
            return;
        auto split = first + 1 + static_cast<std::ptrdiff_t>(rng.below(static_cast<std::uint64_t>(size - 1)));
        cotree(g, rng, join, first, split);
        cotree(g, rng, join, split, last);
        if (rng.chance(join))
            for (auto a = first; a != split; ++a)
                for (auto b = split; b != last; ++b)
                    g.add_edge(*a, *b);
    }

    std::vector<Vertex> shuffled(int n, StableRng & rng)
    {
        std::vector<Vertex> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 0);
        for (auto i = ids.size(); i > 1; --i)
            std::swap(ids[i - 1], ids[rng.below(i)]);
        return ids;
    }

    Graph make_graph(const GenSpec & spec, StableRng & rng)
    {
        const int n = spec.n;
        switch (spec.family) {
        case GraphFamily::cograph: {
            Graph g(n);
            auto ids = shuffled(n, rng);
            cotree(g, rng, spec.density, ids.cbegin(), ids.cend());
            return g;
        }
        case GraphFamily::split: {
            Graph g(n);
            std::vector<bool> in_clique(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                in_clique[v] = rng.below(2) == 1;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (in_clique[u] && in_clique[v])
                        g.add_edge(u, v);
                    else if (in_clique[u] != in_clique[v] && rng.chance(spec.density))
                        g.add_edge(u, v);
                }
            return g;
        }
        case GraphFamily::random_p5free:
            for (int attempt = 0; attempt < spec.max_tries; ++attempt) {
                Graph g(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.chance(spec.density))
                            g.add_edge(u, v);
                if (!find_induced_p5(g))
                    return g;
            }
            throw std::runtime_error("no P5-free graph within " + std::to_string(spec.max_tries) + " tries");
        }
        throw std::invalid_argument("unknown graph family");
    }

    PatternGraph make_pattern(const GenSpec & spec)
    {
        switch (spec.pattern) {
        case PatternKind::complete:
            return complete_pattern(spec.k);
        case PatternKind::path:
            return path_pattern(spec.k);
        case PatternKind::explicit_edges: {
            PatternGraph h(spec.k);
            for (auto [a, b] : spec.pattern_edges)
                h.add_edge(a, b);
            return h;
        }
        }
        throw std::invalid_argument("unknown pattern kind");
    }
}

Instance generate(const GenSpec & spec)
{
    if (spec.n < 0 || spec.n > 64)
        throw std::invalid_argument("generator supports 0..64 vertices");
    if (spec.density < 0 || spec.density > 1 || spec.list_density < 0 || spec.list_density > 1)
        throw std::invalid_argument("densities must lie in [0, 1]");
    if (spec.weight_lo < 0 || spec.weight_hi < spec.weight_lo || spec.max_denominator < 1)
        throw std::invalid_argument("bad weight range");

    StableRng rng(spec.seed);
    Instance inst;
    inst.graph = make_graph(spec, rng);
    inst.pattern = make_pattern(spec);
    for (int v = 0; v < spec.n; ++v) {
        ColorSet l = 0;
        for (Color c = 0; c < spec.k; ++c)
            if (rng.chance(spec.list_density))
                l |= color_bit(c);
        inst.lists.push_back(l);
    }
    for (int v = 0; v < spec.n; ++v) {
        auto q = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(spec.max_denominator)));
        auto lo = static_cast<long>(spec.weight_lo) * q;
        auto hi = static_cast<long>(spec.weight_hi) * q;
        auto p = lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
        Rational w(p, q);
        w.canonicalize();
        inst.weight.push_back(w);
    }
    return inst;
}

GenSpec trial_spec(std::uint64_t seed, int index, int max_n, PatternKind pattern, int k)
{
    if (max_n < 1)
        throw std::invalid_argument("max_n must be positive");
    // splitmix64 of (seed, index) so neighbouring trials get unrelated streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;

    StableRng rng(z);
    GenSpec spec;
    spec.family = static_cast<GraphFamily>(index % 3);
    spec.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    spec.density = Rational(static_cast<long>(1 + rng.below(9)), 10);
    spec.seed = z;
    spec.k = k;
    spec.pattern = pattern;
    spec.list_density = Rational(7, 10);
    spec.weight_lo = 0;
    spec.weight_hi = 5;
    spec.max_denominator = 4;
    return spec;
}

}
