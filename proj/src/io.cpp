#include <p5hom/io.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace p5hom {

ParseError::ParseError(int line, const std::string & what) :
    std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

namespace {
    std::vector<std::string_view> tokens(std::string_view line)
    {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            auto start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i > start)
                out.push_back(line.substr(start, i - start));
        }
        return out;
    }

    template <typename F>
    void for_each_line(std::string_view text, F && f)
    {
        int number = 0;
        while (!text.empty()) {
            auto eol = text.find('\n');
            auto line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
            ++number;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            auto toks = tokens(line);
            if (!toks.empty())
                f(number, toks);
        }
    }

    long integer(int line, std::string_view tok)
    {
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
        return value;
    }

    /// 1-based id in 1..limit, returned 0-based.
    int index(int line, std::string_view tok, long limit, const char * what)
    {
        auto v = integer(line, tok);
        if (v < 1 || v > limit)
            throw ParseError(line, std::string(what) + " " + std::string(tok) + " out of range 1.." +
                                       std::to_string(limit));
        return static_cast<int>(v - 1);
    }

    void arity(int line, const std::vector<std::string_view> & toks, std::size_t n)
    {
        if (toks.size() != n)
            throw ParseError(line, std::string(toks[0]) + " takes " + std::to_string(n - 1) + " arguments");
    }
}

Instance parse_instance(std::string_view text)
{
    std::optional<PatternGraph> h;
    std::optional<Graph> g;
    std::vector<std::optional<Rational>> weights;
    std::vector<std::optional<ColorSet>> lists;

    for_each_line(text, [&](int line, const std::vector<std::string_view> & toks) {
        auto key = toks[0];
        if (key == "H") {
            arity(line, toks, 2);
            if (h)
                throw ParseError(line, "duplicate H line");
            auto k = integer(line, toks[1]);
            if (k < 0 || k > max_colors)
                throw ParseError(line, "pattern size must be in 0.." + std::to_string(max_colors));
            h.emplace(static_cast<int>(k));
        } else if (key == "HEDGE") {
            arity(line, toks, 3);
            if (!h)
                throw ParseError(line, "HEDGE before H");
            if (g)
                throw ParseError(line, "HEDGE after G");
            auto a = index(line, toks[1], h->size(), "color");
            auto b = index(line, toks[2], h->size(), "color");
            if (a == b)
                throw ParseError(line, "loop at color " + std::string(toks[1]) + " in H");
            h->add_edge(a, b);
        } else if (key == "G") {
            arity(line, toks, 2);
            if (!h)
                throw ParseError(line, "G before H");
            if (g)
                throw ParseError(line, "duplicate G line");
            auto n = integer(line, toks[1]);
            if (n < 0 || n > 1'000'000)
                throw ParseError(line, "bad vertex count");
            g.emplace(static_cast<int>(n));
            weights.assign(static_cast<std::size_t>(n), std::nullopt);
            lists.assign(static_cast<std::size_t>(n), std::nullopt);
        } else if (key == "GEDGE" || key == "WT" || key == "LIST") {
            if (!g)
                throw ParseError(line, std::string(key) + " before G");
            if (key == "GEDGE") {
                arity(line, toks, 3);
                auto u = index(line, toks[1], g->order(), "vertex");
                auto v = index(line, toks[2], g->order(), "vertex");
                if (u == v)
                    throw ParseError(line, "loop at vertex " + std::string(toks[1]));
                g->add_edge(u, v);
            } else if (key == "WT") {
                arity(line, toks, 3);
                auto u = index(line, toks[1], g->order(), "vertex");
                if (weights[u])
                    throw ParseError(line, "second weight for vertex " + std::string(toks[1]));
                Rational w;
                try {
                    w = parse_rational(toks[2]);
                } catch (const std::invalid_argument & e) {
                    throw ParseError(line, e.what());
                }
                if (w < 0)
                    throw ParseError(line, "negative weight " + std::string(toks[2]));
                weights[u] = w;
            } else {
                if (toks.size() < 2)
                    throw ParseError(line, "LIST needs a vertex");
                auto u = index(line, toks[1], g->order(), "vertex");
                if (lists[u])
                    throw ParseError(line, "second list for vertex " + std::string(toks[1]));
                ColorSet l = 0;
                for (std::size_t i = 2; i < toks.size(); ++i)
                    l |= color_bit(index(line, toks[i], h->size(), "color"));
                lists[u] = l;
            }
        } else {
            throw ParseError(line, "unknown directive '" + std::string(key) + "'");
        }
    });

    if (!h)
        throw ParseError(0, "missing H line");
    if (!g)
        throw ParseError(0, "missing G line");
    Instance inst = Instance::uniform(std::move(*g), std::move(*h));
    for (std::size_t v = 0; v < weights.size(); ++v) {
        if (weights[v])
            inst.weight[v] = *weights[v];
        if (lists[v])
            inst.lists[v] = *lists[v];
    }
    return inst;
}

std::string serialize_instance(const Instance & inst)
{
    std::ostringstream out;
    out << "H " << inst.pattern.size() << '\n';
    for (auto [a, b] : inst.pattern.edges())
        out << "HEDGE " << a + 1 << ' ' << b + 1 << '\n';
    out << "G " << inst.order() << '\n';
    for (auto [u, v] : inst.graph.edges())
        out << "GEDGE " << u + 1 << ' ' << v + 1 << '\n';
    for (int v = 0; v < inst.order(); ++v)
        if (inst.weight[v] != 1)
            out << "WT " << v + 1 << ' ' << format_compact(inst.weight[v]) << '\n';
    const auto full = all_colors(inst.pattern.size());
    for (int v = 0; v < inst.order(); ++v) {
        if (inst.lists[v] == full)
            continue;
        out << "LIST " << v + 1;
        for (Color c = 0; c < inst.pattern.size(); ++c)
            if (inst.lists[v] & color_bit(c))
                out << ' ' << c + 1;
        out << '\n';
    }
    return out.str();
}

std::string serialize_solution(const Solution & sol)
{
    std::ostringstream out;
    out << "weight " << format_fraction(sol.weight) << '\n';
    sol.chosen.for_each([&](Vertex v) { out << "vertex " << v + 1 << ' ' << sol.coloring[v] + 1 << '\n'; });
    return out.str();
}

Solution parse_solution(std::string_view text, const Instance & inst)
{
    auto sol = Solution::empty(inst.order());
    bool have_weight = false;
    for_each_line(text, [&](int line, const std::vector<std::string_view> & toks) {
        if (toks[0] == "weight") {
            arity(line, toks, 2);
            if (have_weight)
                throw ParseError(line, "duplicate weight line");
            try {
                sol.weight = parse_rational(toks[1]);
            } catch (const std::invalid_argument & e) {
                throw ParseError(line, e.what());
            }
            have_weight = true;
        } else if (toks[0] == "vertex") {
            arity(line, toks, 3);
            auto v = index(line, toks[1], inst.order(), "vertex");
            auto c = index(line, toks[2], inst.pattern.size(), "color");
            if (sol.chosen.contains(v))
                throw ParseError(line, "vertex " + std::string(toks[1]) + " listed twice");
            sol.chosen.insert(v);
            sol.coloring[v] = c;
        } else {
            throw ParseError(line, "unknown directive '" + std::string(toks[0]) + "'");
        }
    });
    if (!have_weight)
        throw ParseError(0, "missing weight line");
    return sol;
}

std::string instance_digest(const Instance & inst)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_instance(inst)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string & path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

}
