#include "engine.hpp"

#include <p5hom/mwis.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace p5hom::detail {

namespace {
    struct ListsHash {
        std::size_t operator()(const Lists & l) const
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (auto c : l)
                h = (h ^ c) * 0x100000001b3ULL;
            return h;
        }
    };

    std::vector<Vertex> bits_of(Mask m)
    {
        std::vector<Vertex> out;
        for_each_bit(m, [&](Vertex v) { out.push_back(v); });
        return out;
    }

    Mask live_part(Mask alive, const Lists & lists)
    {
        Mask live = 0;
        for_each_bit(alive, [&](Vertex v) {
            if (lists[v])
                live |= vbit(v);
        });
        return live;
    }
}

Engine::Engine(const Instance & inst, SolverOptions opts) :
    source_(inst.graph), graph_(inst.graph), pattern_(inst.pattern), base_lists_(inst.lists), opts_(opts)
{
    inst.validate();
    weight_ = scale_to_integers(inst.weight);
}

int Engine::default_dominator_limit() const
{
    return std::max(pattern_.size(), 3);
}

std::size_t Engine::KeyHash::operator()(const Key & k) const
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : k.data)
        h = (h ^ x) * 0x100000001b3ULL;
    return h;
}

Engine::Key Engine::make_key(Mask alive, const Lists & lists, int tag) const
{
    Key k;
    k.data.reserve(3 + static_cast<std::size_t>(popcount(alive)));
    k.data.push_back(static_cast<std::uint32_t>(tag));
    k.data.push_back(static_cast<std::uint32_t>(alive));
    k.data.push_back(static_cast<std::uint32_t>(alive >> 32));
    for_each_bit(alive, [&](Vertex v) { k.data.push_back(lists[v]); });
    return k;
}

Partial Engine::empty_partial() const
{
    return Partial{0, std::vector<std::int8_t>(static_cast<std::size_t>(order()), -1), 0};
}

std::int64_t Engine::weight_of(Mask s) const
{
    std::int64_t w = 0;
    for_each_bit(s, [&](Vertex v) { w += weight_[v]; });
    return w;
}

void Engine::merge_stats(const Engine & other)
{
    stats_.connected_calls += other.stats_.connected_calls;
    stats_.memo_hits += other.stats_.memo_hits;
    stats_.branches += other.stats_.branches;
    stats_.family_tasks += other.stats_.family_tasks;
    exhaustive_ = exhaustive_ && other.exhaustive_;
}

bool Engine::charge(std::size_t & counter)
{
    ++counter;
    ++stats_.branches;
    if (opts_.budget != 0 && counter > opts_.budget) {
        exhaustive_ = false;
        return false;
    }
    return true;
}

bool Engine::feasible(Mask alive, const Lists & lists, const Partial & p) const
{
    if (p.chosen & ~alive)
        return false;
    bool ok = true;
    for_each_bit(p.chosen, [&](Vertex v) {
        auto c = p.color[v];
        if (c < 0 || !(lists[v] & color_bit(c))) {
            ok = false;
            return;
        }
        for_each_bit(graph_.adj[v] & p.chosen, [&](Vertex w) {
            if (!pattern_.adjacent(c, p.color[w]))
                ok = false;
        });
    });
    return ok;
}

Partial Engine::best_singleton(Mask alive, const Lists & lists) const
{
    Partial best = empty_partial();
    for_each_bit(alive, [&](Vertex v) {
        if (lists[v] && weight_[v] > best.weight) {
            best = empty_partial();
            best.chosen = vbit(v);
            best.color[v] = static_cast<std::int8_t>(std::countr_zero(lists[v]));
            best.weight = weight_[v];
        }
    });
    return best;
}

std::vector<Mask> Engine::partition(Mask alive, std::span<const Vertex> dominators) const
{
    Mask used = 0;
    for (auto d : dominators)
        used |= vbit(d);
    std::vector<Mask> parts;
    parts.reserve(dominators.size());
    for (auto d : dominators) {
        Mask part = graph_.adj[d] & alive & ~used;
        parts.push_back(part);
        used |= part;
    }
    return parts;
}

void Engine::second_cleanup(std::span<const Mask> parts, Lists & lists) const
{
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for_each_bit(parts[i], [&](Vertex u) {
                    for_each_bit(graph_.adj[u] & parts[j], [&](Vertex v) {
                        if (auto shared = lists[u] & lists[v]) {
                            lists[u] &= ~shared;
                            changed = true;
                        }
                    });
                });
    }
}

Partial Engine::singleton_lists(Mask alive, const Lists & lists)
{
    std::vector<Vertex> vs;
    for_each_bit(alive, [&](Vertex v) {
        if (lists[v] == 0)
            return;
        if (popcount(lists[v]) != 1)
            throw std::logic_error("singleton-list base case called with a multi-color list");
        vs.push_back(v);
    });
    Graph conflict(static_cast<int>(vs.size()));
    std::vector<std::int64_t> w(vs.size());
    for (std::size_t a = 0; a < vs.size(); ++a) {
        w[a] = weight_[vs[a]];
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            auto ca = std::countr_zero(lists[vs[a]]);
            auto cb = std::countr_zero(lists[vs[b]]);
            if ((graph_.adj[vs[a]] & vbit(vs[b])) && !pattern_.adjacent(ca, cb))
                conflict.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    }
    auto pick = solve_mwis_scaled(conflict, w);
    Partial out = empty_partial();
    pick.for_each([&](Vertex a) {
        auto v = vs[a];
        out.chosen |= vbit(v);
        out.color[v] = static_cast<std::int8_t>(std::countr_zero(lists[v]));
        out.weight += weight_[v];
    });
    return out;
}

Partial Engine::connected(Mask alive, const Lists & lists, int dominator_limit)
{
    return connected_slice(alive, lists, dominator_limit, 0, 1, nullptr);
}

Partial Engine::connected_slice(Mask alive, const Lists & lists, int dominator_limit, std::size_t offset,
                                std::size_t stride, std::size_t * found_at)
{
    ++stats_.connected_calls;
    if (found_at)
        *found_at = std::numeric_limits<std::size_t>::max();
    Mask live = live_part(alive, lists);
    if (!live)
        return empty_partial();

    bool memoize = stride == 1;
    Key key;
    if (memoize) {
        key = make_key(live, lists, dominator_limit);
        if (auto it = connected_memo_.find(key); it != connected_memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
    }

    bool singletons = true;
    for_each_bit(live, [&](Vertex v) { singletons = singletons && popcount(lists[v]) == 1; });
    Partial result = singletons ? singleton_lists(live, lists)
                                : branch(live, lists, dominator_limit, offset, stride, found_at);
    if (memoize)
        connected_memo_.emplace(std::move(key), result);
    return result;
}

Partial Engine::subproblem(Mask alive, const Lists & lists, int limit)
{
    if (opts_.subproblems == SubproblemSolver::connected)
        return connected(alive, lists, limit);
    return full(alive, lists);
}

Partial Engine::branch(Mask alive, const Lists & lists, int limit, std::size_t offset, std::size_t stride,
                       std::size_t * found_at)
{
    Partial best = best_singleton(alive, lists);
    std::size_t d_index = 0;
    std::size_t branches = 0;
    bool stop = false;
    const int k = pattern_.size();

    for_each_small_subset(alive, limit, [&](Mask dmask, int) {
        if (stop)
            return false;
        auto idx = d_index++;
        if (idx % stride != offset)
            return true;
        auto dominators = bits_of(dmask);
        auto parts = partition(alive, dominators);
        Mask xall = 0;
        for (auto p : parts)
            xall |= p;
        if (weight_of(dmask | xall) <= best.weight)
            return true;

        // Colorings of D: each color from the vertex's list, adjacent dominators on adjacent colors.
        std::vector<std::vector<Color>> colorings;
        std::vector<Color> cur(dominators.size());
        auto color_rec = [&](auto && self, std::size_t i) -> void {
            if (i == dominators.size()) {
                colorings.push_back(cur);
                return;
            }
            for (auto opts = lists[dominators[i]]; opts; opts &= opts - 1) {
                Color c = std::countr_zero(opts);
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j)
                    if ((graph_.adj[dominators[i]] & vbit(dominators[j])) && !pattern_.adjacent(c, cur[j]))
                        ok = false;
                if (ok) {
                    cur[i] = c;
                    self(self, i + 1);
                }
            }
        };
        color_rec(color_rec, 0);
        if (colorings.empty())
            return true;

        // Guessed small independent sets only act through the neighbourhoods they reach in
        // later parts, so enumerate the distinct reachable unions per target part.
        std::vector<std::vector<Mask>> reach(parts.size());
        for (std::size_t j = 1; j < parts.size(); ++j) {
            std::vector<Mask> acc{0};
            for (std::size_t i = 0; i < j; ++i) {
                std::vector<Mask> effects{0};
                for (auto a : bits_of(parts[i])) {
                    effects.push_back(graph_.adj[a] & parts[j]);
                    for_each_bit(parts[i] & ~graph_.adj[a] & ~((vbit(a) << 1) - 1), [&](Vertex b) {
                        effects.push_back((graph_.adj[a] | graph_.adj[b]) & parts[j]);
                    });
                }
                std::sort(effects.begin(), effects.end());
                effects.erase(std::unique(effects.begin(), effects.end()), effects.end());
                std::vector<Mask> next;
                for (auto u : acc)
                    for (auto e : effects)
                        next.push_back(u | e);
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                acc = std::move(next);
            }
            reach[j] = std::move(acc);
        }

        std::unordered_set<Lists, ListsHash> states{lists};
        for (std::size_t j = 1; j < parts.size(); ++j)
            for (Color r = 0; r < k; ++r) {
                std::unordered_set<Lists, ListsHash> next;
                for (const auto & s : states)
                    for (auto u : reach[j]) {
                        Lists t = s;
                        for_each_bit(u, [&](Vertex v) { t[v] &= pattern_.neighbors(r); });
                        next.insert(std::move(t));
                    }
                states = std::move(next);
            }

        std::unordered_set<Lists, ListsHash> cleaned;
        for (auto s : states) {
            second_cleanup(parts, s);
            cleaned.insert(std::move(s));
        }
        // Fixed iteration order keeps the returned solution deterministic.
        std::vector<Lists> ordered(cleaned.begin(), cleaned.end());
        std::sort(ordered.begin(), ordered.end());

        std::int64_t d_weight = weight_of(dmask);
        for (const auto & s : ordered) {
            for (const auto & coloring : colorings) {
                if (!charge(branches)) {
                    stop = true;
                    return false;
                }
                Lists sub = s;
                for (std::size_t i = 0; i < dominators.size(); ++i)
                    for_each_bit(graph_.adj[dominators[i]] & xall,
                                 [&](Vertex v) { sub[v] &= pattern_.neighbors(coloring[i]); });

                Partial cand = empty_partial();
                cand.chosen = dmask;
                cand.weight = d_weight;
                for (std::size_t i = 0; i < dominators.size(); ++i)
                    cand.color[dominators[i]] = static_cast<std::int8_t>(coloring[i]);
                for (auto part : parts) {
                    auto piece = subproblem(part, sub, limit);
                    cand.chosen |= piece.chosen;
                    cand.weight += piece.weight;
                    for_each_bit(piece.chosen, [&](Vertex v) { cand.color[v] = piece.color[v]; });
                }
                if (cand.weight > best.weight && feasible(alive, lists, cand)) {
                    best = std::move(cand);
                    if (found_at)
                        *found_at = idx;
                }
            }
        }
        return true;
    });
    return best;
}

Mask prune_common_neighbors(const MaskGraph & g, Mask alive, std::span<const Vertex> dominators,
                            std::span<const Color> assignment, ColorSet colors)
{
    std::array<Mask, max_colors> classes{};
    for (std::size_t i = 0; i < dominators.size(); ++i)
        classes[assignment[i]] |= vbit(dominators[i]);
    Mask cur = alive;
    for (bool changed = true; changed;) {
        changed = false;
        for_each_bit(cur, [&](Vertex u) {
            bool all = true;
            for (auto rest = colors; rest && all; rest &= rest - 1)
                all = (g.adj[u] & classes[std::countr_zero(rest)] & cur) != 0;
            if (all) {
                cur &= ~vbit(u);
                changed = true;
            }
        });
    }
    return cur;
}

Mask prune_non_module_components(const MaskGraph & g, Mask alive, Mask dominators)
{
    Mask cur = alive;
    for (bool changed = true; changed;) {
        changed = false;
        Mask outside = cur & ~g.closed_nbhd(dominators & cur, cur);
        for (auto z : g.components(outside))
            if (!g.is_module(z, cur)) {
                cur &= ~z;
                changed = true;
                break;
            }
    }
    return cur;
}

CoreRegion core_region(const MaskGraph & g, Mask alive, Mask dominators, Mask extra)
{
    CoreRegion out{alive, g.closed_nbhd((dominators | extra) & alive, alive)};
    for (bool changed = true; changed;) {
        changed = false;
        for_each_bit(out.region, [&](Vertex u) {
            if (g.adj[u] & out.remaining & ~out.region) {
                out.remaining &= ~vbit(u);
                out.region &= ~vbit(u);
                changed = true;
            }
        });
    }
    return out;
}

std::vector<FamilyTask> Engine::family_tasks(Mask alive, const Lists & lists) const
{
    Mask live = live_part(alive, lists);
    ColorSet universe = 0;
    for_each_bit(live, [&](Vertex v) { universe |= lists[v]; });

    std::vector<FamilyTask> tasks;
    for (ColorSet colors = 1; colors <= universe && colors != 0; ++colors) {
        if ((colors & ~universe) || std::popcount(colors) < 2)
            continue;
        const int kp = std::popcount(colors);
        std::vector<Color> palette;
        for (auto rest = colors; rest; rest &= rest - 1)
            palette.push_back(std::countr_zero(rest));

        for_each_small_subset(live, kp + 1, [&](Mask dmask, int size) {
            if (size < kp || !graph_.connected(dmask))
                return true;
            auto dominators = bits_of(dmask);
            std::vector<std::size_t> idx(dominators.size(), 0);
            while (true) {
                ColorSet hit = 0;
                for (auto i : idx)
                    hit |= color_bit(palette[i]);
                if (hit == colors) {
                    FamilyTask t{colors, dominators, {}};
                    for (auto i : idx)
                        t.assignment.push_back(palette[i]);
                    tasks.push_back(std::move(t));
                }
                std::size_t pos = idx.size();
                while (pos > 0 && ++idx[pos - 1] == palette.size())
                    idx[--pos] = 0;
                if (pos == 0)
                    break;
            }
            return true;
        });
    }
    return tasks;
}

std::vector<FamilyEntry> Engine::run_family_task(const FamilyTask & task, Mask alive, const Lists & lists)
{
    ++stats_.family_tasks;
    Mask live = live_part(alive, lists);
    const int kp = std::popcount(task.colors);
    Lists restricted = lists;
    for (auto & l : restricted)
        l &= task.colors;

    Mask dmask = 0;
    for (auto d : task.dominators)
        dmask |= vbit(d);

    Mask cur = prune_common_neighbors(graph_, live, task.dominators, task.assignment, task.colors);
    cur = prune_non_module_components(graph_, cur, dmask);

    std::vector<FamilyEntry> out;
    std::unordered_set<Mask> seen;
    std::size_t branches = 0;
    auto visit = [&](Mask extra) {
        auto reg = core_region(graph_, cur, dmask & cur, extra);
        if (!reg.region || !seen.insert(reg.region).second)
            return true;
        if (!charge(branches))
            return false;
        auto sol = connected(reg.region, restricted, std::max(kp, 3));
        for (auto comp : graph_.components(sol.chosen))
            out.push_back(FamilyEntry{comp, task, bits_of(extra)});
        return true;
    };
    if (visit(0))
        for_each_small_subset(cur, kp + 1, [&](Mask extra, int) { return visit(extra); });
    return out;
}

std::vector<FamilyEntry> Engine::family(Mask alive, const Lists & lists)
{
    Mask live = live_part(alive, lists);
    std::vector<FamilyEntry> members;
    std::unordered_set<Mask> have;
    for_each_bit(live, [&](Vertex v) {
        have.insert(vbit(v));
        members.push_back(FamilyEntry{vbit(v), {}, {}});
    });
    for (const auto & task : family_tasks(live, lists))
        for (auto & e : run_family_task(task, live, lists))
            if (have.insert(e.set).second)
                members.push_back(std::move(e));
    return members;
}

Partial Engine::pack(Mask alive, const Lists & lists, std::span<const Mask> members)
{
    const auto m = members.size();
    Graph blob(static_cast<int>(m));
    std::vector<std::int64_t> w(m);
    std::vector<Mask> reach(m);
    for (std::size_t a = 0; a < m; ++a) {
        w[a] = weight_of(members[a]);
        reach[a] = graph_.closed_nbhd(members[a], all());
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (reach[a] & members[b])
                blob.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    auto pick = solve_mwis_scaled(blob, w);
    std::vector<Mask> packing;
    pick.for_each([&](Vertex a) { packing.push_back(members[a]); });
    return color_members(alive, lists, packing);
}

Partial Engine::color_members(Mask alive, const Lists & lists, std::span<const Mask> members) const
{
    Partial out = empty_partial();
    for (Mask s : members) {
        if (s & ~alive)
            throw std::logic_error("family member outside the sub-instance");
        auto sub = induced_subgraph(source_, to_set(s, order()));
        std::vector<ColorSet> sub_lists;
        for (auto v : sub.to_original)
            sub_lists.push_back(lists[v]);
        auto color = exists_list_hom(sub.graph, pattern_, sub_lists);
        if (!color)
            throw std::logic_error("family member admits no list homomorphism");
        for (std::size_t i = 0; i < sub.to_original.size(); ++i)
            out.color[sub.to_original[i]] = static_cast<std::int8_t>((*color)[i]);
        out.chosen |= s;
        out.weight += weight_of(s);
    }
    return out;
}

Partial Engine::full(Mask alive, const Lists & lists)
{
    Mask live = live_part(alive, lists);
    if (!live)
        return empty_partial();
    auto key = make_key(live, lists, -1);
    if (auto it = full_memo_.find(key); it != full_memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }
    auto entries = family(live, lists);
    std::vector<Mask> members;
    members.reserve(entries.size());
    for (const auto & e : entries)
        members.push_back(e.set);
    auto result = pack(live, lists, members);
    full_memo_.emplace(std::move(key), result);
    return result;
}

Solution to_solution(const Instance & inst, const Partial & p)
{
    Solution s = Solution::empty(inst.order());
    for_each_bit(p.chosen, [&](Vertex v) {
        s.chosen.insert(v);
        s.coloring[v] = p.color[v];
        s.weight += inst.weight[v];
    });
    return s;
}

}
