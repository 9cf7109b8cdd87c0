#include <p5hom/mwis.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace p5hom {

std::vector<std::int64_t> scale_to_integers(std::span<const Rational> weight)
{
    mpz_class scale = 1;
    for (const auto & w : weight) {
        if (w < 0)
            throw std::invalid_argument("negative weight");
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den().get_mpz_t());
    }
    static const mpz_class limit = mpz_class(1) << 62;
    std::vector<std::int64_t> out;
    out.reserve(weight.size());
    mpz_class total = 0;
    for (const auto & w : weight) {
        mpz_class scaled = w.get_num() * (scale / w.get_den());
        total += scaled;
        if (total >= limit)
            throw std::overflow_error("weights too large after scaling to a common denominator");
        out.push_back(scaled.get_si());
    }
    return out;
}

namespace {
    class BranchAndBound {
    public:
        BranchAndBound(const Graph & g, std::span<const std::int64_t> w) : g_(g), w_(w), best_set_(g.order()) {}

        VertexSet run()
        {
            VertexSet taken(g_.order());
            search(g_.vertices(), taken, 0);
            return best_set_;
        }

    private:
        std::int64_t clique_cover_bound(const VertexSet & cand) const
        {
            std::vector<Vertex> order = cand.to_vector();
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w_[a] > w_[b]; });
            // Each clique is charged the weight of its first (heaviest) member.
            std::vector<VertexSet> cliques;
            std::int64_t bound = 0;
            for (auto v : order) {
                bool placed = false;
                for (auto & c : cliques)
                    if (c.is_subset_of(g_.neighbors(v))) {
                        c.insert(v);
                        placed = true;
                        break;
                    }
                if (!placed) {
                    cliques.emplace_back(g_.order());
                    cliques.back().insert(v);
                    bound += w_[v];
                }
            }
            return bound;
        }

        void search(VertexSet cand, VertexSet & taken, std::int64_t weight)
        {
            std::vector<Vertex> forced;
            for (bool changed = true; changed;) {
                changed = false;
                for (auto v = cand.first(); v != -1; v = cand.next(v + 1)) {
                    auto nb = g_.neighbors(v) & cand;
                    auto deg = nb.size();
                    if (deg == 0 || (deg == 1 && w_[v] >= w_[nb.first()])) {
                        forced.push_back(v);
                        weight += w_[v];
                        cand -= nb;
                        cand.erase(v);
                        changed = true;
                    }
                }
            }
            for (auto v : forced)
                taken.insert(v);

            if (cand.empty()) {
                if (!have_best_ || weight > best_) {
                    best_ = weight;
                    best_set_ = taken;
                    have_best_ = true;
                }
            }
            else {
                std::int64_t rest = 0;
                cand.for_each([&](Vertex v) { rest += w_[v]; });
                bool prune = have_best_ && weight + rest <= best_;
                if (!prune && have_best_)
                    prune = weight + clique_cover_bound(cand) <= best_;
                if (!prune) {
                    Vertex pick = -1;
                    int pick_deg = -1;
                    cand.for_each([&](Vertex v) {
                        auto d = (g_.neighbors(v) & cand).size();
                        if (d > pick_deg) {
                            pick_deg = d;
                            pick = v;
                        }
                    });
                    taken.insert(pick);
                    auto without_closed = cand - g_.neighbors(pick);
                    without_closed.erase(pick);
                    search(std::move(without_closed), taken, weight + w_[pick]);
                    taken.erase(pick);
                    cand.erase(pick);
                    search(std::move(cand), taken, weight);
                }
            }
            for (auto v : forced)
                taken.erase(v);
        }

        const Graph & g_;
        std::span<const std::int64_t> w_;
        VertexSet best_set_;
        std::int64_t best_ = 0;
        bool have_best_ = false;
    };
}

VertexSet solve_mwis_scaled(const Graph & g, std::span<const std::int64_t> weight)
{
    if (weight.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("solve_mwis: weights must be total");
    return BranchAndBound(g, weight).run();
}

MwisResult solve_mwis(const WeightedGraph & wg)
{
    auto scaled = scale_to_integers(wg.weight);
    auto set = solve_mwis_scaled(wg.graph, scaled);
    Rational total = 0;
    set.for_each([&](Vertex v) { total += wg.weight[v]; });
    return {std::move(set), total};
}

}
