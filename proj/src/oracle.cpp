#include <p5hom/oracle.hpp>

#include <stdexcept>
#include <string>

namespace p5hom {

namespace {
    class Backtrack {
    public:
        explicit Backtrack(const Instance & inst) :
            inst_(inst), n_(inst.order()), color_(static_cast<std::size_t>(n_), -1),
            best_(Solution::empty(inst.order())), suffix_(static_cast<std::size_t>(n_) + 1, Rational(0))
        {
            for (int v = n_ - 1; v >= 0; --v)
                suffix_[v] = suffix_[v + 1] + (inst.lists[v] ? inst.weight[v] : Rational(0));
        }

        Solution run()
        {
            visit(0, Rational(0));
            return best_;
        }

    private:
        void visit(int v, const Rational & weight)
        {
            if (weight + suffix_[v] <= best_.weight)
                return;
            if (v == n_) {
                best_ = Solution::empty(n_);
                for (int u = 0; u < n_; ++u)
                    if (color_[u] != -1) {
                        best_.chosen.insert(u);
                        best_.coloring[u] = color_[u];
                    }
                best_.weight = weight;
                return;
            }
            for (Color c = 0; c < inst_.pattern.size(); ++c) {
                if (!(inst_.lists[v] & color_bit(c)))
                    continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (color_[u] != -1 && inst_.graph.has_edge(u, v) && !inst_.pattern.adjacent(c, color_[u]))
                        ok = false;
                if (!ok)
                    continue;
                color_[v] = c;
                visit(v + 1, weight + inst_.weight[v]);
                color_[v] = -1;
            }
            visit(v + 1, weight);
        }

        const Instance & inst_;
        int n_;
        std::vector<Color> color_;
        Solution best_;
        std::vector<Rational> suffix_;
    };
}

Solution oracle_solve(const Instance & inst, const OracleOptions & opts)
{
    inst.validate();
    if (!opts.force && inst.order() > opts.max_vertices)
        throw std::length_error("oracle refuses " + std::to_string(inst.order()) + " vertices (cap " +
                                std::to_string(opts.max_vertices) + "); force to override");
    return Backtrack(inst).run();
}

}
