#include <rolecol/error.hh>
#include <rolecol/induced.hh>

#include <algorithm>

namespace rolecol {

namespace {
    class InducedSearch {
    public:
        InducedSearch(const Graph &g, const Graph &pattern) :
            g_(g), p_(pattern), assigned_(pattern.vertex_count(), -1), used_(g.vertex_count(), 0)
        {
            build_order();
        }

        std::optional<std::vector<Vertex>> run()
        {
            if (p_.vertex_count() > g_.vertex_count())
                return std::nullopt;
            if (extend(0))
                return assigned_;
            return std::nullopt;
        }

    private:
        // Each pattern vertex after the first of its component has an earlier
        // neighbour (its anchor); candidates then come from the anchor's image.
        void build_order()
        {
            const int np = p_.vertex_count();
            std::vector<char> placed(np, 0);
            std::vector<int> placed_nbrs(np, 0);
            for (int step = 0; step < np; ++step) {
                int best = -1;
                for (int q = 0; q < np; ++q) {
                    if (placed[q])
                        continue;
                    if (best < 0 || placed_nbrs[q] > placed_nbrs[best] ||
                        (placed_nbrs[q] == placed_nbrs[best] && p_.degree(q) > p_.degree(best)))
                        best = q;
                }
                placed[best] = 1;
                int anchor = -1;
                for (auto w : p_.neighbours(best)) {
                    if (placed[w] && w != best && anchor < 0)
                        anchor = w;
                    ++placed_nbrs[w];
                }
                order_.push_back(best);
                anchor_.push_back(anchor);
            }
        }

        bool consistent(int position, Vertex candidate) const
        {
            const int q = order_[position];
            if (used_[candidate] || g_.has_loop(candidate) || g_.degree(candidate) < p_.degree(q))
                return false;
            for (int i = 0; i < position; ++i) {
                const int other = order_[i];
                if (p_.adjacent(q, other) != g_.adjacent(candidate, assigned_[other]))
                    return false;
            }
            return true;
        }

        bool try_candidate(int position, Vertex candidate)
        {
            if (!consistent(position, candidate))
                return false;
            assigned_[order_[position]] = candidate;
            used_[candidate] = 1;
            if (extend(position + 1))
                return true;
            used_[candidate] = 0;
            assigned_[order_[position]] = -1;
            return false;
        }

        bool extend(int position)
        {
            if (position == static_cast<int>(order_.size()))
                return true;
            const int anchor = anchor_[position];
            if (anchor >= 0) {
                for (auto c : g_.neighbours(assigned_[anchor]))
                    if (try_candidate(position, c))
                        return true;
            }
            else {
                for (Vertex c = 0; c < g_.vertex_count(); ++c)
                    if (try_candidate(position, c))
                        return true;
            }
            return false;
        }

        const Graph &g_;
        const Graph &p_;
        std::vector<int> order_, anchor_;
        std::vector<Vertex> assigned_;
        std::vector<char> used_;
    };
}

std::optional<std::vector<Vertex>> find_induced(const Graph &g, const Graph &pattern)
{
    if (pattern.has_loops())
        throw InvalidInput("induced-subgraph patterns must be loop-free");
    return InducedSearch(g, pattern).run();
}

bool contains_induced(const Graph &g, const Graph &pattern)
{
    return find_induced(g, pattern).has_value();
}

bool is_free(const Graph &g, std::span<const Graph> patterns)
{
    for (const auto &p : patterns)
        if (contains_induced(g, p))
            return false;
    return true;
}

} // namespace rolecol
