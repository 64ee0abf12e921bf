#include <rolecol/error.hh>
#include <rolecol/solver.hh>

#include <algorithm>
#include <bit>
#include <numeric>

namespace rolecol {

namespace {
    constexpr int max_role_size = 64;

    ColourSet bit(int c) { return ColourSet{1} << c; }

    int lowest(ColourSet s) { return std::countr_zero(s); }

    template <typename F>
    void for_each_colour(ColourSet s, F &&f)
    {
        while (s) {
            f(lowest(s));
            s &= s - 1;
        }
    }

    ColourSet full_set(int k) { return k == 64 ? ~ColourSet{0} : bit(k) - 1; }

    // Backtracking search for an automorphism of r sending `from` to `to`.
    class AutomorphismProbe {
    public:
        explicit AutomorphismProbe(const Graph &r) : r_(r), image_(r.vertex_count(), -1), used_(r.vertex_count(), 0) {}

        bool maps(Vertex from, Vertex to)
        {
            std::fill(image_.begin(), image_.end(), -1);
            std::fill(used_.begin(), used_.end(), 0);
            if (!compatible(from, to))
                return false;
            image_[from] = to;
            used_[to] = 1;
            return extend(0);
        }

    private:
        bool compatible(Vertex x, Vertex y) const
        {
            if (r_.degree(x) != r_.degree(y) || r_.has_loop(x) != r_.has_loop(y))
                return false;
            for (Vertex z = 0; z < r_.vertex_count(); ++z)
                if (image_[z] >= 0 && r_.adjacent(x, z) != r_.adjacent(y, image_[z]))
                    return false;
            return true;
        }

        bool extend(Vertex x)
        {
            while (x < r_.vertex_count() && image_[x] >= 0)
                ++x;
            if (x == r_.vertex_count())
                return true;
            for (Vertex y = 0; y < r_.vertex_count(); ++y) {
                if (used_[y] || !compatible(x, y))
                    continue;
                image_[x] = y;
                used_[y] = 1;
                if (extend(x + 1))
                    return true;
                image_[x] = -1;
                used_[y] = 0;
            }
            return false;
        }

        const Graph &r_;
        std::vector<Vertex> image_;
        std::vector<char> used_;
    };

    // Colours c such that no automorphism maps c to a smaller colour.
    ColourSet orbit_representatives(const Graph &r)
    {
        AutomorphismProbe probe(r);
        ColourSet reps = 0;
        for (int c = 0; c < r.vertex_count(); ++c) {
            bool smaller = false;
            for (int d = 0; d < c && !smaller; ++d)
                smaller = (reps & bit(d)) && probe.maps(c, d);
            if (!smaller)
                reps |= bit(c);
        }
        return reps;
    }

    class Engine {
    public:
        Engine(const SearchProblem &p, const SolveConfig &cfg) :
            g_(p.graph), cfg_(cfg), n_(p.graph.vertex_count()), k_(p.role.size()),
            require_all_(p.require_all_colours)
        {
            const Graph &r = p.role.graph;
            all_ = full_set(k_);
            nr_.assign(k_, 0);
            for (int c = 0; c < k_; ++c)
                for (auto d : r.neighbours(c))
                    nr_[c] |= bit(d);

            exempt_ = p.exempt.empty() ? std::vector<char>(n_, 0) : p.exempt;
            initial_ = p.domains.empty() ? std::vector<ColourSet>(n_, all_) : p.domains;
            for (Vertex v = 0; v < n_; ++v) {
                initial_[v] &= all_;
                if (exempt_[v])
                    continue;
                for (int c = 0; c < k_; ++c)
                    if (std::popcount(nr_[c]) > g_.degree(v))
                        initial_[v] &= ~bit(c);
            }
            if (!cfg_.enumerate_all && p.domains.empty() && p.exempt.empty() && n_ > 0)
                initial_[0] &= orbit_representatives(r);

            queued_.assign(n_, 0);
            int max_degree = 0;
            for (Vertex v = 0; v < n_; ++v)
                max_degree = std::max(max_degree, g_.degree(v));
            allowed_.resize(max_degree);
            slot_colour_.resize(max_degree);
            support_.resize(max_degree);
            visited_.resize(max_degree);
        }

        SolveResult run()
        {
            result_.nodes = 1;
            bool possible = !(require_all_ && k_ > n_);
            if (possible) {
                auto dom = initial_;
                for (Vertex v = 0; v < n_; ++v)
                    enqueue(v);
                if (propagate(dom))
                    dfs(dom);
            }
            if (exhausted_)
                result_.status = SolveStatus::budget_exhausted;
            else
                result_.status = result_.solutions.empty() ? SolveStatus::not_found : SolveStatus::found;
            return std::move(result_);
        }

    private:
        void enqueue(Vertex v)
        {
            if (!exempt_[v] && !queued_[v]) {
                queued_[v] = 1;
                queue_.push_back(v);
            }
        }

        void enqueue_around(Vertex x)
        {
            enqueue(x);
            for (auto w : g_.neighbours(x))
                enqueue(w);
        }

        void clear_queue()
        {
            for (auto v : queue_)
                queued_[v] = 0;
            queue_.clear();
        }

        // Kuhn's augmenting paths: can colour c be given to a free slot?
        bool augment(int c, int m)
        {
            for (int i = 0; i < m; ++i) {
                if (visited_[i] || !(allowed_[i] & bit(c)))
                    continue;
                visited_[i] = 1;
                if (slot_colour_[i] < 0 || augment(slot_colour_[i], m)) {
                    slot_colour_[i] = c;
                    return true;
                }
            }
            return false;
        }

        // Whether the constraint at w admits r(w) = a, with neighbour x (if
        // x >= 0) restricted to x_set. On success slot_colour_ holds a
        // matching of N_R(a) into N(w).
        bool feasible(const std::vector<ColourSet> &dom, Vertex w, int a, Vertex x, ColourSet x_set)
        {
            const ColourSet need = nr_[a];
            auto nbrs = g_.neighbours(w);
            const int m = static_cast<int>(nbrs.size());
            if (std::popcount(need) > m)
                return false;
            ColourSet covered = 0;
            for (int i = 0; i < m; ++i) {
                const Vertex y = nbrs[i];
                ColourSet d = y == w ? bit(a) : y == x ? x_set : dom[y];
                d &= need;
                if (!d)
                    return false;
                allowed_[i] = d;
                covered |= d;
            }
            if (covered != need)
                return false;
            std::fill_n(slot_colour_.begin(), m, -1);
            bool ok = true;
            for_each_colour(need, [&](int c) {
                if (!ok)
                    return;
                std::fill_n(visited_.begin(), m, 0);
                ok = augment(c, m);
            });
            return ok;
        }

        // Generalised arc consistency for the constraint at w. Returns false on a wipe-out.
        bool revise(std::vector<ColourSet> &dom, Vertex w)
        {
            auto nbrs = g_.neighbours(w);
            const int m = static_cast<int>(nbrs.size());
            std::fill_n(support_.begin(), m, 0);
            ColourSet w_support = 0;
            for_each_colour(dom[w], [&](int a) {
                if (!feasible(dom, w, a, -1, 0))
                    return;
                w_support |= bit(a);
                // The matching found already supports one value per slot;
                // unmatched slots may take anything allowed.
                for (int i = 0; i < m; ++i)
                    support_[i] |= slot_colour_[i] >= 0 ? bit(slot_colour_[i]) : allowed_[i];
                for (int i = 0; i < m; ++i) {
                    const Vertex y = nbrs[i];
                    if (y == w)
                        continue;
                    for_each_colour(dom[y] & nr_[a] & ~support_[i], [&](int c) {
                        if (feasible(dom, w, a, y, bit(c)))
                            support_[i] |= bit(c);
                    });
                }
            });

            if (!w_support)
                return false;
            if (w_support != dom[w]) {
                dom[w] = w_support;
                enqueue_around(w);
            }
            for (int i = 0; i < m; ++i) {
                const Vertex y = nbrs[i];
                if (y == w)
                    continue;
                const ColourSet narrowed = dom[y] & support_[i];
                if (!narrowed)
                    return false;
                if (narrowed != dom[y]) {
                    dom[y] = narrowed;
                    enqueue_around(y);
                }
            }
            return true;
        }

        bool propagate(std::vector<ColourSet> &dom)
        {
            while (!queue_.empty()) {
                const Vertex w = queue_.back();
                queue_.pop_back();
                queued_[w] = 0;
                if (!revise(dom, w)) {
                    clear_queue();
                    return false;
                }
            }
            if (require_all_) {
                ColourSet seen = 0;
                for (auto d : dom)
                    seen |= d;
                if (seen != all_)
                    return false;
            }
            for (auto d : dom)
                if (!d)
                    return false;
            return true;
        }

        bool out_of_budget()
        {
            if (cfg_.node_budget && result_.nodes >= *cfg_.node_budget)
                return true;
            if (cfg_.deadline && (result_.nodes & 255) == 0 && std::chrono::steady_clock::now() > *cfg_.deadline)
                return true;
            return false;
        }

        void record(const std::vector<ColourSet> &dom)
        {
            RoleColouring r;
            r.colours.resize(n_);
            ColourSet used = 0;
            for (Vertex v = 0; v < n_; ++v) {
                r.colours[v] = lowest(dom[v]);
                used |= dom[v];
            }
            if (require_all_ && used != all_)
                return;
            for (Vertex v = 0; v < n_; ++v) {
                if (!(initial_[v] & bit(r.colours[v])))
                    throw InternalError("search produced a colour outside a vertex's domain");
                if (exempt_[v])
                    continue;
                ColourSet image = 0;
                for (auto w : g_.neighbours(v))
                    image |= bit(r.colours[w]);
                if (image != nr_[r.colours[v]])
                    throw InternalError("search produced a colouring that violates the image condition");
            }
            result_.solutions.push_back(std::move(r));
        }

        // Returns true when the search should stop.
        bool dfs(const std::vector<ColourSet> &dom)
        {
            Vertex branch = -1;
            int best = 0;
            for (Vertex v = 0; v < n_; ++v) {
                const int size = std::popcount(dom[v]);
                if (size <= 1)
                    continue;
                if (branch < 0 || size < best) {
                    branch = v;
                    best = size;
                    if (cfg_.variable_order == VariableOrder::input_order || size == 2)
                        break;
                }
            }
            if (branch < 0) {
                record(dom);
                return !cfg_.enumerate_all && !result_.solutions.empty();
            }

            bool stop = false;
            for_each_colour(dom[branch], [&](int c) {
                if (stop)
                    return;
                if (out_of_budget()) {
                    exhausted_ = true;
                    stop = true;
                    return;
                }
                ++result_.nodes;
                auto child = dom;
                child[branch] = bit(c);
                enqueue_around(branch);
                if (propagate(child) && dfs(child))
                    stop = true;
            });
            return stop;
        }

        const Graph &g_;
        const SolveConfig &cfg_;
        int n_, k_;
        bool require_all_;
        ColourSet all_ = 0;
        std::vector<ColourSet> nr_;
        std::vector<char> exempt_;
        std::vector<ColourSet> initial_;

        std::vector<Vertex> queue_;
        std::vector<char> queued_;
        std::vector<ColourSet> allowed_, support_;
        std::vector<int> slot_colour_;
        std::vector<char> visited_;

        SolveResult result_;
        bool exhausted_ = false;
    };

    void check_graph(const Graph &g)
    {
        if (g.vertex_count() == 0)
            throw InvalidInput("graph has no vertices");
    }

    void check_config(const SolveConfig &cfg)
    {
        if (cfg.node_budget && *cfg.node_budget <= 0)
            throw InvalidInput("node budget must be positive");
    }

    // Pair (i, j), i <= j, of a k-vertex graph as a bit index.
    int pair_index(int i, int j, int k)
    {
        if (i > j)
            std::swap(i, j);
        return i * k - i * (i - 1) / 2 + (j - i);
    }

    Graph graph_from_code(unsigned code, int k)
    {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                if (code & (1u << pair_index(i, j, k)))
                    edges.emplace_back(i, j);
        return Graph::from_edges(k, edges);
    }

    int max_degree_of(const Graph &g)
    {
        int d = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d = std::max(d, g.degree(v));
        return d;
    }

    int min_degree_of(const Graph &g)
    {
        int d = g.vertex_count() ? g.degree(0) : 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d = std::min(d, g.degree(v));
        return d;
    }
}

SolveResult solve_search(const SearchProblem &problem, const SolveConfig &cfg)
{
    check_config(cfg);
    const int n = problem.graph.vertex_count();
    const int k = problem.role.size();
    if (k < 1)
        throw InvalidInput("role graph has no vertices");
    if (k > max_role_size)
        throw GuardError("role graphs are limited to " + std::to_string(max_role_size) + " vertices");
    if (!problem.domains.empty() && static_cast<int>(problem.domains.size()) != n)
        throw InvalidInput("domain list does not match the vertex count");
    if (!problem.exempt.empty() && static_cast<int>(problem.exempt.size()) != n)
        throw InvalidInput("exempt list does not match the vertex count");
    return Engine(problem, cfg).run();
}

SolveResult solve_r_rcol(const Graph &g, const RoleGraph &role, const SolveConfig &cfg)
{
    check_graph(g);
    auto result = solve_search(SearchProblem{g, role, {}, {}, true}, cfg);
    for (const auto &r : result.solutions)
        if (!verify_role_colouring(g, role, r))
            throw InternalError("solver returned a colouring the verifier rejects");
    return result;
}

SolveResult solve_k_ccol(const Graph &g, int k, const SolveConfig &cfg)
{
    check_graph(g);
    check_config(cfg);
    if (k < 1)
        throw InvalidInput("coupon colouring needs k >= 1");
    if (k > max_role_size)
        throw GuardError("coupon colouring is limited to " + std::to_string(max_role_size) + " colours");
    if (min_degree_of(g) < k)
        return SolveResult{SolveStatus::not_found, {}, 0};
    auto result = solve_search(SearchProblem{g, role_target(RoleTarget::complete_looped, k), {}, {}, true}, cfg);
    for (const auto &r : result.solutions)
        if (!verify_coupon_colouring(g, k, r))
            throw InternalError("solver returned a coupon colouring the verifier rejects");
    return result;
}

KRcolResult solve_k_rcol(const Graph &g, int k, const SolveConfig &cfg)
{
    check_graph(g);
    check_config(cfg);
    if (k < 1)
        throw InvalidInput("k-role colouring needs k >= 1");
    if (k > 5)
        throw GuardError("k-role colouring enumerates role graphs only for k <= 5");
    KRcolResult out;
    if (k > g.vertex_count())
        return out;

    const int max_deg = max_degree_of(g), min_deg = min_degree_of(g);
    for (const auto &role : role_graphs_up_to_isomorphism(k, is_connected(g))) {
        if (max_degree_of(role.graph) > max_deg || min_degree_of(role.graph) > min_deg)
            continue;
        SolveConfig local = cfg;
        if (cfg.node_budget) {
            const long long left = *cfg.node_budget - out.nodes;
            if (left <= 0) {
                out.status = SolveStatus::budget_exhausted;
                return out;
            }
            local.node_budget = left;
        }
        auto res = solve_r_rcol(g, role, local);
        out.nodes += res.nodes;
        for (auto &r : res.solutions)
            out.solutions.emplace_back(role, std::move(r));
        if (res.status == SolveStatus::budget_exhausted) {
            out.status = SolveStatus::budget_exhausted;
            return out;
        }
        if (!cfg.enumerate_all && !out.solutions.empty())
            break;
    }
    out.status = out.solutions.empty() ? SolveStatus::not_found : SolveStatus::found;
    return out;
}

std::vector<RoleGraph> role_graphs_up_to_isomorphism(int k, bool connected_only)
{
    if (k < 1)
        throw InvalidInput("role graphs need k >= 1");
    if (k > 5)
        throw GuardError("role-graph enumeration is limited to k <= 5");
    const int bits = k * (k + 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            pairs.emplace_back(i, j);

    std::vector<RoleGraph> out;
    for (unsigned code = 0; code < (1u << bits); ++code) {
        bool minimal = true;
        for (const auto &p : perms) {
            unsigned image = 0;
            for (int b = 0; b < bits; ++b)
                if (code & (1u << b))
                    image |= 1u << pair_index(p[pairs[b].first], p[pairs[b].second], k);
            if (image < code) {
                minimal = false;
                break;
            }
        }
        if (!minimal)
            continue;
        Graph g = graph_from_code(code, k);
        if (connected_only && !is_connected(g))
            continue;
        out.push_back(RoleGraph{std::move(g)});
    }
    return out;
}

std::vector<std::vector<Vertex>> automorphisms(const Graph &g)
{
    const int n = g.vertex_count();
    if (n > 8)
        throw GuardError("automorphism listing is limited to 8 vertices");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j)
                ok = g.adjacent(i, j) == g.adjacent(perm[i], perm[j]);
        if (ok)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace rolecol
