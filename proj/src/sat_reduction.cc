#include <rolecol/error.hh>
#include <rolecol/sat_reduction.hh>

#include <algorithm>
#include <map>
#include <sstream>

namespace rolecol {

namespace {
    void check_k(int k)
    {
        if (k < 2)
            throw InvalidInput("gadget construction needs k >= 2");
    }

    // 0-based colours of the length-2k period 1,1,2,...,k,k,...,2.
    std::vector<int> period_pattern(int k)
    {
        std::vector<int> pat{0, 0};
        for (int c = 1; c < k; ++c)
            pat.push_back(c);
        for (int c = k - 1; c >= 1; --c)
            pat.push_back(c);
        return pat;
    }

    int mod(long long a, int m)
    {
        return static_cast<int>(((a % m) + m) % m);
    }

    class Builder {
    public:
        Vertex fresh() { return next_++; }

        std::vector<Vertex> fresh_run(int count)
        {
            std::vector<Vertex> out(count);
            for (auto &v : out)
                v = fresh();
            return out;
        }

        void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

        void close_cycle(const std::vector<Vertex> &cycle)
        {
            for (std::size_t i = 0; i < cycle.size(); ++i)
                edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }

        Graph graph() const { return Graph::from_edges(next_, edges_); }

    private:
        Vertex next_ = 0;
        std::vector<Edge> edges_;
    };

    Reduction build(const CnfFormula &f, int k, bool prime)
    {
        check_k(k);
        validate_cnf(f);
        const int n = f.variable_count;
        const auto s = f.occurrences();
        Builder b;
        GadgetMap map;

        for (int i = 0; i < n; ++i)
            map.variable_cycle.push_back(b.fresh_run(2 * k * (s[i] + 1)));
        for (int i = 0; i < n; ++i)
            map.base_cycle.push_back(b.fresh_run(2 * k));
        for (int i = 0; i < n; ++i)
            map.w_path.push_back(b.fresh_run(2 * k - 1));
        map.clause_vertex = b.fresh_run(static_cast<int>(f.clauses.size()));
        if (prime) {
            map.cycle_c = b.fresh_run(2 * k - 1);
            map.cycle_c_prime = b.fresh_run(2 * k);
            map.cycle_c_double_prime = b.fresh_run(2 * k);
        }

        for (const auto &cycle : map.variable_cycle)
            b.close_cycle(cycle);
        std::vector<int> seen(n, 0);
        for (std::size_t q = 0; q < f.clauses.size(); ++q)
            for (auto x : f.clauses[q]) {
                const int p = ++seen[x - 1];
                b.edge(map.x(x, 2 * p * k + 2), map.clause_vertex[q]);
            }

        std::vector<Vertex> base;
        for (const auto &block : map.base_cycle)
            base.insert(base.end(), block.begin(), block.end());
        b.close_cycle(base);
        for (int i = 1; i <= n; ++i) {
            const auto &w = map.w_path[i - 1];
            b.edge(map.v(i, 1), w.front());
            for (std::size_t j = 0; j + 1 < w.size(); ++j)
                b.edge(w[j], w[j + 1]);
            b.edge(w.back(), map.x(i, 1));
        }

        if (prime) {
            b.close_cycle(map.cycle_c);
            b.close_cycle(map.cycle_c_prime);
            b.close_cycle(map.cycle_c_double_prime);
            b.edge(map.cycle_c.front(), map.v(n, 2));
            b.edge(map.cycle_c_prime.front(), map.v(n, 3));
            b.edge(map.cycle_c_double_prime.front(), map.v(n, 4));
        }

        Reduction red{b.graph(), std::move(map), prime ? ReductionVariant::prime : ReductionVariant::base};
        if (red.map.size() != static_cast<std::size_t>(red.graph.vertex_count()))
            throw InternalError("gadget map does not cover the graph");
        return red;
    }

    int k_of(const GadgetMap &map)
    {
        if (map.base_cycle.empty())
            throw InvalidInput("gadget map has no base cycle");
        return static_cast<int>(map.base_cycle.front().size()) / 2;
    }

    bool is_path_star_star_shape(const Graph &r)
    {
        const int k = r.vertex_count();
        if (k == 0 || !is_connected(r))
            return false;
        int loops = 0, plain = 0;
        for (Vertex c = 0; c < k; ++c) {
            const int d = r.degree(c) - (r.has_loop(c) ? 1 : 0);
            if (d > 2)
                return false;
            if (r.has_loop(c)) {
                ++loops;
                if (k > 1 && d != 1)
                    return false;
            }
            plain += d;
        }
        return plain / 2 == k - 1 && loops == std::min(k, 2);
    }

    bool is_cycle_shape(const Graph &r)
    {
        const int k = r.vertex_count();
        if (k == 1)
            return r.has_loop(0);
        if (k == 0 || r.has_loops() || !is_connected(r))
            return false;
        for (Vertex c = 0; c < k; ++c)
            if (r.degree(c) != (k == 2 ? 1 : 2))
                return false;
        return true;
    }
}

std::size_t GadgetMap::size() const
{
    std::size_t total = clause_vertex.size() + cycle_c.size() + cycle_c_prime.size() + cycle_c_double_prime.size();
    for (const auto *table : {&variable_cycle, &base_cycle, &w_path})
        for (const auto &row : *table)
            total += row.size();
    for (const auto &s : subdivisions)
        total += s.vertices.size();
    return total;
}

long long subdivision_period(int k)
{
    check_k(k);
    return 2LL * k * (k - 1) * (2 * k - 1);
}

Reduction build_g_phi(const CnfFormula &f, int k)
{
    return build(f, k, false);
}

Reduction build_g_phi_prime(const CnfFormula &f, int k)
{
    return build(f, k, true);
}

Reduction build_g_phi_j(const CnfFormula &f, int k, int j)
{
    if (j < 1)
        throw InvalidInput("subdivision parameter j must be positive");
    Reduction red = build(f, k, true);
    const long long per_edge = j * subdivision_period(k);
    const auto edges = red.graph.edges();
    if (per_edge * static_cast<long long>(edges.size()) > (1LL << 26))
        throw GuardError("subdivided instance would exceed 2^26 vertices");

    std::vector<Edge> out_edges;
    Vertex next = red.graph.vertex_count();
    for (auto [u, v] : edges) {
        GadgetMap::Subdivision sub{u, v, {}};
        Vertex prev = u;
        for (long long t = 0; t < per_edge; ++t) {
            sub.vertices.push_back(next);
            out_edges.emplace_back(prev, next);
            prev = next++;
        }
        out_edges.emplace_back(prev, v);
        red.map.subdivisions.push_back(std::move(sub));
    }
    red.graph = Graph::from_edges(next, out_edges);
    red.variant = ReductionVariant::subdivided;
    return red;
}

RoleColouring assignment_to_colouring(const CnfFormula &f, int k, const NaeAssignment &a, const Reduction &red)
{
    check_k(k);
    if (red.variant == ReductionVariant::subdivided)
        throw InvalidInput("constructive colouring is defined for the base and prime variants only");
    if (k_of(red.map) != k)
        throw InvalidInput("reduction was built for a different k");
    if (!is_nae_satisfying(f, a))
        throw InvalidInput("assignment is not NAE-satisfying");

    const auto pat = period_pattern(k);
    const auto &map = red.map;
    RoleColouring r;
    r.colours.assign(red.graph.vertex_count(), -1);

    for (int i = 1; i <= f.variable_count; ++i) {
        const auto &cycle = map.variable_cycle[i - 1];
        for (int j = 1; j <= static_cast<int>(cycle.size()); ++j)
            r.colours[cycle[j - 1]] = a.value(i) ? pat[mod(j - 1, 2 * k)] : pat[mod(1 - j, 2 * k)];
        for (int j = 1; j <= 2 * k; ++j)
            r.colours[map.v(i, j)] = pat[j - 1];
        for (int j = 1; j <= 2 * k - 1; ++j)
            r.colours[map.w(i, j)] = j < k ? j : j <= 2 * k - 2 ? 2 * k - 1 - j : 0;
    }
    for (auto c : map.clause_vertex)
        r.colours[c] = 0;

    if (red.variant == ReductionVariant::prime) {
        const auto &c = map.cycle_c;
        r.colours[c[0]] = 0;
        for (int i = 2; i <= k; ++i) {
            r.colours[c[i - 1]] = i - 1;
            r.colours[c[2 * k - i]] = i - 1;
        }
        for (int j = 1; j <= 2 * k; ++j) {
            r.colours[map.cycle_c_prime[j - 1]] = pat[j - 1];
            r.colours[map.cycle_c_double_prime[j - 1]] = pat[mod(j + 2 * k - 2, 2 * k)];
        }
    }
    if (std::find(r.colours.begin(), r.colours.end(), -1) != r.colours.end())
        throw InternalError("constructive colouring left a vertex uncoloured");
    return r;
}

NaeAssignment colouring_to_assignment(const CnfFormula &f, int k, const Reduction &red, const RoleColouring &r)
{
    check_k(k);
    if (red.variant == ReductionVariant::subdivided)
        throw InvalidInput("assignment extraction is defined for the base and prime variants only");
    const auto role = role_graph_of(red.graph, r);
    if (role.size() != k || !verify_role_colouring(red.graph, role, r))
        throw InvalidInput("not a valid " + std::to_string(k) + "-role colouring of the instance");
    if (!is_path_star_star_shape(role.graph) && !is_cycle_shape(role.graph))
        throw InvalidInput("role graph is neither P_k** nor C_k");

    const auto &map = red.map;
    const int c = r.colours[map.x(1, 1)];
    for (int i = 1; i <= f.variable_count; ++i)
        if (r.colours[map.x(i, 1)] != c || r.colours[map.v(i, 1)] != c)
            throw InternalError("anchor vertices x_i^1, v_i^1 are not monochromatic");

    const auto nc = role.graph.neighbours(c);
    const int true_colour = role.graph.has_loop(c) ? c : nc.front();
    const auto s = f.occurrences();
    NaeAssignment a;
    a.values.resize(f.variable_count);
    for (int i = 1; i <= f.variable_count; ++i) {
        const int colour = r.colours[map.x(i, 2)];
        for (int p = 0; p <= s[i - 1]; ++p)
            if (r.colours[map.x(i, 2 * p * k + 2)] != colour)
                throw InternalError("attachment class of x_" + std::to_string(i) + " is not monochromatic");
        a.values[i - 1] = colour == true_colour;
    }
    if (!is_nae_satisfying(f, a))
        throw InternalError("extracted assignment is not NAE-satisfying");
    return a;
}

void write_gadget_map(std::ostream &out, const GadgetMap &map)
{
    auto table2 = [&](const char *name, const std::vector<std::vector<Vertex>> &t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t[i].size(); ++j)
                out << name << ' ' << i + 1 << ' ' << j + 1 << ' ' << t[i][j] + 1 << '\n';
    };
    auto table1 = [&](const char *name, const std::vector<Vertex> &t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out << name << ' ' << i + 1 << ' ' << t[i] + 1 << '\n';
    };
    table2("x", map.variable_cycle);
    table2("v", map.base_cycle);
    table2("w", map.w_path);
    table1("C", map.clause_vertex);
    table1("u", map.cycle_c);
    table1("u'", map.cycle_c_prime);
    table1("u''", map.cycle_c_double_prime);
    for (const auto &s : map.subdivisions)
        for (std::size_t t = 0; t < s.vertices.size(); ++t)
            out << "s " << s.u + 1 << ' ' << s.v + 1 << ' ' << t + 1 << ' ' << s.vertices[t] + 1 << '\n';
}

GadgetMap read_gadget_map(std::istream &in)
{
    GadgetMap map;
    int line_no = 0;
    auto fail = [&](const std::string &what) {
        throw InvalidInput("gadget map, line " + std::to_string(line_no) + ": " + what);
    };
    // Entries must arrive in the order the writer emits them.
    auto place = [&](std::vector<Vertex> &row, int index, Vertex id) {
        if (index != static_cast<int>(row.size()) + 1)
            fail("indices out of order");
        row.push_back(id);
    };
    auto place2 = [&](std::vector<std::vector<Vertex>> &t, int i, int j, Vertex id) {
        if (j == 1) {
            if (i != static_cast<int>(t.size()) + 1)
                fail("indices out of order");
            t.emplace_back();
        }
        else if (i != static_cast<int>(t.size()))
            fail("indices out of order");
        place(t.back(), j, id);
    };

    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream ss(line);
        std::string name;
        if (!(ss >> name) || name == "c")
            continue;
        std::vector<long long> nums;
        for (long long x; ss >> x;)
            nums.push_back(x);
        if (!ss.eof())
            fail("bad token");
        for (auto x : nums)
            if (x < 1)
                fail("ids and indices are 1-based");
        auto id = [&] { return static_cast<Vertex>(nums.back() - 1); };
        auto expect = [&](std::size_t count) {
            if (nums.size() != count)
                fail("wrong number of fields for table '" + name + "'");
        };
        if (name == "x" || name == "v" || name == "w") {
            expect(3);
            auto &t = name == "x" ? map.variable_cycle : name == "v" ? map.base_cycle : map.w_path;
            place2(t, static_cast<int>(nums[0]), static_cast<int>(nums[1]), id());
        }
        else if (name == "C" || name == "u" || name == "u'" || name == "u''") {
            expect(2);
            auto &t = name == "C"    ? map.clause_vertex
                      : name == "u"  ? map.cycle_c
                      : name == "u'" ? map.cycle_c_prime
                                     : map.cycle_c_double_prime;
            place(t, static_cast<int>(nums[0]), id());
        }
        else if (name == "s") {
            expect(4);
            const Vertex u = static_cast<Vertex>(nums[0] - 1), v = static_cast<Vertex>(nums[1] - 1);
            if (nums[2] == 1)
                map.subdivisions.push_back({u, v, {}});
            else if (map.subdivisions.empty() || map.subdivisions.back().u != u || map.subdivisions.back().v != v)
                fail("subdivision entries out of order");
            place(map.subdivisions.back().vertices, static_cast<int>(nums[2]), id());
        }
        else
            fail("unknown table '" + name + "'");
    }
    return map;
}

} // namespace rolecol
