#include <rolecol/error.hh>
#include <rolecol/high_girth.hh>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace rolecol {

namespace {
    constexpr std::int64_t term_limit = std::int64_t{1} << 62;
    constexpr std::uint64_t size_limit = std::uint64_t{1} << 20;

    // base^exponent, or nullopt past `limit`.
    std::optional<std::uint64_t> checked_power(std::uint64_t base, std::int64_t exponent, std::uint64_t limit)
    {
        std::uint64_t result = 1;
        for (std::int64_t i = 0; i < exponent; ++i) {
            if (result > limit / base)
                return std::nullopt;
            result *= base;
        }
        return result;
    }

    void check_k(int k)
    {
        if (k < 3)
            throw InvalidInput("high-girth constructions need k >= 3");
    }

    std::int64_t length_for(const GirthParams &p)
    {
        check_k(p.k);
        if (p.length_index < 0)
            throw InvalidInput("length index must be nonnegative");
        return a_sequence(p.k, p.length_index, p.recurrence).back();
    }

    // One gadget's trees with contracted leaves. Node (depth d, value x) has
    // parent (d - 1, x / (k-1)) and t_1 = x % (k-1).
    struct GadgetLayout {
        int k = 3, depth = 0, base = 2;
        Vertex first = 0;                 // id of the T_0 root
        std::vector<std::int64_t> offset; // offset[d] within one tree
        std::int64_t tree_size = 0;       // nodes at depths 0..depth-1

        GadgetLayout(const GirthParams &params, Vertex first_id) : k(params.k), base(params.k - 1), first(first_id)
        {
            if (params.recurrence != Recurrence::doubled)
                throw InvalidInput("gemel implantation uses the doubled recurrence");
            depth = gemel_tree_depth(params);
            if (!checked_power(base, depth, size_limit))
                throw GuardError("gadget trees would exceed 2^20 leaves");
            std::int64_t width = 1;
            for (int d = 0; d < depth; ++d) {
                offset.push_back(tree_size);
                tree_size += width;
                width *= base;
            }
            offset.push_back(tree_size);
        }

        Vertex node(int side, int d, std::int64_t value) const
        {
            return first + static_cast<Vertex>(side * tree_size + offset[d] + value);
        }
        Vertex root(int side) const { return node(side, 0, 0); }
        Vertex end() const { return first + static_cast<Vertex>(2 * tree_size); }
    };

    // Label of tree node (depth d, value x); x has the last branch as its
    // least significant digit.
    DigitString node_label(std::int64_t x, int d, int base, int tag, LeafLabelling labelling)
    {
        auto s = digit_string_of(x, d, base, tag);
        if (labelling == LeafLabelling::root_first)
            std::reverse(s.digits.begin(), s.digits.end());
        return s;
    }

    std::int64_t node_value(DigitString s, int base, LeafLabelling labelling)
    {
        if (labelling == LeafLabelling::root_first)
            std::reverse(s.digits.begin(), s.digits.end());
        return static_cast<std::int64_t>(s.value(s.length(), base));
    }

    // Appends the gadget's edges and labels. u attaches to v' (T_0 root), v to u' (T_1 root).
    void add_gadget(const GadgetLayout &lay, const GirthParams &params, LeafLabelling labelling, Vertex u, Vertex v,
                    std::vector<Edge> &edges, std::vector<std::optional<DigitString>> &labels)
    {
        edges.emplace_back(u, lay.root(0));
        edges.emplace_back(lay.root(1), v);
        if (static_cast<Vertex>(labels.size()) < lay.end())
            labels.resize(lay.end());
        for (int side = 0; side < 2; ++side) {
            std::int64_t width = 1;
            for (int d = 0; d < lay.depth; ++d) {
                for (std::int64_t x = 0; x < width; ++x) {
                    labels[lay.node(side, d, x)] = node_label(x, d, lay.base, side, labelling);
                    if (d > 0)
                        edges.emplace_back(lay.node(side, d - 1, x / lay.base), lay.node(side, d, x));
                }
                width *= lay.base;
            }
        }

        const int leaf_depth = lay.depth;
        const std::int64_t leaves = *checked_power(lay.base, leaf_depth, size_limit);
        std::vector<char> hit(leaves, 0);
        std::set<Edge> matching;
        for (std::int64_t x = 0; x < leaves; ++x) {
            auto partner = matching_e(node_label(x, leaf_depth, lay.base, 0, labelling), params, true);
            const auto y = node_value(partner, lay.base, labelling);
            if (hit[y])
                throw InternalError("two-step matching is not injective");
            hit[y] = 1;
            Edge e{lay.node(0, leaf_depth - 1, x / lay.base), lay.node(1, leaf_depth - 1, y / lay.base)};
            if (!matching.insert(e).second)
                throw InternalError("leaf contraction created a parallel edge");
            edges.push_back(e);
        }
    }

    void require_regular(const Graph &g, int k, const char *what)
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != k || g.has_loop(v))
                throw InvalidInput(std::string(what) + " must be loop-free and " + std::to_string(k) + "-regular");
    }

    void assert_regular(const Graph &g, int k)
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != k)
                throw InternalError("gemel implantation broke regularity at vertex " + std::to_string(v + 1));
    }
}

std::vector<std::int64_t> a_sequence(int k, int upto, Recurrence rec)
{
    check_k(k);
    if (upto < 0)
        throw InvalidInput("index must be nonnegative");
    const std::uint64_t factor = rec == Recurrence::doubled ? 2 : 1;
    std::vector<std::int64_t> a{1};
    while (static_cast<int>(a.size()) <= upto) {
        auto p = checked_power(k - 1, a.back(), term_limit / factor);
        if (!p || static_cast<std::int64_t>(factor * *p) > term_limit - a.back())
            throw GuardError("a_" + std::to_string(a.size()) + " overflows 62 bits");
        a.push_back(a.back() + static_cast<std::int64_t>(factor * *p));
    }
    return a;
}

std::uint64_t DigitString::value(int count, int base) const
{
    std::uint64_t x = 0;
    for (int j = count; j >= 1; --j)
        x = x * base + at(j);
    return x;
}

std::string DigitString::to_string() const
{
    std::string s(1, static_cast<char>('0' + tag));
    for (int j = length(); j >= 1; --j)
        s.push_back(static_cast<char>('0' + at(j)));
    return s;
}

DigitString DigitString::parse(std::string_view text)
{
    if (text.empty() || (text[0] != '0' && text[0] != '1'))
        throw InvalidInput("digit string must start with tag 0 or 1");
    DigitString s;
    s.tag = text[0] - '0';
    for (std::size_t i = text.size() - 1; i >= 1; --i) {
        if (text[i] < '0' || text[i] > '9')
            throw InvalidInput("bad digit in '" + std::string(text) + "'");
        s.digits.push_back(text[i] - '0');
    }
    return s;
}

DigitString digit_string_of(std::uint64_t value, int length, int base, int tag)
{
    DigitString s;
    s.tag = tag;
    s.digits.resize(length);
    for (int j = 0; j < length; ++j) {
        s.digits[j] = static_cast<int>(value % base);
        value /= base;
    }
    return s;
}

DigitString matching_e(const DigitString &s, const GirthParams &params, bool two_step)
{
    const auto a = a_sequence(params.k, params.length_index, params.recurrence);
    const int base = params.k - 1;
    if (s.tag != 0)
        throw InvalidInput("matching is defined on tag-0 strings");
    if (s.length() < a.back())
        throw InvalidInput("string has " + std::to_string(s.length()) + " digits, needs at least " +
                           std::to_string(a.back()));
    for (auto t : s.digits)
        if (t < 0 || t >= base)
            throw InvalidInput("digit outside 0.." + std::to_string(base - 1));

    DigitString out = s;
    for (int i = 0; i < params.length_index; ++i) {
        const auto x = static_cast<std::int64_t>(s.value(static_cast<int>(a[i]), base));
        const std::int64_t position = two_step ? a[i] + 2 * (x + 1) - 1 : a[i] + x + 1;
        auto &digit = out.digits.at(position - 1);
        digit = (digit + 1) % base;
    }
    out.tag = 1;
    if (two_step && out.length() > 0) {
        const int top = out.digits.back();
        out.digits.pop_back();
        out.digits.insert(out.digits.begin(), top);
    }
    return out;
}

Vertex GirthGraph::vertex_of(const DigitString &s) const
{
    if (s.length() != length || (s.tag != 0 && s.tag != 1))
        throw InvalidInput("label does not belong to this graph");
    return s.tag * part_size + static_cast<Vertex>(s.value(length, digit_base));
}

GirthGraph build_girth_graph(const GirthParams &params)
{
    const auto length = length_for(params);
    const int base = params.k - 1;
    auto size = checked_power(base, length, size_limit);
    if (!size)
        throw GuardError("(k-1)^length exceeds 2^20 strings per part");
    const auto n = static_cast<Vertex>(*size);
    if (n < 3)
        throw InvalidInput("parts need at least 3 strings to form cycles");

    GirthGraph out;
    out.part_size = n;
    out.digit_base = base;
    out.length = static_cast<int>(length);
    out.labels.resize(2 * n);
    std::vector<Edge> edges;
    std::vector<char> hit(n, 0);
    for (Vertex x = 0; x < n; ++x) {
        out.labels[x] = digit_string_of(x, out.length, base, 0);
        out.labels[n + x] = digit_string_of(x, out.length, base, 1);
        edges.emplace_back(x, (x + 1) % n);
        edges.emplace_back(n + x, n + (x + 1) % n);
        auto partner = out.vertex_of(matching_e(out.labels[x], params, false));
        if (hit[partner - n])
            throw InternalError("matching is not a bijection");
        hit[partner - n] = 1;
        edges.emplace_back(x, partner);
    }
    out.graph = Graph::from_edges(2 * n, edges);
    for (Vertex v = 0; v < 2 * n; ++v)
        if (out.graph.degree(v) != 3)
            throw InternalError("girth graph is not 3-regular");
    return out;
}

int gemel_tree_depth(const GirthParams &params)
{
    const auto length = length_for(params);
    if (length + 1 > 64)
        throw GuardError("gadget depth too large");
    return static_cast<int>(length) + 1;
}

GemelResult gemel_implant_edge(const Graph &g, Edge edge, const GirthParams &params, LeafLabelling labelling)
{
    require_regular(g, params.k, "host graph");
    auto [u, v] = edge;
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v || !g.adjacent(u, v))
        throw InvalidInput("edge is not in the graph");

    GadgetLayout lay(params, g.vertex_count());
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)})
            edges.push_back(e);
    GemelResult out;
    out.labels.resize(g.vertex_count());
    add_gadget(lay, params, labelling, u, v, edges, out.labels);
    out.graph = Graph::from_edges(lay.end(), edges);
    assert_regular(out.graph, params.k);
    return out;
}

GemelResult gemel_implant_all(const Graph &g, const GirthParams &params, LeafLabelling labelling)
{
    require_regular(g, params.k, "host graph");
    const auto host_edges = g.edges();
    Vertex next = g.vertex_count();
    std::vector<Edge> edges;
    GemelResult out;
    out.labels.resize(next);
    for (auto [u, v] : host_edges) {
        GadgetLayout lay(params, next);
        if (static_cast<long long>(lay.end()) > (1LL << 26))
            throw GuardError("implanted graph would exceed 2^26 vertices");
        add_gadget(lay, params, labelling, u, v, edges, out.labels);
        next = lay.end();
    }
    out.graph = Graph::from_edges(next, edges);
    assert_regular(out.graph, params.k);
    return out;
}

int gadget_colour_f(const DigitString &w, GadgetSide side, int k)
{
    if (k < 2)
        throw InvalidInput("k must be at least 2");
    const int d = w.length();
    const bool even = d % 2 == 0;
    if (side == GadgetSide::t0 && !even)
        throw InvalidInput("f_0 is defined on strings with an even number of digits");
    if (side == GadgetSide::t1 && even)
        throw InvalidInput("f_1 is defined on strings with an odd number of digits");
    int sum = 0;
    for (int j = 1; j <= d; j += 2)
        sum += w.at(j) + 1;
    return sum % k;
}

IsolatedGadget isolated_gadget(const GirthParams &params, LeafLabelling labelling)
{
    IsolatedGadget out;
    out.u = 0;
    out.v = 1;
    GadgetLayout lay(params, 2);
    std::vector<Edge> edges;
    out.labels.resize(2);
    add_gadget(lay, params, labelling, out.u, out.v, edges, out.labels);
    out.v_prime = lay.root(0);
    out.u_prime = lay.root(1);
    out.depth = lay.depth;

    Vertex next = lay.end();
    for (Vertex host : {out.u, out.v})
        for (int s = 0; s < params.k - 1; ++s)
            edges.emplace_back(host, next++);
    out.graph = Graph::from_edges(next, edges);
    out.labels.resize(next);
    out.exempt.assign(next, 0);
    for (Vertex s = lay.end(); s < next; ++s)
        out.exempt[s] = 1;

    for (int side = 0; side < 2; ++side) {
        auto &levels = side == 0 ? out.t0_levels : out.t1_levels;
        std::int64_t width = 1;
        for (int d = 0; d < lay.depth; ++d) {
            levels.emplace_back();
            for (std::int64_t x = 0; x < width; ++x)
                levels.back().push_back(lay.node(side, d, x));
            width *= lay.base;
        }
    }
    for (Vertex x = 0; x < next; ++x)
        if (!out.exempt[x] && out.graph.degree(x) != params.k)
            throw InternalError("isolated gadget is not regular at vertex " + std::to_string(x + 1));
    return out;
}

FColouringReport check_f_colouring(const GirthParams &params)
{
    const int k = params.k, base = k - 1;
    const int depth = gemel_tree_depth(params);
    FColouringReport report;
    auto fail = [&](bool &flag, const std::string &what) {
        if (flag && report.first_failure.empty())
            report.first_failure = what;
        flag = false;
    };

    // T_0 at even depths (leaves included), T_1 at odd depths up to the leaf-parents.
    for (int side = 0; side < 2; ++side) {
        const auto which = side == 0 ? GadgetSide::t0 : GadgetSide::t1;
        for (int d = side == 0 ? 2 : 3; d <= (side == 0 ? depth : depth - 1); d += 2) {
            const std::uint64_t width = *checked_power(base, d, size_limit);
            for (std::uint64_t x = 0; x < width; ++x) {
                auto w = digit_string_of(x, d, base, side);
                const int colour = gadget_colour_f(w, which, k);
                auto grandparent = digit_string_of(x / base / base, d - 2, base, side);
                ++report.checked_vertices;
                if (colour == gadget_colour_f(grandparent, which, k))
                    fail(report.grandparents_differ, w.to_string() + " has its grandparent's colour");
                if (x % base == 0) {
                    std::set<int> seen;
                    for (int t = 0; t < base; ++t)
                        seen.insert(gadget_colour_f(digit_string_of(x + t, d, base, side), which, k));
                    if (static_cast<int>(seen.size()) != base)
                        fail(report.siblings_differ, "siblings of " + w.to_string() + " share a colour");
                }
            }
        }
    }

    const std::uint64_t leaves = *checked_power(base, depth, size_limit);
    for (std::uint64_t x = 0; x < leaves; ++x) {
        auto leaf = digit_string_of(x, depth, base, 0);
        auto partner = matching_e(leaf, params, true);
        auto parent = digit_string_of(partner.value(depth, base) / base, depth - 1, base, 1);
        if (gadget_colour_f(leaf, GadgetSide::t0, k) != gadget_colour_f(parent, GadgetSide::t1, k))
            fail(report.leaf_parents_match,
                 "T_1 leaf-parent " + parent.to_string() + " differs from T_0 leaf " + leaf.to_string());
    }
    return report;
}

void write_labels(std::ostream &out, const std::vector<std::optional<DigitString>> &labels)
{
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v])
            out << "l " << v + 1 << ' ' << labels[v]->to_string() << '\n';
}

} // namespace rolecol
