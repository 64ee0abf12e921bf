#include <rolecol/error.hh>
#include <rolecol/families.hh>
#include <rolecol/role_colouring.hh>

#include <algorithm>
#include <sstream>

namespace rolecol {

namespace {
    void check_total(const Graph &g, const RoleColouring &r)
    {
        if (static_cast<int>(r.colours.size()) != g.vertex_count())
            throw InvalidInput("colouring assigns " + std::to_string(r.colours.size()) + " colours to a graph with " +
                               std::to_string(g.vertex_count()) + " vertices");
        for (auto c : r.colours)
            if (c < 0)
                throw InvalidInput("negative colour in colouring");
    }

    std::vector<int> image_of(const Graph &g, const RoleColouring &r, Vertex v)
    {
        std::vector<int> image;
        for (auto w : g.neighbours(v))
            image.push_back(r.colours[w]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        return image;
    }

    void print_set(std::ostream &out, const std::vector<int> &s)
    {
        out << '{';
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i] + 1;
        out << '}';
    }

    VerifyResult failed(Violation v)
    {
        return VerifyResult{false, std::move(v)};
    }
}

int RoleColouring::colour_count() const
{
    return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
}

std::string Violation::describe() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::colour_out_of_range:
        out << "vertex " << vertex + 1 << " has a colour outside the role graph";
        break;
    case Kind::colour_unused:
        out << "colour " << vertex + 1 << " is not used";
        break;
    case Kind::image_mismatch:
        out << "vertex " << vertex + 1 << " sees ";
        print_set(out, image);
        out << " but its colour needs ";
        print_set(out, expected);
        break;
    case Kind::missing_coupon:
        out << "vertex " << vertex + 1 << " sees ";
        print_set(out, image);
        out << ", not every colour of ";
        print_set(out, expected);
        break;
    }
    return out.str();
}

VerifyResult verify_role_colouring(const Graph &g, const RoleGraph &role, const RoleColouring &r)
{
    check_total(g, r);
    const int k = role.size();
    std::vector<char> used(k, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (r.colours[v] >= k)
            return failed({Violation::Kind::colour_out_of_range, v, {r.colours[v]}, {}});
        used[r.colours[v]] = 1;
    }
    for (int c = 0; c < k; ++c)
        if (!used[c])
            return failed({Violation::Kind::colour_unused, c, {}, {}});

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto image = image_of(g, r, v);
        auto nr = role.graph.neighbours(r.colours[v]);
        std::vector<int> expected(nr.begin(), nr.end());
        if (image != expected)
            return failed({Violation::Kind::image_mismatch, v, std::move(image), std::move(expected)});
    }
    return {};
}

VerifyResult verify_coupon_colouring(const Graph &g, int k, const RoleColouring &r)
{
    check_total(g, r);
    if (k < 1)
        throw InvalidInput("coupon colouring needs k >= 1");
    std::vector<int> all(k);
    for (int c = 0; c < k; ++c)
        all[c] = c;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (r.colours[v] >= k)
            return failed({Violation::Kind::colour_out_of_range, v, {r.colours[v]}, {}});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto image = image_of(g, r, v);
        if (image != all)
            return failed({Violation::Kind::missing_coupon, v, std::move(image), all});
    }
    return {};
}

RoleGraph role_graph_of(const Graph &g, const RoleColouring &r)
{
    check_total(g, r);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(r.colours[u], r.colours[v]);
    return RoleGraph{Graph::from_edges(r.colour_count(), edges)};
}

bool same_colour_same_image(const Graph &g, const RoleColouring &r)
{
    check_total(g, r);
    std::vector<std::optional<std::vector<int>>> seen(r.colour_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto image = image_of(g, r, v);
        auto &slot = seen[r.colours[v]];
        if (!slot)
            slot = std::move(image);
        else if (*slot != image)
            return false;
    }
    return true;
}

RoleGraph role_target(RoleTarget target, int k)
{
    if (k < 1)
        throw InvalidInput("role target needs k >= 1");
    switch (target) {
    case RoleTarget::cycle:
        if (k == 1)
            return {path_star_graph(1)};
        if (k == 2)
            return {path_graph(2)};
        return {cycle_graph(k)};
    case RoleTarget::path:
        return {path_graph(k)};
    case RoleTarget::path_star:
        return {path_star_graph(k)};
    case RoleTarget::path_star_star:
        return {path_star_star_graph(k)};
    case RoleTarget::complete_looped: {
        auto edges = complete_graph(k).edges();
        for (int c = 0; c < k; ++c)
            edges.emplace_back(c, c);
        return {Graph::from_edges(k, edges)};
    }
    }
    throw InvalidInput("unknown role target");
}

} // namespace rolecol
