#pragma once

#include <rolecol/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace rolecol {

/// Colours are 0-based internally; text formats print colour + 1.
struct RoleColouring {
    std::vector<int> colours;

    int colour_count() const;  // max colour + 1, or 0 when empty
    friend bool operator==(const RoleColouring &, const RoleColouring &) = default;
};

/// Colours are the vertices of `graph`. Loops are meaningful.
struct RoleGraph {
    Graph graph;

    int size() const { return graph.vertex_count(); }
    friend bool operator==(const RoleGraph &, const RoleGraph &) = default;
};

struct Violation {
    enum class Kind {
        colour_out_of_range,  // colour is not a vertex of the role graph
        colour_unused,        // some role-graph vertex is never used
        image_mismatch,       // r(N(v)) != N_R(r(v))
        missing_coupon        // coupon check: N(v) misses a colour
    };
    Kind kind = Kind::image_mismatch;
    Vertex vertex = -1;        // offending vertex (or the unused colour)
    std::vector<int> image;    // colours seen around `vertex`
    std::vector<int> expected; // colours it should see

    /// 1-based vertex and colour ids, like the text formats.
    std::string describe() const;
};

struct VerifyResult {
    bool ok = true;
    std::optional<Violation> violation;  // first one found, in vertex order

    explicit operator bool() const { return ok; }
};

/// Checks surjectivity onto V(role) and r(N(v)) = N_role(r(v)) for every v.
/// Throws InvalidInput if r is not total on V(g) or has a negative colour.
VerifyResult verify_role_colouring(const Graph &g, const RoleGraph &role, const RoleColouring &r);

/// Every open neighbourhood contains all colours 0..k-1.
VerifyResult verify_coupon_colouring(const Graph &g, int k, const RoleColouring &r);

/// Quotient on colours 0..max colour: c ~ d iff some c-vertex has a d-neighbour.
RoleGraph role_graph_of(const Graph &g, const RoleColouring &r);

/// Definition-level check: same-coloured vertices see identical colour sets.
/// Independent of role_graph_of; used to cross-check it.
bool same_colour_same_image(const Graph &g, const RoleColouring &r);

enum class RoleTarget { cycle, path, path_star, path_star_star, complete_looped };

/// C_k (with C_2 read as K_2 and C_1 as a looped vertex), P_k, P_k*, P_k**,
/// or K_k with a loop at every vertex (the coupon-colouring target).
RoleGraph role_target(RoleTarget target, int k);

} // namespace rolecol
