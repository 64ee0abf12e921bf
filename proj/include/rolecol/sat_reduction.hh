#pragma once

#include <rolecol/cnf.hh>
#include <rolecol/graph.hh>
#include <rolecol/role_colouring.hh>

#include <iosfwd>
#include <vector>

namespace rolecol {

/// Vertex ids of the named gadget parts. Tables are indexed from 0; the
/// accessors take the 1-based indices used in the construction (x_i^j etc.).
struct GadgetMap {
    std::vector<std::vector<Vertex>> variable_cycle;  // x_i^j, j = 1..2k(s_i + 1)
    std::vector<std::vector<Vertex>> base_cycle;      // v_i^j, j = 1..2k
    std::vector<std::vector<Vertex>> w_path;          // w_i^j, j = 1..2k - 1
    std::vector<Vertex> clause_vertex;                // C_q
    std::vector<Vertex> cycle_c;                      // u_m, m = 1..2k - 1 (prime variants)
    std::vector<Vertex> cycle_c_prime;                // u'_m, m = 1..2k
    std::vector<Vertex> cycle_c_double_prime;         // u''_m, m = 1..2k

    /// A subdivided edge u-v: `vertices` run from u towards v.
    struct Subdivision {
        Vertex u = 0, v = 0;
        std::vector<Vertex> vertices;
        friend bool operator==(const Subdivision &, const Subdivision &) = default;
    };
    std::vector<Subdivision> subdivisions;

    Vertex x(int i, int j) const { return variable_cycle.at(i - 1).at(j - 1); }
    Vertex v(int i, int j) const { return base_cycle.at(i - 1).at(j - 1); }
    Vertex w(int i, int j) const { return w_path.at(i - 1).at(j - 1); }
    Vertex clause(int q) const { return clause_vertex.at(q - 1); }

    /// Number of vertices named by the tables (each exactly once when the map is total).
    std::size_t size() const;

    friend bool operator==(const GadgetMap &, const GadgetMap &) = default;
};

enum class ReductionVariant { base, prime, subdivided };

struct Reduction {
    Graph graph;
    GadgetMap map;
    ReductionVariant variant = ReductionVariant::base;
};

/// Subdivisions per edge in the subdivided variant, for one unit of j.
long long subdivision_period(int k);  // 2k(k-1)(2k-1)

/// Variable cycles, clause vertices, base cycle and connecting paths; the
/// P_k**-role-colourable instances are exactly those from NAE-satisfiable
/// formulas. Requires k >= 2 and a valid formula.
Reduction build_g_phi(const CnfFormula &f, int k);

/// build_g_phi plus cycles C (2k - 1), C' (2k), C'' (2k) hooked to v_n^2,
/// v_n^3, v_n^4.
Reduction build_g_phi_prime(const CnfFormula &f, int k);

/// build_g_phi_prime with every edge subdivided j * subdivision_period(k)
/// times. Original ids are kept; subdivision vertices follow, edge by edge in
/// lexicographic edge order. Requires j >= 1.
Reduction build_g_phi_j(const CnfFormula &f, int k, int j);

/// The constructive P_k** colouring from an NAE-satisfying assignment.
/// Only the base and prime variants are supported.
RoleColouring assignment_to_colouring(const CnfFormula &f, int k, const NaeAssignment &a, const Reduction &red);

/// Reads an assignment back from a role colouring of a base or prime
/// instance whose role graph is P_k** or C_k. The chosen direction of each
/// variable cycle decides its value. Throws InvalidInput for an invalid
/// colouring and InternalError if the cycle classes are not monochromatic or
/// the result is not NAE-satisfying.
NaeAssignment colouring_to_assignment(const CnfFormula &f, int k, const Reduction &red, const RoleColouring &r);

/// Sidecar lines "<table> <indices...> <vertex-id>", all 1-based, tables in
/// the order x, v, w, C, u, u', u'', s. Subdivision lines are "s <u> <v> <t> <id>".
void write_gadget_map(std::ostream &out, const GadgetMap &map);
GadgetMap read_gadget_map(std::istream &in);

} // namespace rolecol
