#include <rolecol/error.hh>
#include <rolecol/oracle.hh>

#include <algorithm>

namespace rolecol {

namespace {
    void guard(int n, int k)
    {
        bool ok;
        if (k <= 1)
            ok = true;
        else if (k == 2)
            ok = n <= 16;
        else if (k == 3)
            ok = n <= 12;
        else {
            long double count = 1;
            for (int i = 0; i < n; ++i)
                count *= k;
            ok = count <= 531441.0L;
        }
        if (!ok)
            throw GuardError("oracle enumeration of " + std::to_string(k) + "^" + std::to_string(n) +
                             " colourings exceeds the size guard");
    }

    bool all_used(const std::vector<int> &colours, int k)
    {
        std::vector<char> used(k, 0);
        for (auto c : colours)
            used[c] = 1;
        return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
    }

    // Direct reading of the coupon condition: every vertex has a neighbour of
    // every colour.
    bool is_coupon(const Graph &g, const std::vector<int> &colours, int k)
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (int c = 0; c < k; ++c) {
                bool seen = false;
                for (auto w : g.neighbours(v))
                    seen = seen || colours[w] == c;
                if (!seen)
                    return false;
            }
        return true;
    }
}

OracleResult brute_force_oracle(const Graph &g, const std::variant<RoleGraph, int> &target, OracleMode mode,
                                bool enumerate_all)
{
    const int n = g.vertex_count();
    const RoleGraph *role = std::get_if<RoleGraph>(&target);
    const int k = role ? role->size() : std::get<int>(target);
    if (k < 1)
        throw InvalidInput("oracle needs at least one colour");
    if (role && mode == OracleMode::ccol)
        throw InvalidInput("coupon mode takes a colour count, not a role graph");
    guard(n, k);

    const bool connected = is_connected(g);
    OracleResult out;
    RoleColouring r;
    r.colours.assign(n, 0);
    while (true) {
        bool accept = false;
        if (all_used(r.colours, k)) {
            if (mode == OracleMode::ccol)
                accept = is_coupon(g, r.colours, k);
            else if (role)
                accept = static_cast<bool>(verify_role_colouring(g, *role, r));
            else if (same_colour_same_image(g, r)) {
                auto quotient = role_graph_of(g, r);
                accept = !connected || is_connected(quotient.graph);
                if (accept)
                    out.role_graphs.push_back(std::move(quotient));
            }
        }
        if (accept) {
            out.solutions.push_back(r);
            if (!enumerate_all)
                return out;
        }

        int pos = n - 1;
        while (pos >= 0 && r.colours[pos] == k - 1)
            r.colours[pos--] = 0;
        if (pos < 0)
            break;
        ++r.colours[pos];
    }
    return out;
}

} // namespace rolecol
