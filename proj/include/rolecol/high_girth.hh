#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_colouring.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rolecol {

enum class Recurrence {
    base,    // a_{n+1} = a_n + (k-1)^{a_n}
    doubled  // a_{n+1} = a_n + 2 (k-1)^{a_n}
};

struct GirthParams {
    int k = 3;
    int length_index = 1;  // which a_m to use; a_0 = 1
    Recurrence recurrence = Recurrence::base;
};

/// a_0 .. a_upto. Throws GuardError once a term no longer fits in 62 bits.
std::vector<std::int64_t> a_sequence(int k, int upto, Recurrence rec);

/// Base-(k-1) digits plus a part tag. digits[0] is position 1, the rightmost
/// and least significant digit; the tag is written leftmost.
struct DigitString {
    int tag = 0;
    std::vector<int> digits;

    int length() const { return static_cast<int>(digits.size()); }
    /// t_j for 1-based position j.
    int at(int position) const { return digits.at(position - 1); }
    /// Number expressed by positions 1..count, in base `base`.
    std::uint64_t value(int count, int base) const;
    /// Tag, then digits from the highest position down to position 1.
    std::string to_string() const;
    static DigitString parse(std::string_view text);

    friend bool operator==(const DigitString &, const DigitString &) = default;
    friend auto operator<=>(const DigitString &, const DigitString &) = default;
};

/// Digit string of length `length` expressing `value` (least significant at position 1).
DigitString digit_string_of(std::uint64_t value, int length, int base, int tag);

/// The matching V_0 -> V_1. For each level i < length_index, x_i is read
/// from positions 1..a_i of the input string. One-step: add 1 (mod k-1) at
/// position a_i + x_i + 1. Two-step: add 1 at position a_i + 2(x_i + 1) - 1,
/// then move the highest digit to position 1. The tag becomes 1 either way.
/// Requires tag 0 and at least a_{length_index} digits.
DigitString matching_e(const DigitString &s, const GirthParams &params, bool two_step);

struct GirthGraph {
    Graph graph;
    std::vector<DigitString> labels;  // labels[v]
    int part_size = 0;                // (k-1)^length; V_0 ids first, then V_1
    int digit_base = 2;               // k - 1
    int length = 0;

    Vertex vertex_of(const DigitString &s) const;
};

/// Two cycles on the strings of each part (consecutive numbers, cyclically)
/// plus the one-step matching. Digit length a_{length_index}.
/// Guard: (k-1)^length <= 2^20; the part must have at least 3 strings.
GirthGraph build_girth_graph(const GirthParams &params);

/// How gadget tree vertices are named by digit strings. deepest_first puts
/// the last branch at position 1; the f_0 / f_1 colouring is stated for this
/// naming. With it the gadget admits no k-coupon colouring at k = 3, 4 (the
/// f colouring fixes only alternate levels and the remaining levels clash).
/// root_first puts the first branch from the root at position 1; that gadget
/// is colourable and forces both end pairs.
enum class LeafLabelling { deepest_first, root_first };

struct GemelResult {
    Graph graph;
    /// Digit-string label of every gadget tree vertex; nullopt for original vertices.
    std::vector<std::optional<DigitString>> labels;
};

/// Tree depth used by the gadgets: a_{length_index} + 1, so that leaves carry
/// an even number of digits and T_1 leaf-parents an odd number.
int gemel_tree_depth(const GirthParams &params);

/// Replaces edge {u, v} by u - v' and u' - v, where v' and u' root (k-1)-ary
/// trees T_0 and T_1. Leaves are joined by the two-step matching and then
/// contracted into their parents. Requires a k-regular loop-free graph and
/// the doubled recurrence. Original vertex ids are kept; gadget vertices are
/// appended (T_0 breadth-first, then T_1).
GemelResult gemel_implant_edge(const Graph &g, Edge edge, const GirthParams &params,
                               LeafLabelling labelling = LeafLabelling::deepest_first);

/// Implants every edge, in lexicographic edge order.
GemelResult gemel_implant_all(const Graph &g, const GirthParams &params,
                              LeafLabelling labelling = LeafLabelling::deepest_first);

enum class GadgetSide { t0, t1 };

/// f_0 (even digit count): sum of (t_j + 1) over odd positions j < d, mod k.
/// f_1 (odd digit count): sum of (t_j + 1) over odd positions j <= d, mod k.
/// Throws InvalidInput on the wrong parity.
int gadget_colour_f(const DigitString &w, GadgetSide side, int k);

/// A single gadget with host stand-ins: u and v each get k-1 stub neighbours
/// that are exempt from the coupon condition.
struct IsolatedGadget {
    Graph graph;
    Vertex u = 0, v = 0, u_prime = 0, v_prime = 0;
    std::vector<char> exempt;
    std::vector<std::optional<DigitString>> labels;
    /// Tree vertices after contraction, by depth from their root.
    std::vector<std::vector<Vertex>> t0_levels, t1_levels;
    int depth = 0;  // leaf depth before contraction
};

IsolatedGadget isolated_gadget(const GirthParams &params, LeafLabelling labelling = LeafLabelling::deepest_first);

/// Outcome of the three mechanical checks on the f_0 / f_1 colouring of one
/// gadget with deepest_first labels: grandparents differ, siblings differ,
/// and every T_1 leaf-parent matches the f_0 colours of the T_0 leaves
/// matched to its children.
struct FColouringReport {
    bool grandparents_differ = true;
    bool siblings_differ = true;
    bool leaf_parents_match = true;
    long long checked_vertices = 0;
    std::string first_failure;

    bool ok() const { return grandparents_differ && siblings_differ && leaf_parents_match; }
};

FColouringReport check_f_colouring(const GirthParams &params);

/// Writes "l <id> <string>" for every labelled vertex (ids 1-based).
void write_labels(std::ostream &out, const std::vector<std::optional<DigitString>> &labels);

} // namespace rolecol
