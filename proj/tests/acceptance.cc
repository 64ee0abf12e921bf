// End-to-end checks, one PASS/FAIL line each. Every comparison is exact;
// nothing here has a numeric tolerance.
//
// Usage: acceptance [report.json]   (default: acceptance_2k2_report.json)

#include <rolecol/error.hh>
#include <rolecol/families.hh>
#include <rolecol/high_girth.hh>
#include <rolecol/induced.hh>
#include <rolecol/oracle.hh>
#include <rolecol/poly_special.hh>
#include <rolecol/sat_reduction.hh>
#include <rolecol/solver.hh>

#include "support.hh"

#include <json.hpp>

#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace rolecol;

namespace {
    struct Outcome {
        bool pass = true;
        std::string detail;
    };

    std::string report_path = "acceptance_2k2_report.json";

    std::string status_name(SolveStatus s)
    {
        return s == SolveStatus::found ? "found" : s == SolveStatus::not_found ? "not_found" : "budget_exhausted";
    }

    std::string edge_list(const Graph &g)
    {
        std::string s;
        for (auto [u, v] : g.edges())
            s += (s.empty() ? "" : " ") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
        return s;
    }

    const std::pair<RoleTarget, const char *> fixed_targets[] = {
        {RoleTarget::cycle, "C"}, {RoleTarget::path, "P"}, {RoleTarget::path_star, "P*"},
        {RoleTarget::path_star_star, "P**"}};

    // (H, p) pairs of the period and subdivision statements.
    std::vector<std::pair<RoleTarget, int>> period_pairs(int k)
    {
        return {{RoleTarget::cycle, k},
                {RoleTarget::path, 2 * k - 2},
                {RoleTarget::path_star, 2 * k - 1},
                {RoleTarget::path_star_star, 2 * k}};
    }

    Outcome oracle_equivalence()
    {
        std::vector<Graph> graphs;
        for (int n = 1; n <= 5; ++n)
            for (auto &g : testsupport::all_labelled_graphs(n))
                graphs.push_back(std::move(g));
        const std::size_t exhaustive = graphs.size();
        std::mt19937_64 rng(20240601);
        for (int i = 0; i < 500; ++i) {
            const int n = 6 + i % 2;
            const double p = 0.25 + 0.05 * (i % 8);
            graphs.push_back(testsupport::random_graph(n, p, rng));
        }

        long long comparisons = 0, mismatches = 0;
        std::string first;
        auto compare = [&](const Graph &g, const std::string &what, SolveStatus got, bool want) {
            ++comparisons;
            const bool ok = got == (want ? SolveStatus::found : SolveStatus::not_found);
            if (!ok && mismatches++ == 0)
                first = what + " on [" + edge_list(g) + "] n=" + std::to_string(g.vertex_count()) + ": solver " +
                        status_name(got) + ", oracle " + (want ? "some" : "none");
        };
        for (const auto &g : graphs)
            for (int k : {2, 3}) {
                const std::string ks = " k=" + std::to_string(k);
                compare(g, "k-rcol" + ks, solve_k_rcol(g, k).status,
                        brute_force_oracle(g, k, OracleMode::rcol).exists());
                compare(g, "k-ccol" + ks, solve_k_ccol(g, k).status,
                        brute_force_oracle(g, k, OracleMode::ccol).exists());
                for (auto [t, name] : fixed_targets) {
                    const auto role = role_target(t, k);
                    compare(g, std::string("rcol onto ") + name + ks, solve_r_rcol(g, role).status,
                            brute_force_oracle(g, role, OracleMode::rcol).exists());
                }
            }
        Outcome o;
        o.pass = mismatches == 0;
        o.detail = std::to_string(exhaustive) + " exhaustive + 500 random graphs, " + std::to_string(comparisons) +
                   " comparisons, " + std::to_string(mismatches) + " mismatches";
        if (!first.empty())
            o.detail += "; first: " + first;
        return o;
    }

    Outcome antipodal_equality()
    {
        long long solutions = 0, violations = 0;
        int cases = 0;
        for (int k : {2, 3})
            for (auto [t, p] : period_pairs(k)) {
                const auto all = brute_force_oracle(cycle_graph(2 * p), role_target(t, k), OracleMode::rcol, true);
                ++cases;
                for (const auto &r : all.solutions) {
                    ++solutions;
                    for (int v = 0; v < p; ++v)
                        if (r.colours[v] != r.colours[v + p]) {
                            ++violations;
                            break;
                        }
                }
            }
        return {violations == 0 && solutions > 0, std::to_string(cases) + " (H,p) cases, " +
                                                       std::to_string(solutions) + " colourings, " +
                                                       std::to_string(violations) + " without antipodal equality"};
    }

    Outcome reduction_iff()
    {
        // Formulas with at most two clauses are all NAE-satisfiable, so the
        // three-clause formulas over three variables are added to exercise
        // the negative direction. They are reported separately.
        struct Tally {
            int formulas = 0, satisfiable = 0, disagreements = 0;
            std::string first;
        };
        auto run = [](const std::vector<CnfFormula> &set, Tally &t) {
            for (const auto &f : set) {
                ++t.formulas;
                const bool nae = nae_brute(f).has_value();
                t.satisfiable += nae;
                const auto base = solve_r_rcol(build_g_phi(f, 2).graph, role_target(RoleTarget::path_star_star, 2));
                const auto prime = solve_k_rcol(build_g_phi_prime(f, 2).graph, 2);
                const auto want = nae ? SolveStatus::found : SolveStatus::not_found;
                if ((base.status != want || prime.status != want) && t.disagreements++ == 0) {
                    std::ostringstream ss;
                    write_cnf(ss, f);
                    t.first = "nae=" + std::string(nae ? "yes" : "no") + " G:" + status_name(base.status) +
                              " G':" + status_name(prime.status) + " for " + ss.str();
                }
            }
        };
        Tally stated, extra;
        for (int n = 1; n <= 3; ++n)
            run(testsupport::small_monotone_formulas(n, 2), stated);
        std::vector<CnfFormula> three;
        for (auto &f : testsupport::small_monotone_formulas(3, 3))
            if (f.clauses.size() == 3)
                three.push_back(std::move(f));
        run(three, extra);

        auto describe = [](const Tally &t) {
            return std::to_string(t.formulas) + " formulas (" + std::to_string(t.satisfiable) +
                   " NAE-satisfiable), " + std::to_string(t.disagreements) + " disagreements" +
                   (t.first.empty() ? "" : "; first: " + t.first);
        };
        return {stated.disagreements == 0 && extra.disagreements == 0,
                "up to two clauses: " + describe(stated) + " | three clauses: " + describe(extra)};
    }

    Outcome constructive_k3()
    {
        CnfFormula f;
        f.variable_count = 3;
        f.clauses = {{1, 2}, {2, 3}};
        const NaeAssignment a{{false, true, false}};
        const auto role = role_target(RoleTarget::path_star_star, 3);
        Outcome o;
        for (auto [red, name] : {std::pair{build_g_phi(f, 3), "G"}, std::pair{build_g_phi_prime(f, 3), "G'"}}) {
            const auto r = assignment_to_colouring(f, 3, a, red);
            const auto v = verify_role_colouring(red.graph, role, r);
            o.pass = o.pass && v.ok;
            o.detail += std::string(o.detail.empty() ? "" : ", ") + name + " (" +
                        std::to_string(red.graph.vertex_count()) + " vertices) " +
                        (v.ok ? "verified" : "rejected: " + v.violation->describe());
        }
        return o;
    }

    Outcome subdivision_invariance()
    {
        std::mt19937_64 rng(77);
        long long checks = 0, changed = 0;
        std::string first;
        for (int sample = 0; sample < 20; ++sample) {
            const int n = 4 + sample % 7;
            const auto g = testsupport::random_connected_graph(n, 0.35, rng);
            for (auto [t, p] : period_pairs(2)) {
                const auto role = role_target(t, 2);
                const bool before = brute_force_oracle(g, role, OracleMode::rcol).exists();
                for (auto e : g.edges()) {
                    const auto h = subdivide_edge(g, e, p);
                    const bool after = brute_force_oracle(h, role, OracleMode::rcol).exists();
                    ++checks;
                    if (before != after && changed++ == 0)
                        first = "[" + edge_list(g) + "] edge " + std::to_string(e.first + 1) + "-" +
                                std::to_string(e.second + 1) + " p=" + std::to_string(p);
                }
            }
        }
        Outcome o{changed == 0, "20 graphs, " + std::to_string(checks) + " single-edge subdivisions, " +
                                    std::to_string(changed) + " changed colourability"};
        if (!first.empty())
            o.detail += "; first: " + first;
        return o;
    }

    Outcome subdivided_freeness()
    {
        CnfFormula f;
        f.variable_count = 3;
        f.clauses = {{1, 2}, {2, 3}};
        Outcome o;
        for (int j : {4, 5, 6}) {
            const auto red = build_g_phi_j(f, 2, j);
            std::vector<Graph> patterns{biclique_graph(1, 4)};
            for (int c = 3; c <= j; ++c)
                patterns.push_back(cycle_graph(c));
            for (int i = 1; i <= j; ++i)
                patterns.push_back(h_graph(i));
            const bool free = is_free(red.graph, patterns);
            const auto gi = girth(red.graph);
            const bool girth_ok = !gi || *gi > j;
            o.pass = o.pass && free && girth_ok;
            o.detail += std::string(o.detail.empty() ? "" : ", ") + "j=" + std::to_string(j) + " n=" +
                        std::to_string(red.graph.vertex_count()) + " free=" + (free ? "yes" : "no") +
                        " girth=" + (gi ? std::to_string(*gi) : "inf");
        }
        return o;
    }

    Outcome girth_pinning()
    {
        auto regular = [](const Graph &g) {
            const auto p = basic_props(g);
            return p.min_degree == 3 && p.max_degree == 3;
        };
        const auto small = build_girth_graph({3, 1, Recurrence::base});
        const auto &g = small.graph;
        bool pairs = true;
        for (auto [a, b] : {std::pair{"0000", "1010"}, std::pair{"0001", "1101"}, std::pair{"0010", "1000"}})
            pairs = pairs &&
                    g.adjacent(small.vertex_of(DigitString::parse(a)), small.vertex_of(DigitString::parse(b)));
        const auto gi = girth(g);
        const bool small_ok = g.vertex_count() == 16 && g.edge_count() == 24 && regular(g) && gi == 4 && pairs;

        const auto large = build_girth_graph({3, 2, Recurrence::base});
        const auto gl = girth(large.graph);
        const bool large_ok = large.length == 11 && regular(large.graph) && (!gl || *gl > 4);
        return {small_ok && large_ok,
                "length 3: n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) +
                    " girth=" + (gi ? std::to_string(*gi) : "inf") + " pairs=" + (pairs ? "present" : "missing") +
                    "; length 11: n=" + std::to_string(large.graph.vertex_count()) +
                    " girth=" + (gl ? std::to_string(*gl) : "inf")};
    }

    Outcome f_vectors()
    {
        const int f0 = gadget_colour_f(DigitString::parse("011110002"), GadgetSide::t0, 4);
        const int f1 = gadget_colour_f(DigitString::parse("11210002"), GadgetSide::t1, 4);
        const auto report = check_f_colouring({3, 1, Recurrence::doubled});
        Outcome o{f0 == 0 && f1 == 0 && report.ok(),
                  "f0=" + std::to_string(f0) + " f1=" + std::to_string(f1) + " (mod 4); gadget checks on " +
                      std::to_string(report.checked_vertices) + " vertices " + (report.ok() ? "ok" : "failed")};
        if (!report.ok())
            o.detail += ": " + report.first_failure;
        return o;
    }

    struct GemelProbe {
        std::string text;
        bool agrees = true;
        long long gadget_solutions = 0;
        bool forcing = true;
    };

    GemelProbe probe_gemel(LeafLabelling labelling, bool exhaustive_gadget, long long budget)
    {
        const GirthParams params{3, 1, Recurrence::doubled};
        GemelProbe out;
        auto word = [](SolveStatus s) { return s == SolveStatus::found ? "some" : s == SolveStatus::not_found ? "none" : "undecided"; };
        for (auto [g, name] : {std::pair{complete_graph(4), "K4"}, std::pair{biclique_graph(3, 3), "K3,3"}}) {
            const auto before = solve_k_ccol(g, 3).status;
            SolveConfig cfg;
            cfg.node_budget = budget;
            const auto after = solve_k_ccol(gemel_implant_all(g, params, labelling).graph, 3, cfg).status;
            out.agrees = out.agrees && before == after;
            out.text += std::string(name) + " " + word(before) + "->" + word(after) + ", ";
        }

        const auto iso = isolated_gadget(params, labelling);
        const SearchProblem sp{iso.graph, role_target(RoleTarget::complete_looped, 3), {}, iso.exempt, false};
        if (exhaustive_gadget) {
            SolveConfig all;
            all.enumerate_all = true;
            const auto res = solve_search(sp, all);
            out.gadget_solutions = static_cast<long long>(res.solutions.size());
            for (const auto &r : res.solutions)
                if (r.colours[iso.u] != r.colours[iso.u_prime] || r.colours[iso.v] != r.colours[iso.v_prime])
                    out.forcing = false;
            out.text += "gadget colourings " + std::to_string(out.gadget_solutions) +
                        (out.forcing ? ", ends equal in all" : ", an end pair differs");
        }
        else {
            // Too many colourings to list; pin one end and exclude its colour
            // at the partner, which is the same exhaustive question.
            out.gadget_solutions = solve_search(sp, {}).status == SolveStatus::found ? 1 : 0;
            for (auto [a, b] : {std::pair{iso.u, iso.u_prime}, std::pair{iso.v, iso.v_prime}}) {
                auto pinned = sp;
                pinned.domains.assign(iso.graph.vertex_count(), 0b111);
                pinned.domains[a] = 0b001;
                pinned.domains[b] = 0b110;
                if (solve_search(pinned, {}).status != SolveStatus::not_found)
                    out.forcing = false;
            }
            out.text += std::string("gadget ") + (out.gadget_solutions ? "colourable" : "uncolourable") +
                        (out.forcing ? ", ends forced equal" : ", ends not forced");
        }
        return out;
    }

    Outcome gemel_preservation()
    {
        const auto faithful = probe_gemel(LeafLabelling::deepest_first, true, 50'000'000);
        const auto alternative = probe_gemel(LeafLabelling::root_first, false, 2'000'000);
        // The forcing check is vacuous when the gadget has no colouring at all.
        const bool pass = faithful.agrees && faithful.forcing && faithful.gadget_solutions > 0;
        return {pass, "deepest-first: " + faithful.text + " | root-first (informational): " + alternative.text};
    }

    Outcome two_k2_report()
    {
        const Graph two_k2 = disjoint_copies(2, complete_graph(2));
        auto keep = [&](const Graph &g) { return !testsupport::brute_contains_induced(g, two_k2); };
        nlohmann::json report;
        report["class"] = "connected 2K2-free graphs, 2..7 vertices, one per isomorphism class";
        report["discrepancies"] = nlohmann::json::array();
        int graphs = 0, verified = 0, unverified_certificates = 0, unsound = 0, oracle_yes = 0;
        bool has_c5 = false;
        const auto c5_code = testsupport::canonical_code(cycle_graph(5));
        for (int n = 2; n <= 7; ++n)
            for (const auto &g : testsupport::hereditary_classes(n, keep)) {
                if (!is_connected(g))
                    continue;
                ++graphs;
                const auto res = two_role_colour_2k2_free(g);
                const bool oracle = brute_force_oracle(g, 2, OracleMode::rcol).exists();
                oracle_yes += oracle;
                const bool ok = res.kind == TwoRoleOutcome::Kind::verified_colouring;
                if (ok) {
                    ++verified;
                    if (!verify_role_colouring(g, res.role, res.colouring))
                        ++unverified_certificates;
                    if (!oracle)
                        ++unsound;
                }
                // Every graph in the class is claimed to be 2-role colourable.
                if (!ok || !oracle) {
                    nlohmann::json entry;
                    entry["vertices"] = g.vertex_count();
                    entry["edges"] = edge_list(g);
                    entry["oracle_colourable"] = oracle;
                    entry["algorithm"] = ok ? "verified_colouring" : "construction_failed";
                    entry["diagnostic"] = res.diagnostic;
                    if (g.vertex_count() == 5 && testsupport::canonical_code(g) == c5_code) {
                        entry["name"] = "C5";
                        has_c5 = true;
                    }
                    report["discrepancies"].push_back(entry);
                }
            }
        report["graphs"] = graphs;
        report["algorithm_verified"] = verified;
        report["oracle_colourable"] = oracle_yes;
        std::ofstream(report_path) << report.dump(2) << '\n';

        // Passing means the report is exactly what the oracle says: the
        // algorithm's successes are all oracle-confirmed and carry verified
        // certificates, and the known counterexample is present.
        const bool pass = unverified_certificates == 0 && unsound == 0 && has_c5;
        return {pass, std::to_string(graphs) + " graphs, " + std::to_string(verified) + " verified, " +
                          std::to_string(oracle_yes) + " colourable per oracle, " +
                          std::to_string(report["discrepancies"].size()) + " discrepancies" +
                          (has_c5 ? " including C5" : " (C5 missing)") + "; report: " + report_path};
    }

    Outcome string_transform()
    {
        const auto e = matching_e(DigitString::parse("011110002"), {4, 1, Recurrence::doubled}, true);
        return {e.to_string() == "112100021", "011110002 -> " + e.to_string()};
    }
}

int main(int argc, char **argv)
{
    if (argc > 1)
        report_path = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"solvers agree with the brute-force oracle", oracle_equivalence},
        {"antipodal colours agree on C_2p", antipodal_equality},
        {"reduction iff at k=2", reduction_iff},
        {"constructive colouring at k=3", constructive_k3},
        {"subdivision invariance", subdivision_invariance},
        {"subdivided instances are free and have large girth", subdivided_freeness},
        {"girth graph pinning", girth_pinning},
        {"f_0/f_1 vectors and gadget colouring checks", f_vectors},
        {"gemel implantation preserves coupon colourability", gemel_preservation},
        {"2K2-free module against the oracle", two_k2_report},
        {"two-step string transform", string_transform},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::ostringstream time;
        time.precision(1);
        time << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << " (" << time.str() << "s)" << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
