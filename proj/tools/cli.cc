#include "cli.hh"

#include <rolecol/certificate.hh>
#include <rolecol/cnf.hh>
#include <rolecol/error.hh>
#include <rolecol/families.hh>
#include <rolecol/graph_io.hh>
#include <rolecol/high_girth.hh>
#include <rolecol/induced.hh>
#include <rolecol/poly_special.hh>
#include <rolecol/sat_reduction.hh>
#include <rolecol/solver.hh>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace rolecol::cli {

namespace {
    struct GenArgs {
        std::string family, pattern, inner, recurrence = "base", out, labels;
        std::vector<int> params;
        int k = 3;
        int length = -1, length_index = -1;
    };

    struct PropsArgs {
        std::string graph;
        bool girth = false, degrees = false;
        std::vector<std::string> free;
    };

    struct SolveArgs {
        std::string mode, graph, role_graph, order = "min-candidates", out;
        int k = 0;
        bool all = false;
        long long budget = 0;
        double time_limit = 0;
    };

    struct VerifyArgs {
        std::string graph, colouring, role_graph;
        int coupon = 0;
    };

    struct ReduceArgs {
        std::string cnf, variant = "base", out, map;
        int k = 2, j = 0;
        bool allow_wide = false;
    };

    struct GemelArgs {
        std::string graph, labelling = "deepest-first", out, labels;
        std::vector<int> edge;
        int k = 3, length_index = 1;
    };

    struct TwoK2Args {
        std::string graph, out;
    };

    // Writes to `path`, or to `fallback` when the path is empty or "-".
    void emit(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &write)
    {
        if (path.empty() || path == "-") {
            write(fallback);
            return;
        }
        std::ofstream file(path);
        if (!file)
            throw InvalidInput("cannot write '" + path + "'");
        write(file);
    }

    std::string join(const std::vector<int> &xs)
    {
        std::string s;
        for (auto x : xs)
            s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    }

    Recurrence parse_recurrence(const std::string &name)
    {
        return name == "doubled" ? Recurrence::doubled : Recurrence::base;
    }

    int do_gen(const GenArgs &a, std::ostream &out)
    {
        if (a.family == "girth") {
            GirthParams p{a.k, 0, parse_recurrence(a.recurrence)};
            if (a.length_index >= 0)
                p.length_index = a.length_index;
            else if (a.length >= 0) {
                // The sequence grows very fast; the wanted term is among the first few.
                p.length_index = -1;
                for (int m = 0; p.length_index < 0; ++m) {
                    const auto term = a_sequence(a.k, m, p.recurrence).back();
                    if (term == a.length)
                        p.length_index = m;
                    else if (term > a.length)
                        throw InvalidInput("length " + std::to_string(a.length) + " is not a term of the sequence");
                }
            }
            else
                throw InvalidInput("--family girth needs --length or --length-index");
            const auto gg = build_girth_graph(p);
            const std::vector<std::string> comments{"girth graph k=" + std::to_string(a.k) +
                                                    " length=" + std::to_string(gg.length)};
            emit(a.out, out, [&](std::ostream &o) { write_graph(o, gg.graph, comments); });
            if (!a.labels.empty()) {
                std::vector<std::optional<DigitString>> labels(gg.labels.begin(), gg.labels.end());
                emit(a.labels, out, [&](std::ostream &o) { write_labels(o, labels); });
            }
            return exit_found;
        }

        GraphFamilySpec spec;
        std::string description;
        if (!a.pattern.empty()) {
            spec = parse_pattern(a.pattern);
            description = a.pattern;
        }
        else if (!a.family.empty()) {
            spec.family = family_from_name(a.family);
            spec.params = a.params;
            if (spec.family == Family::disjoint_copies) {
                if (a.inner.empty())
                    throw InvalidInput("disjoint_copies needs --inner <pattern>");
                spec.inner.push_back(parse_pattern(a.inner));
            }
            description = a.family + (a.params.empty() ? "" : " " + join(a.params)) +
                          (a.inner.empty() ? "" : " of " + a.inner);
        }
        else
            throw InvalidInput("gen needs --family or --pattern");
        const auto g = named_graph(spec);
        emit(a.out, out, [&](std::ostream &o) { write_graph(o, g, {description}); });
        return exit_found;
    }

    int do_props(const PropsArgs &a, std::ostream &out)
    {
        const auto g = read_graph_file(a.graph);
        const auto p = basic_props(g);
        out << "vertices " << g.vertex_count() << '\n'
            << "edges " << g.edge_count() << '\n'
            << "min_degree " << p.min_degree << '\n'
            << "max_degree " << p.max_degree << '\n'
            << "connected " << (p.connected ? "yes" : "no") << '\n';
        if (a.degrees) {
            out << "degrees";
            for (auto d : p.degrees)
                out << ' ' << d;
            out << '\n';
        }
        if (a.girth) {
            const auto gi = girth(g);
            out << "girth " << (gi ? std::to_string(*gi) : "infinite") << '\n';
        }
        bool all_free = true;
        for (const auto &name : a.free) {
            const auto witness = find_induced(g, named_graph(parse_pattern(name)));
            out << "free " << name << ' ' << (witness ? "no" : "yes");
            if (witness) {
                all_free = false;
                out << " witness";
                for (auto v : *witness)
                    out << ' ' << v + 1;
            }
            out << '\n';
        }
        return all_free ? exit_found : exit_negative;
    }

    int do_solve(const SolveArgs &a, std::ostream &out, std::ostream &err)
    {
        const auto g = read_graph_file(a.graph);
        SolveConfig cfg;
        cfg.enumerate_all = a.all;
        cfg.variable_order =
            a.order == "input" ? VariableOrder::input_order : VariableOrder::min_candidates_first;
        if (a.budget > 0)
            cfg.node_budget = a.budget;
        if (a.time_limit > 0)
            cfg.deadline = std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(a.time_limit));

        std::vector<Certificate> certs;
        SolveStatus status;
        long long nodes = 0;
        if (a.mode == "ccol") {
            if (a.k < 1)
                throw InvalidInput("solve ccol needs --k");
            auto r = solve_k_ccol(g, a.k, cfg);
            status = r.status;
            nodes = r.nodes;
            for (auto &s : r.solutions)
                certs.push_back({std::move(s), std::nullopt});
        }
        else if (!a.role_graph.empty()) {
            RoleGraph role{read_graph_file(a.role_graph)};
            auto r = solve_r_rcol(g, role, cfg);
            status = r.status;
            nodes = r.nodes;
            for (auto &s : r.solutions)
                certs.push_back({std::move(s), role});
        }
        else {
            if (a.k < 1)
                throw InvalidInput("solve rcol needs --k or --role-graph");
            auto r = solve_k_rcol(g, a.k, cfg);
            status = r.status;
            nodes = r.nodes;
            for (auto &[role, s] : r.solutions)
                certs.push_back({std::move(s), std::move(role)});
        }

        const char *status_name = status == SolveStatus::found       ? "found"
                                  : status == SolveStatus::not_found ? "not_found"
                                                                     : "budget_exhausted";
        emit(a.out, out, [&](std::ostream &o) {
            o << "c status " << status_name << '\n' << "c nodes " << nodes << '\n';
            for (std::size_t i = 0; i < certs.size(); ++i) {
                if (a.all)
                    o << "c solution " << i + 1 << '\n';
                write_certificate(o, certs[i]);
            }
        });
        if (status == SolveStatus::budget_exhausted) {
            err << "search stopped after " << nodes << " nodes without a definite answer\n";
            return exit_budget;
        }
        return status == SolveStatus::found ? exit_found : exit_negative;
    }

    int do_verify(const VerifyArgs &a, std::ostream &out)
    {
        const auto g = read_graph_file(a.graph);
        const auto cert = read_certificate_file(a.colouring);
        VerifyResult result;
        if (a.coupon > 0)
            result = verify_coupon_colouring(g, a.coupon, cert.colouring);
        else if (!a.role_graph.empty())
            result = verify_role_colouring(g, RoleGraph{read_graph_file(a.role_graph)}, cert.colouring);
        else if (cert.role)
            result = verify_role_colouring(g, *cert.role, cert.colouring);
        else
            throw InvalidInput("verify needs --role-graph, --coupon, or a role block in the colouring file");
        if (result.ok) {
            out << "valid\n";
            return exit_found;
        }
        out << "invalid: " << result.violation->describe() << '\n';
        return exit_negative;
    }

    int do_reduce(const ReduceArgs &a, std::ostream &out)
    {
        const auto f = parse_cnf_file(a.cnf, CnfParseOptions{a.allow_wide});
        Reduction red;
        if (a.variant == "base")
            red = build_g_phi(f, a.k);
        else if (a.variant == "prime")
            red = build_g_phi_prime(f, a.k);
        else {
            if (a.j < 1)
                throw InvalidInput("--variant subdivided needs --j >= 1");
            red = build_g_phi_j(f, a.k, a.j);
        }
        std::vector<std::string> comments{"reduction variant=" + a.variant + " k=" + std::to_string(a.k)};
        if (a.variant == "subdivided")
            comments.back() += " j=" + std::to_string(a.j);
        emit(a.out, out, [&](std::ostream &o) { write_graph(o, red.graph, comments); });
        if (!a.map.empty())
            emit(a.map, out, [&](std::ostream &o) { write_gadget_map(o, red.map); });
        return exit_found;
    }

    int do_gemel(const GemelArgs &a, std::ostream &out)
    {
        const auto g = read_graph_file(a.graph);
        const GirthParams p{a.k, a.length_index, Recurrence::doubled};
        const auto labelling = a.labelling == "root-first" ? LeafLabelling::root_first : LeafLabelling::deepest_first;
        GemelResult res;
        if (!a.edge.empty()) {
            if (a.edge.size() != 2 || a.edge[0] < 1 || a.edge[1] < 1)
                throw InvalidInput("--edge takes two 1-based vertex ids");
            res = gemel_implant_edge(g, Edge{a.edge[0] - 1, a.edge[1] - 1}, p, labelling);
        }
        else
            res = gemel_implant_all(g, p, labelling);
        const std::vector<std::string> comments{"gemel k=" + std::to_string(a.k) + " depth=" +
                                                std::to_string(gemel_tree_depth(p)) + " labelling=" + a.labelling};
        emit(a.out, out, [&](std::ostream &o) { write_graph(o, res.graph, comments); });
        if (!a.labels.empty())
            emit(a.labels, out, [&](std::ostream &o) { write_labels(o, res.labels); });
        return exit_found;
    }

    int do_colour_2k2(const TwoK2Args &a, std::ostream &out, std::ostream &err)
    {
        const auto g = read_graph_file(a.graph);
        const auto res = two_role_colour_2k2_free(g);
        switch (res.kind) {
        case TwoRoleOutcome::Kind::verified_colouring:
            emit(a.out, out, [&](std::ostream &o) { write_certificate(o, {res.colouring, res.role}); });
            return exit_found;
        case TwoRoleOutcome::Kind::too_small:
            err << "graph has fewer than two vertices\n";
            return exit_negative;
        case TwoRoleOutcome::Kind::construction_failed:
            break;
        }
        err << "construction failed: " << res.diagnostic << '\n';
        return exit_negative;
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Role colouring and coupon colouring toolkit", "rolecol"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto *gen = app.add_subcommand("gen", "Write a named graph");
    gen->add_option("--family", gen_args.family,
                    "path, cycle, path_star, path_star_star, complete, biclique, h_graph, spider, perfect_tree, "
                    "disjoint_copies, or girth");
    gen->add_option("--pattern", gen_args.pattern, "Compact notation such as C5, K1_4, H2, 2K2");
    gen->add_option("--params", gen_args.params, "Family parameters")->delimiter(',');
    gen->add_option("--inner", gen_args.inner, "Pattern copied by disjoint_copies");
    gen->add_option("--k", gen_args.k, "Girth family: k");
    gen->add_option("--length", gen_args.length, "Girth family: digit length (a term of the sequence)");
    gen->add_option("--length-index", gen_args.length_index, "Girth family: index m of the digit length a_m");
    gen->add_option("--recurrence", gen_args.recurrence)->check(CLI::IsMember({"base", "doubled"}));
    gen->add_option("--labels", gen_args.labels, "Girth family: write digit-string labels here");
    gen->add_option("--out", gen_args.out, "Output file (default stdout)");

    PropsArgs props_args;
    auto *props = app.add_subcommand("props", "Print graph properties");
    props->add_option("--graph", props_args.graph)->required();
    props->add_flag("--girth", props_args.girth);
    props->add_flag("--degrees", props_args.degrees);
    props->add_option("--free", props_args.free, "Patterns to test for, e.g. C3,K1_4,H1")->delimiter(',');

    SolveArgs solve_args;
    auto *solve = app.add_subcommand("solve", "Search for a role or coupon colouring");
    solve->add_option("mode", solve_args.mode)->required()->check(CLI::IsMember({"rcol", "ccol"}));
    solve->add_option("--graph", solve_args.graph)->required();
    solve->add_option("--k", solve_args.k, "Number of colours");
    solve->add_option("--role-graph", solve_args.role_graph, "Fixed role graph (rcol)");
    solve->add_flag("--all", solve_args.all, "List every solution");
    solve->add_option("--budget", solve_args.budget, "Node budget")->check(CLI::PositiveNumber);
    solve->add_option("--time-limit", solve_args.time_limit, "Wall-clock limit in seconds")
        ->check(CLI::PositiveNumber);
    solve->add_option("--order", solve_args.order)->check(CLI::IsMember({"min-candidates", "input"}));
    solve->add_option("--out", solve_args.out);

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check a colouring certificate");
    verify->add_option("--graph", verify_args.graph)->required();
    verify->add_option("--colouring", verify_args.colouring)->required();
    auto *role_opt = verify->add_option("--role-graph", verify_args.role_graph);
    verify->add_option("--coupon", verify_args.coupon, "Check a k-coupon colouring")
        ->check(CLI::PositiveNumber)
        ->excludes(role_opt);

    ReduceArgs reduce_args;
    auto *reduce = app.add_subcommand("reduce", "Build a reduction graph from a monotone CNF");
    reduce->add_option("--cnf", reduce_args.cnf)->required();
    reduce->add_option("--k", reduce_args.k)->required();
    reduce->add_option("--variant", reduce_args.variant)->check(CLI::IsMember({"base", "prime", "subdivided"}));
    reduce->add_option("--j", reduce_args.j, "Subdivision multiplier");
    reduce->add_option("--out", reduce_args.out);
    reduce->add_option("--map", reduce_args.map, "Write the gadget map here");
    reduce->add_flag("--allow-wide", reduce_args.allow_wide, "Accept clauses wider than 3");

    GemelArgs gemel_args;
    auto *gemel = app.add_subcommand("gemel", "Replace edges by tree gadgets");
    gemel->add_option("--graph", gemel_args.graph)->required();
    gemel->add_option("--k", gemel_args.k)->required();
    gemel->add_option("--length-index", gemel_args.length_index);
    gemel->add_option("--edge", gemel_args.edge, "Implant only this edge, e.g. 1,2")->delimiter(',');
    gemel->add_option("--labelling", gemel_args.labelling)
        ->check(CLI::IsMember({"deepest-first", "root-first"}));
    gemel->add_option("--out", gemel_args.out);
    gemel->add_option("--labels", gemel_args.labels, "Write tree-vertex labels here");

    TwoK2Args two_args;
    auto *two = app.add_subcommand("colour-2k2", "2-role colouring of a 2K2-free graph");
    two->add_option("--graph", two_args.graph)->required();
    two->add_option("--out", two_args.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_found;
    }
    catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*gen)
            return do_gen(gen_args, out);
        if (*props)
            return do_props(props_args, out);
        if (*solve)
            return do_solve(solve_args, out, err);
        if (*verify)
            return do_verify(verify_args, out);
        if (*reduce)
            return do_reduce(reduce_args, out);
        if (*gemel)
            return do_gemel(gemel_args, out);
        return do_colour_2k2(two_args, out, err);
    }
    catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const GuardError &e) {
        err << "size guard: " << e.what() << '\n';
    }
    catch (const InternalError &e) {
        err << "internal error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace rolecol::cli
