#include <doctest.h>

#include "cli.hh"

#include <rolecol/certificate.hh>
#include <rolecol/families.hh>
#include <rolecol/graph_io.hh>
#include <rolecol/role_colouring.hh>
#include <rolecol/sat_reduction.hh>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

using namespace rolecol;
namespace fs = std::filesystem;

namespace {
    struct Outcome {
        int code;
        std::string out, err;
    };

    Outcome run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "rolecol");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    class Scratch {
    public:
        Scratch()
        {
            static int counter = 0;
            dir_ = fs::temp_directory_path() /
                   ("rolecol_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
            fs::create_directories(dir_);
        }
        ~Scratch() { fs::remove_all(dir_); }

        std::string path(const std::string &name) const { return (dir_ / name).string(); }

        std::string write(const std::string &name, const std::string &text) const
        {
            std::ofstream(path(name)) << text;
            return path(name);
        }

        std::string graph(const std::string &name, const Graph &g) const
        {
            write_graph_file(path(name), g);
            return path(name);
        }

        static std::string read(const std::string &p)
        {
            std::ifstream in(p);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

    private:
        fs::path dir_;
    };

    Graph graph_of(const std::string &text)
    {
        std::istringstream in(text);
        return read_graph(in);
    }

    Certificate certificate_of(const std::string &text)
    {
        std::istringstream in(text);
        return read_certificate(in);
    }
}

TEST_CASE("solve ccol on K_{3,3} finds a rainbow colouring of both sides")
{
    Scratch s;
    auto g = s.graph("k33.g", biclique_graph(3, 3));
    auto r = run({"solve", "ccol", "--graph", g, "--k", "3"});
    CHECK(r.code == cli::exit_found);
    CHECK(r.out.find("c status found") != std::string::npos);
    auto cert = certificate_of(r.out);
    REQUIRE(cert.colouring.colours.size() == 6);
    std::set<int> left(cert.colouring.colours.begin(), cert.colouring.colours.begin() + 3);
    std::set<int> right(cert.colouring.colours.begin() + 3, cert.colouring.colours.end());
    CHECK(left == std::set<int>{0, 1, 2});
    CHECK(right == std::set<int>{0, 1, 2});

    auto out = s.path("k33.col");
    CHECK(run({"solve", "ccol", "--graph", g, "--k", "3", "--out", out}).code == cli::exit_found);
    CHECK(run({"verify", "--graph", g, "--colouring", out, "--coupon", "3"}).code == cli::exit_found);
}

TEST_CASE("solve reports negatives and budget exhaustion distinctly")
{
    Scratch s;
    auto k4 = s.graph("k4.g", complete_graph(4));
    CHECK(run({"solve", "ccol", "--graph", k4, "--k", "3"}).code == cli::exit_negative);
    auto c5 = s.graph("c5.g", cycle_graph(5));
    CHECK(run({"solve", "rcol", "--graph", c5, "--k", "2"}).code == cli::exit_negative);
    auto res = run({"solve", "rcol", "--graph", c5, "--k", "5"});
    CHECK(res.code == cli::exit_found);

    auto big = s.graph("big.g", biclique_graph(6, 6));
    auto budget = run({"solve", "ccol", "--graph", big, "--k", "3", "--all", "--budget", "5"});
    CHECK(budget.code == cli::exit_budget);
    CHECK(budget.out.find("c status budget_exhausted") != std::string::npos);
}

TEST_CASE("solve rcol with a role graph and --all")
{
    Scratch s;
    auto c6 = s.graph("c6.g", cycle_graph(6));
    auto p3 = s.graph("p3ss.g", role_target(RoleTarget::path_star_star, 3).graph);
    auto r = run({"solve", "rcol", "--graph", c6, "--role-graph", p3, "--all"});
    CHECK(r.code == cli::exit_found);
    // The pattern 1,1,2,3,3,2 has six rotations and is its own mirror image
    // up to rotation, and the colour swap 1 <-> 3 gives nothing new.
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = r.out.find("c solution", pos)) != std::string::npos; ++pos)
        ++count;
    CHECK(count == 6);
}

TEST_CASE("verify on the six-cycle pattern")
{
    Scratch s;
    auto c6 = s.graph("c6.g", cycle_graph(6));
    auto p3 = s.graph("p3ss.g", role_target(RoleTarget::path_star_star, 3).graph);
    auto good = s.write("good.col", "v 1 1\nv 2 1\nv 3 2\nv 4 3\nv 5 3\nv 6 2\n");
    auto bad = s.write("bad.col", "v 1 1\nv 2 2\nv 3 2\nv 4 3\nv 5 3\nv 6 2\n");
    auto r = run({"verify", "--graph", c6, "--colouring", good, "--role-graph", p3});
    CHECK(r.code == cli::exit_found);
    CHECK(r.out == "valid\n");
    auto b = run({"verify", "--graph", c6, "--colouring", bad, "--role-graph", p3});
    CHECK(b.code == cli::exit_negative);
    CHECK(b.out.rfind("invalid: ", 0) == 0);
    // No role graph and no role block in the certificate.
    CHECK(run({"verify", "--graph", c6, "--colouring", good}).code == cli::exit_usage);
    CHECK(run({"verify", "--graph", c6, "--colouring", good, "--role-graph", p3, "--coupon", "2"}).code ==
          cli::exit_usage);
}

TEST_CASE("reduce writes the instance and its map")
{
    Scratch s;
    auto cnf = s.write("phi.cnf", "p cnf 3 2\n1 2 0\n2 3 0\n");
    auto out = s.path("g.g"), map = s.path("g.map");
    auto r = run({"reduce", "--cnf", cnf, "--k", "3", "--variant", "base", "--out", out, "--map", map});
    CHECK(r.code == cli::exit_found);
    auto g = read_graph_file(out);
    CHECK(g.vertex_count() == 77);
    std::ifstream min(map);
    auto gm = read_gadget_map(min);
    CHECK(gm.size() == 77);

    auto prime = run({"reduce", "--cnf", cnf, "--k", "3", "--variant", "prime"});
    CHECK(graph_of(prime.out).vertex_count() == 94);
    CHECK(run({"reduce", "--cnf", cnf, "--k", "2", "--variant", "subdivided"}).code == cli::exit_usage);
    auto sub = run({"reduce", "--cnf", cnf, "--k", "2", "--variant", "subdivided", "--j", "1"});
    CHECK(sub.code == cli::exit_found);
    CHECK(sub.out.find("c reduction variant=subdivided k=2 j=1") != std::string::npos);

    auto wide = s.write("wide.cnf", "p cnf 4 1\n1 2 3 4 0\n");
    CHECK(run({"reduce", "--cnf", wide, "--k", "2"}).code == cli::exit_usage);
    CHECK(run({"reduce", "--cnf", wide, "--k", "2", "--allow-wide"}).code == cli::exit_found);
    auto negative = s.write("neg.cnf", "p cnf 1 1\n-1 0\n");
    auto err = run({"reduce", "--cnf", negative, "--k", "2"});
    CHECK(err.code == cli::exit_usage);
    CHECK_FALSE(err.err.empty());
}

TEST_CASE("gen and props")
{
    Scratch s;
    auto c5 = run({"gen", "--family", "cycle", "--params", "5"});
    CHECK(c5.code == cli::exit_found);
    CHECK(graph_of(c5.out) == cycle_graph(5));
    auto pat = run({"gen", "--pattern", "2K2"});
    CHECK(graph_of(pat.out) == disjoint_copies(2, complete_graph(2)));

    auto girth_file = s.path("girth.g");
    CHECK(run({"gen", "--family", "girth", "--k", "3", "--length", "3", "--out", girth_file}).code == cli::exit_found);
    auto props = run({"props", "--graph", girth_file, "--girth", "--free", "C3,K1_4"});
    CHECK(props.code == cli::exit_found);
    CHECK(props.out.find("vertices 16\n") != std::string::npos);
    CHECK(props.out.find("girth 4\n") != std::string::npos);
    CHECK(props.out.find("free C3 yes\n") != std::string::npos);
    CHECK(run({"gen", "--family", "girth", "--k", "3", "--length", "4"}).code == cli::exit_usage);

    auto present = run({"props", "--graph", girth_file, "--free", "C4"});
    CHECK(present.code == cli::exit_negative);
    CHECK(present.out.find("free C4 no witness") != std::string::npos);
}

TEST_CASE("gemel and colour-2k2")
{
    Scratch s;
    auto k4 = s.graph("k4.g", complete_graph(4));
    auto one = run({"gemel", "--graph", k4, "--k", "3", "--edge", "1,2"});
    CHECK(one.code == cli::exit_found);
    CHECK(one.out.find("c gemel k=3 depth=6 labelling=deepest-first") != std::string::npos);
    CHECK_FALSE(graph_of(one.out).adjacent(0, 1));
    CHECK(run({"gemel", "--graph", k4, "--k", "3", "--edge", "1,1"}).code == cli::exit_usage);
    auto c5 = s.graph("c5.g", cycle_graph(5));
    CHECK(run({"gemel", "--graph", c5, "--k", "3"}).code == cli::exit_usage);

    auto k5 = s.graph("k5.g", complete_graph(5));
    auto ok = run({"colour-2k2", "--graph", k5});
    CHECK(ok.code == cli::exit_found);
    CHECK(certificate_of(ok.out).colouring.colours == std::vector<int>{0, 1, 1, 1, 1});
    auto failed = run({"colour-2k2", "--graph", c5});
    CHECK(failed.code == cli::exit_negative);
    CHECK(failed.err.rfind("construction failed: ", 0) == 0);
    auto p5 = s.graph("p5.g", path_graph(5));
    CHECK(run({"colour-2k2", "--graph", p5}).code == cli::exit_usage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({"solve", "xcol", "--graph", "x"}).code == cli::exit_usage);
    CHECK(run({"props", "--graph", "/nonexistent/graph.g"}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes")
{
    Scratch s;
    auto cnf = s.write("phi.cnf", "p cnf 3 2\n1 2 0\n2 3 0\n");
    auto g = s.graph("g.g", biclique_graph(3, 3));
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"reduce", "--cnf", cnf, "--k", "2", "--variant", "prime", "--map", s.path("m")},
             {"solve", "ccol", "--graph", g, "--k", "3", "--all"},
             {"gemel", "--graph", g, "--k", "3", "--labelling", "root-first"},
         }) {
        auto a = run(args);
        auto first_map = args[0] == "reduce" ? Scratch::read(s.path("m")) : "";
        auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        if (args[0] == "reduce")
            CHECK(Scratch::read(s.path("m")) == first_map);
    }
}
