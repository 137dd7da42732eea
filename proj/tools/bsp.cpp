// Command-line front end: solve/follower/reduce/gen/verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bsp/leader.hpp"
#include "bsp/oracle.hpp"
#include "bsp/reductions.hpp"
#include "bsp/verify.hpp"

namespace {

using namespace bsp;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BSP_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(values[i]);
    }
    return out;
}

void print_outcome(const SolveOutcome& out) {
    if (out.status == SolveStatus::Infeasible) {
        std::cout << "status infeasible\n";
        return;
    }
    std::cout << "status optimal\n"
              << "leader_value " << out.leader_value.str() << "\n"
              << "follower_value " << out.follower_value.str() << "\n"
              << "X=" << join(out.x) << "\n"
              << "Y=" << join(out.y.edges) << "\n"
              << "path=" << join(out.y.path) << "\n";
}

const char* reason_name(InfeasibleReason reason) {
    switch (reason) {
        case InfeasibleReason::NotAChain: return "not-a-chain";
        case InfeasibleReason::EmptySegment: return "empty-segment";
        default: return "no-path";
    }
}

// Shared text format for reduce inputs that are plain graphs:
//   graph undirected|directed
//   vertices <n>
//   edge <u> <v>
struct ParsedGraph {
    bool directed = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

ParsedGraph parse_graph(const std::string& text) {
    ParsedGraph g;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
        };
        if (!have_header) {
            std::string kind;
            if (keyword != "graph" || !(ls >> kind) ||
                (kind != "directed" && kind != "undirected"))
                fail("expected 'graph directed' or 'graph undirected'");
            g.directed = kind == "directed";
            have_header = true;
        } else if (keyword == "vertices") {
            if (!(ls >> g.n) || g.n <= 0) fail("bad vertex count");
        } else if (keyword == "edge") {
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge");
            g.edges.push_back({u, v});
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!have_header) throw std::runtime_error("missing 'graph' header");
    return g;
}

// Min-Max-Ham text format:
//   minmaxham
//   vertices <n> ; s/t/v <id> ; etilde <u> <v> ; b <u> <v> ; edge <u> <v>
MinMaxHamInstance parse_minmaxham(const std::string& text) {
    MinMaxHamInstance mmh;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
        };
        if (!have_header) {
            if (keyword != "minmaxham") fail("expected 'minmaxham' header");
            have_header = true;
            continue;
        }
        int u, v;
        if (keyword == "vertices" && ls >> mmh.g.n) continue;
        if (keyword == "s" && ls >> mmh.s) continue;
        if (keyword == "t" && ls >> mmh.t) continue;
        if (keyword == "v" && ls >> mmh.v) continue;
        if (keyword == "etilde" && ls >> u >> v) {
            mmh.e_tilde = {u, v};
            continue;
        }
        if (keyword == "b" && ls >> u >> v) {
            mmh.b.push_back({u, v});
            continue;
        }
        if (keyword == "edge" && ls >> u >> v) {
            mmh.g.edges.push_back({u, v});
            continue;
        }
        fail("bad record '" + keyword + "'");
    }
    if (!have_header) throw std::runtime_error("missing 'minmaxham' header");
    return mmh;
}

int run(int argc, char** argv) {
    CLI::App app{"exact bilevel shortest path toolkit"};
    app.require_subcommand(1);

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "solve the leader's problem");
    std::string variant, method = "auto", file;
    bool expect_feasible = false;
    solve->add_option("--variant", variant, "weak or strong")
        ->required()
        ->check(CLI::IsMember({"weak", "strong"}));
    solve->add_option("--method", method, "auto, enum, dag, kcycle or brute")
        ->check(CLI::IsMember({"auto", "enum", "dag", "kcycle", "brute"}));
    solve->add_flag("--expect-feasible", expect_feasible,
                    "exit 1 when the instance is infeasible");
    solve->add_option("file", file, "instance file")->required();

    // --- follower ---
    auto* follower = app.add_subcommand("follower", "solve the follower's problem");
    std::string f_variant, f_file;
    std::vector<int> f_x;
    bool f_expect_feasible = false;
    follower->add_option("--variant", f_variant, "weak or strong")
        ->required()
        ->check(CLI::IsMember({"weak", "strong"}));
    follower->add_option("--X", f_x, "leader edge ids");
    follower->add_flag("--expect-feasible", f_expect_feasible,
                       "exit 1 when the follower's problem is infeasible");
    follower->add_option("file", f_file, "instance file")->required();

    // --- reduce ---
    auto* reduce = app.add_subcommand("reduce", "build a gadget instance");
    std::string from, r_file, r_eps = "1", r_orientation = "undirected";
    int r_k = 1, r_s = 0, r_t = 1, r_s1 = 0, r_t1 = 1, r_s2 = 2, r_t2 = 3;
    reduce->add_option("--from", from, "source problem")
        ->required()
        ->check(CLI::IsMember(
            {"undirected", "is", "hampath", "vdp", "kcycle", "minmaxham"}));
    reduce->add_option("--k", r_k, "independent set size");
    reduce->add_option("--orientation", r_orientation, "undirected or dag")
        ->check(CLI::IsMember({"undirected", "dag"}));
    reduce->add_option("--s", r_s, "path source");
    reduce->add_option("--t", r_t, "path sink");
    reduce->add_option("--eps", r_eps, "gadget epsilon (rational)");
    reduce->add_option("--s1", r_s1, "first pair source");
    reduce->add_option("--t1", r_t1, "first pair sink");
    reduce->add_option("--s2", r_s2, "second pair source");
    reduce->add_option("--t2", r_t2, "second pair sink");
    reduce->add_option("file", r_file, "input file")->required();

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    RandomInstanceParams params;
    params.seed = default_seed();
    gen->add_option("--n", params.n, "vertex count");
    gen->add_option("--edge-prob", params.percent_edge, "edge probability (%)");
    gen->add_option("--leader-prob", params.percent_leader,
                    "leader ownership probability (%)");
    gen->add_option("--max-cost", params.max_cost, "maximum integer cost");
    gen->add_flag("--directed", params.directed, "directed instance");
    gen->add_flag("--dag", params.dag, "directed acyclic instance");
    gen->add_option("--seed", params.seed, "random seed");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    std::uint64_t v_seed = default_seed();
    int v_count = 100;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", v_seed, "random seed");
    verify->add_option("--count", v_count, "number of checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*solve) {
        BilevelInstance inst = parse_instance(read_file(file));
        SolveOutcome out;
        if (variant == "weak") {
            if (method == "dag" || method == "kcycle")
                throw std::runtime_error("method not available for the weak variant");
            out = method == "brute" ? brute_force_bilevel(inst, Variant::Weak)
                                    : solve_leader_weak_enum(inst);
        } else {
            std::string chosen = method;
            if (chosen == "auto") {
                if (inst.is_dag())
                    chosen = "dag";
                else if (!inst.directed && inst.leader_edge_ids().size() <= 15)
                    chosen = "kcycle";
                else
                    chosen = "brute";
            }
            if (chosen == "dag")
                out = solve_leader_strong_dag(inst);
            else if (chosen == "kcycle")
                out = solve_leader_strong_undir_via_kcycle(inst);
            else if (chosen == "enum")
                out = solve_leader_strong_exact(inst);
            else
                out = brute_force_bilevel(inst, Variant::Strong);
        }
        print_outcome(out);
        return expect_feasible && out.status == SolveStatus::Infeasible ? 1 : 0;
    }

    if (*follower) {
        BilevelInstance inst = parse_instance(read_file(f_file));
        FollowerOutcome out;
        if (f_variant == "weak")
            out = solve_follower_weak(inst, f_x);
        else if (inst.is_dag())
            out = solve_follower_strong_dag(inst, f_x);
        else
            out = solve_follower_strong_exact(inst, f_x);
        if (out.status == SolveStatus::Infeasible) {
            std::cout << "status infeasible\n"
                      << "reason " << reason_name(out.reason) << "\n";
            return f_expect_feasible ? 1 : 0;
        }
        std::cout << "status optimal\n"
                  << "follower_value " << out.value.primary.str() << "\n"
                  << "leader_value " << out.value.secondary.str() << "\n"
                  << "Y=" << join(out.response.edges) << "\n"
                  << "path=" << join(out.response.path) << "\n";
        return 0;
    }

    if (*reduce) {
        std::string text = read_file(r_file);
        if (from == "undirected") {
            auto res = undirected_to_directed(parse_instance(text));
            std::cout << serialize_instance(res.inst)
                      << "# certificate: same-optimal -\n";
        } else if (from == "is") {
            ParsedGraph g = parse_graph(text);
            if (g.directed) throw std::runtime_error("expected an undirected graph");
            auto res = independent_set_to_weak(
                SimpleGraph{g.n, g.edges}, r_k,
                r_orientation == "dag" ? IsOrientation::Dag
                                       : IsOrientation::Undirected);
            std::cout << serialize_instance(res.inst)
                      << "# certificate: optw<= " << res.threshold.str() << "\n";
        } else if (from == "hampath") {
            ParsedGraph g = parse_graph(text);
            if (g.directed) throw std::runtime_error("expected an undirected graph");
            auto eps = Cost::parse(r_eps);
            if (!eps) throw std::runtime_error("bad --eps value");
            auto res = hampath_to_follower_strong(SimpleGraph{g.n, g.edges}, r_s,
                                                  r_t, *eps);
            std::cout << serialize_instance(res.inst)
                      << "# certificate: folstrong<= " << res.eps.str() << "\n"
                      << "# X': " << join(res.x) << "\n";
        } else if (from == "vdp") {
            ParsedGraph g = parse_graph(text);
            if (!g.directed) throw std::runtime_error("expected a directed graph");
            auto inst = vdp_to_strong_dir(Digraph{g.n, g.edges}, r_s1, r_t1, r_s2,
                                          r_t2);
            std::cout << serialize_instance(inst) << "# certificate: opts== 0\n";
        } else if (from == "kcycle") {
            auto res = kcycle_to_strong_undir(parse_kcycle(text));
            std::cout << serialize_instance(res.inst)
                      << "# certificate: opts< " << res.big_m.str() << "\n";
        } else {
            auto res = minmaxham_to_strong_undir(parse_minmaxham(text));
            std::cout << serialize_instance(res.inst) << "# certificate: opts== 0\n";
        }
        return 0;
    }

    if (*gen) {
        std::cout << serialize_instance(random_instance(params));
        return 0;
    }

    // verify
    SuiteResult result = run_suite(suite, v_seed, v_count);
    std::cout << "suite " << suite << ": " << result.passed << " passed, "
              << result.failed << " failed\n";
    for (const auto& line : result.failures) std::cout << "failure: " << line << "\n";
    return result.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
