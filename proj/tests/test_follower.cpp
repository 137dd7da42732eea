#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "bsp/follower.hpp"
#include "bsp/oracle.hpp"

using namespace bsp;

namespace {

BilevelInstance load_fixture(const char* name) {
    std::ifstream in(std::string(BSP_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

BilevelInstance triangle() { return load_fixture("e1.bsp"); }

}  // namespace

TEST_CASE("weak completion ignores unused leader edges") {
    BilevelInstance inst = triangle();
    // X = {0}: the direct follower edge still has smaller d, so the
    // follower skips the offered leader edge entirely.
    FollowerOutcome out = solve_follower_weak(inst, {0});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.value.primary == Cost(0));
    CHECK(out.value.secondary == Cost(5));
    CHECK(out.response.path == std::vector<int>{0, 2});
    CHECK(out.response.edges == std::vector<int>{1});

    out = solve_follower_weak(inst, {});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.value.secondary == Cost(5));
}

TEST_CASE("weak completion breaks follower ties in the leader's favor") {
    BilevelInstance inst;
    inst.n = 3;
    inst.s = 0;
    inst.t = 2;
    inst.edges = {{0, 1, Owner::Follower, Cost(9), Cost(1)},
                  {1, 2, Owner::Follower, Cost(9), Cost(0)},
                  {0, 2, Owner::Follower, Cost(1), Cost(1)}};
    FollowerOutcome out = solve_follower_weak(inst, {});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.value.primary == Cost(1));
    CHECK(out.value.secondary == Cost(1));
    CHECK(out.response.path == std::vector<int>{0, 2});
}

TEST_CASE("weak completion reports infeasibility") {
    BilevelInstance inst;
    inst.n = 3;
    inst.s = 0;
    inst.t = 2;
    inst.edges = {{0, 1, Owner::Follower, Cost(), Cost()},
                  {1, 2, Owner::Leader, Cost(), Cost()}};
    FollowerOutcome out = solve_follower_weak(inst, {});
    CHECK(out.status == SolveStatus::Infeasible);
    CHECK(out.reason == InfeasibleReason::NoPath);
    out = solve_follower_weak(inst, {1});
    CHECK(out.status == SolveStatus::Optimal);
}

TEST_CASE("strong completion must cover X exactly") {
    BilevelInstance inst = triangle();
    FollowerOutcome out = solve_follower_strong_exact(inst, {0});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.value.primary == Cost(1));
    CHECK(out.value.secondary == Cost(0));
    CHECK(out.response.path == std::vector<int>{0, 1, 2});
    CHECK(out.response.edges == std::vector<int>{2});

    out = solve_follower_strong_exact(inst, {});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.value.secondary == Cost(5));
    CHECK(out.response.path == std::vector<int>{0, 2});
}

TEST_CASE("strong completion is infeasible when X cannot lie on one path") {
    BilevelInstance inst;
    inst.directed = true;
    inst.n = 4;
    inst.s = 0;
    inst.t = 3;
    // two parallel leader routes: both cannot be on a single simple path
    inst.edges = {{0, 1, Owner::Leader, Cost(), Cost()},
                  {1, 3, Owner::Follower, Cost(), Cost()},
                  {0, 2, Owner::Leader, Cost(), Cost()},
                  {2, 3, Owner::Follower, Cost(), Cost()}};
    CHECK(solve_follower_strong_exact(inst, {0, 2}).status ==
          SolveStatus::Infeasible);
    CHECK(solve_follower_strong_exact(inst, {0}).status ==
          SolveStatus::Optimal);

    FollowerOutcome dag = solve_follower_strong_dag(inst, {0, 2});
    CHECK(dag.status == SolveStatus::Infeasible);
    CHECK(dag.reason == InfeasibleReason::NotAChain);
}

TEST_CASE("strong dag completion reports empty segments") {
    BilevelInstance inst;
    inst.directed = true;
    inst.n = 4;
    inst.s = 0;
    inst.t = 3;
    // chain-comparable leader edges with no follower connection between them
    inst.edges = {{0, 1, Owner::Leader, Cost(), Cost()},
                  {1, 2, Owner::Leader, Cost(), Cost()},
                  {2, 3, Owner::Leader, Cost(), Cost()},
                  {0, 3, Owner::Follower, Cost(), Cost()}};
    FollowerOutcome out = solve_follower_strong_dag(inst, {0, 2});
    CHECK(out.status == SolveStatus::Infeasible);
    CHECK(out.reason == InfeasibleReason::EmptySegment);
    // taking the full chain closes every gap
    out = solve_follower_strong_dag(inst, {0, 1, 2});
    REQUIRE(out.status == SolveStatus::Optimal);
    CHECK(out.response.path == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("strong dag completion matches the exact search on random dags") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        RandomInstanceParams p;
        p.n = 3 + static_cast<int>(seed % 6);
        p.dag = true;
        p.seed = seed;
        BilevelInstance inst = random_instance(p);
        auto leaders = inst.leader_edge_ids();
        if (leaders.size() > 6) continue;
        for (std::uint64_t mask = 0; mask < (1ull << leaders.size()); ++mask) {
            LeaderChoice x;
            for (size_t i = 0; i < leaders.size(); ++i)
                if (mask >> i & 1) x.push_back(leaders[i]);
            FollowerOutcome a = solve_follower_strong_dag(inst, x);
            FollowerOutcome b = solve_follower_strong_exact(inst, x);
            REQUIRE(a.status == b.status);
            if (a.status == SolveStatus::Optimal) {
                REQUIRE(a.value == b.value);
                CHECK(inst.follower_cost(a.response.edges) == a.value.primary);
                CHECK(inst.leader_cost(a.response.edges) == a.value.secondary);
            }
        }
    }
}

TEST_CASE("exact strong and weak completions match the path-scanning oracle") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        RandomInstanceParams p;
        p.n = 3 + static_cast<int>(seed % 5);
        p.directed = seed % 2 == 0;
        p.seed = seed + 1000;
        BilevelInstance inst = random_instance(p);
        auto leaders = inst.leader_edge_ids();
        if (leaders.size() > 5) continue;
        for (std::uint64_t mask = 0; mask < (1ull << leaders.size()); ++mask) {
            LeaderChoice x;
            for (size_t i = 0; i < leaders.size(); ++i)
                if (mask >> i & 1) x.push_back(leaders[i]);
            for (Variant variant : {Variant::Weak, Variant::Strong}) {
                FollowerOutcome got =
                    variant == Variant::Weak
                        ? solve_follower_weak(inst, x)
                        : solve_follower_strong_exact(inst, x);
                FollowerOutcome want = oracle_follower(inst, x, variant);
                REQUIRE(got.status == want.status);
                if (got.status == SolveStatus::Optimal)
                    REQUIRE(got.value == want.value);
            }
        }
    }
}
