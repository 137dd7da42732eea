#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bsp/cost.hpp"
#include "bsp/instance.hpp"
#include "bsp/oracle.hpp"
#include "bsp/paths.hpp"

using namespace bsp;

TEST_CASE("cost arithmetic stays in reduced form") {
    Cost a(1, 3), b(1, 6);
    Cost sum = a + b;
    CHECK(sum == Cost(1, 2));
    CHECK(sum.num() == 1);
    CHECK(sum.den() == 2);
    CHECK((a * b) == Cost(1, 18));
    CHECK(Cost(4, 2) == Cost(2));
    CHECK(Cost(2).is_integer());
    CHECK(Cost().is_zero());
    CHECK(Cost(7, 3).ceil() == Cost(3));
    CHECK(Cost(6, 3).ceil() == Cost(2));
}

TEST_CASE("cost ordering is exact") {
    CHECK(Cost(1, 3) < Cost(1, 2));
    CHECK(Cost(2, 3) > Cost(1, 2));
    CHECK(Cost(333333333, 1000000000) < Cost(1, 3));
}

TEST_CASE("cost parsing") {
    CHECK(Cost::parse("5") == Cost(5));
    CHECK(Cost::parse("3/6") == Cost(1, 2));
    CHECK(Cost::parse("0") == Cost());
    CHECK(!Cost::parse("-1").has_value());
    CHECK(!Cost::parse("1/0").has_value());
    CHECK(!Cost::parse("x").has_value());
    CHECK(Cost(7, 2).str() == "7/2");
    CHECK(Cost(4).str() == "4");
}

TEST_CASE("lex values compare follower cost first") {
    LexValue a{Cost(1), Cost(100)};
    LexValue b{Cost(2), Cost(0)};
    CHECK(a < b);
    LexValue c{Cost(1), Cost(99)};
    CHECK(c < a);
    CHECK((a + b) == LexValue{Cost(3), Cost(100)});
}

TEST_CASE("instance round trip through the text format") {
    BilevelInstance inst;
    inst.directed = true;
    inst.n = 4;
    inst.s = 0;
    inst.t = 3;
    inst.edges = {{0, 1, Owner::Leader, Cost(1, 2), Cost()},
                  {1, 3, Owner::Follower, Cost(0), Cost(2)},
                  {0, 3, Owner::Follower, Cost(3), Cost(1)}};
    BilevelInstance back = parse_instance(serialize_instance(inst));
    CHECK(back.directed == inst.directed);
    CHECK(back.n == inst.n);
    CHECK(back.s == inst.s);
    CHECK(back.t == inst.t);
    REQUIRE(back.edges.size() == inst.edges.size());
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        CHECK(back.edges[i].u == inst.edges[i].u);
        CHECK(back.edges[i].v == inst.edges[i].v);
        CHECK(back.edges[i].owner == inst.edges[i].owner);
        CHECK(back.edges[i].c == inst.edges[i].c);
        CHECK(back.edges[i].d == inst.edges[i].d);
    }
}

TEST_CASE("parser rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_instance("nope\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("bsp undirected\nvertices 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_instance("bsp undirected\nvertices 2\ns 0\nt 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("bsp undirected\nvertices 2\ns 0\nt 1\n"
                                   "edge 0 0 F 1 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("bsp undirected\nvertices 2\ns 0\nt 1\n"
                                   "edge 0 1 F 1 1\nedge 1 0 F 2 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("bsp undirected\nvertices 2\ns 0\nt 1\n"
                                   "edge 0 1 F -1 0\n"),
                    ParseError);
    try {
        parse_instance("bsp undirected\nvertices 2\ns 0\nt 1\nedge 0 1 Q 0 0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    BilevelInstance inst = parse_instance(
        "# header comment\nbsp undirected\n\nvertices 2\ns 0\nt 1\n"
        "edge 0 1 F 1/2 0 # inline\n");
    CHECK(inst.n == 2);
    REQUIRE(inst.edges.size() == 1);
    CHECK(inst.edges[0].c == Cost(1, 2));
}

TEST_CASE("dag detection") {
    BilevelInstance inst;
    inst.directed = true;
    inst.n = 3;
    inst.s = 0;
    inst.t = 2;
    inst.edges = {{0, 1, Owner::Follower, Cost(), Cost()},
                  {1, 2, Owner::Follower, Cost(), Cost()}};
    CHECK(inst.is_dag());
    inst.edges.push_back({2, 0, Owner::Follower, Cost(), Cost()});
    CHECK(!inst.is_dag());
    inst.directed = false;
    CHECK(!inst.is_dag());
}

TEST_CASE("path enumeration is exhaustive, simple and lex ordered") {
    BilevelInstance inst;
    inst.n = 4;
    inst.s = 0;
    inst.t = 3;
    inst.edges = {{0, 1, Owner::Follower, Cost(), Cost()},
                  {0, 2, Owner::Follower, Cost(), Cost()},
                  {1, 2, Owner::Follower, Cost(), Cost()},
                  {1, 3, Owner::Follower, Cost(), Cost()},
                  {2, 3, Owner::Follower, Cost(), Cost()}};
    std::vector<int> all = {0, 1, 2, 3, 4};
    auto paths = enumerate_st_paths(inst, all);
    REQUIRE(paths.size() == 4);
    CHECK(paths[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(paths[1].vertices == std::vector<int>{0, 1, 3});
    CHECK(paths[2].vertices == std::vector<int>{0, 2, 1, 3});
    CHECK(paths[3].vertices == std::vector<int>{0, 2, 3});
    CHECK(paths[1].edges == std::vector<int>{0, 3});
    CHECK(has_st_path(inst, all));
    CHECK(!has_st_path(inst, {0}));
    CHECK(has_path(inst, {2}, 2, 1));
}

TEST_CASE("lex shortest path minimizes (d, c) then the vertex sequence") {
    BilevelInstance inst;
    inst.n = 4;
    inst.s = 0;
    inst.t = 3;
    // two d-optimal routes, one with smaller c; plus a cheap-but-long-d route
    inst.edges = {{0, 1, Owner::Follower, Cost(5), Cost(1)},
                  {1, 3, Owner::Follower, Cost(5), Cost(0)},
                  {0, 2, Owner::Follower, Cost(1), Cost(1)},
                  {2, 3, Owner::Follower, Cost(1), Cost(0)},
                  {0, 3, Owner::Follower, Cost(0), Cost(9)}};
    std::vector<int> all = {0, 1, 2, 3, 4};
    auto weight = [&](int e) {
        return LexValue{inst.edges[e].d, inst.edges[e].c};
    };
    auto res = lex_shortest_path(inst, all, weight, 0, 3);
    REQUIRE(res.has_value());
    CHECK(res->value.primary == Cost(1));
    CHECK(res->value.secondary == Cost(2));
    CHECK(res->path.vertices == std::vector<int>{0, 2, 3});

    // exact tie in (d, c): the lexicographically smaller sequence wins
    inst.edges[2].c = Cost(5);
    inst.edges[3].c = Cost(5);
    res = lex_shortest_path(inst, all, weight, 0, 3);
    REQUIRE(res.has_value());
    CHECK(res->path.vertices == std::vector<int>{0, 1, 3});

    CHECK(!lex_shortest_path(inst, {0}, weight, 0, 3).has_value());
    auto trivial = lex_shortest_path(inst, all, weight, 2, 2);
    REQUIRE(trivial.has_value());
    CHECK(trivial->value == LexValue{});
    CHECK(trivial->path.vertices == std::vector<int>{2});
}

TEST_CASE("chain order sorts by reachability and detects incomparability") {
    BilevelInstance inst;
    inst.directed = true;
    inst.n = 6;
    inst.s = 0;
    inst.t = 5;
    inst.edges = {{0, 1, Owner::Leader, Cost(), Cost()},
                  {1, 2, Owner::Follower, Cost(), Cost()},
                  {2, 3, Owner::Leader, Cost(), Cost()},
                  {3, 4, Owner::Follower, Cost(), Cost()},
                  {4, 5, Owner::Leader, Cost(), Cost()},
                  {0, 3, Owner::Leader, Cost(), Cost()}};
    auto order = chain_order(inst, {4, 0, 2});
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{0, 2, 4});
    // edges 2 (2->3) and 5 (0->3) cannot follow one another
    CHECK(!chain_order(inst, {2, 5}).has_value());
    CHECK(chain_order(inst, {}).has_value());
    inst.directed = false;
    CHECK_THROWS_AS(chain_order(inst, {0}), std::invalid_argument);
}

TEST_CASE("random instances are reproducible and always feasible") {
    RandomInstanceParams p;
    p.n = 7;
    p.seed = 42;
    BilevelInstance a = random_instance(p);
    BilevelInstance b = random_instance(p);
    CHECK(serialize_instance(a) == serialize_instance(b));
    p.seed = 43;
    BilevelInstance c = random_instance(p);
    CHECK(serialize_instance(a) != serialize_instance(c));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (bool dag : {false, true}) {
            RandomInstanceParams q;
            q.n = 5;
            q.seed = seed;
            q.dag = dag;
            BilevelInstance inst = random_instance(q);
            inst.validate();
            std::vector<int> all(inst.edge_count());
            for (int i = 0; i < inst.edge_count(); ++i) all[i] = i;
            CHECK(has_st_path(inst, all));
            if (dag) CHECK(inst.is_dag());
        }
    }
}
