#ifndef BSP_ORACLE_HPP
#define BSP_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bsp/follower.hpp"
#include "bsp/instance.hpp"
#include "bsp/reductions.hpp"
#include "bsp/simple_graph.hpp"

namespace bsp {

enum class Variant { Weak, Strong };

// Literal-semantics reference solver: enumerates every simple s-t path,
// groups paths by the set of leader edges they use, and evaluates all
// leader choices X from those groups (strong: the path's leader set must
// equal X; weak: it must be a subset of X). Intended for small instances;
// the weak variant requires |E_leader| <= 18.
SolveOutcome brute_force_bilevel(const BilevelInstance& inst, Variant variant);

// Strong reference solver with the extra constraint that the chosen path
// visits every vertex of w.
SolveOutcome brute_force_bilevel_strong_through(const BilevelInstance& inst,
                                                const std::vector<int>& w);

// Per-X follower reference: scans enumerate_st_paths over the allowed
// structure and minimizes (d, c) directly.
FollowerOutcome oracle_follower(const BilevelInstance& inst,
                                const LeaderChoice& x, Variant variant);

struct MinMaxHamOutcome {
    bool yes = false;
    std::vector<std::pair<int, int>> b_prime;   // witness when yes
};

// Exhaustive Min-Max-Ham decision: enumerates every Hamiltonian s-t path,
// groups them by their B-intersection, and looks for a group none of whose
// paths uses e_tilde.
MinMaxHamOutcome solve_minmaxham_exact(const MinMaxHamInstance& mmh);

int max_independent_set(const SimpleGraph& g);
bool hamiltonian_st_path(const SimpleGraph& g, int s, int t);
bool two_disjoint_paths(const Digraph& g, int s1, int t1, int s2, int t2);

struct RandomInstanceParams {
    int n = 6;
    int percent_edge = 50;     // inclusion probability per vertex pair
    int percent_leader = 30;   // leader ownership probability per edge
    int max_cost = 5;          // costs drawn uniformly from 0..max_cost
    bool directed = false;
    bool dag = false;          // implies directed; orients along a random
                               // vertex permutation
    std::uint64_t seed = 0;
};

// Reproducible random instance with a guaranteed s-t path: after 100
// resampling attempts a direct follower s-t edge is added.
BilevelInstance random_instance(const RandomInstanceParams& params);

}  // namespace bsp

#endif
