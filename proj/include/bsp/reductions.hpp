#ifndef BSP_REDUCTIONS_HPP
#define BSP_REDUCTIONS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsp/instance.hpp"
#include "bsp/kcycle.hpp"
#include "bsp/simple_graph.hpp"

namespace bsp {

// --- undirected -> directed ------------------------------------------------

struct UndirectedToDirectedResult {
    BilevelInstance inst;
    std::vector<int> edge_map;   // original edge id -> inheriting middle arc id
};

// Replaces each undirected edge {u,v} by two fresh vertices w, w' and the
// five arcs (u,w), (v,w), (w,w'), (w',u), (w',v). The middle arc inherits
// owner and costs; the other four are zero-cost follower arcs. Preserves
// both the weak and the strong optimum exactly.
UndirectedToDirectedResult undirected_to_directed(const BilevelInstance& inst);

// --- vertex fixing -----------------------------------------------------------

struct VertexFixingResult {
    BilevelInstance inst;    // source s, sink = the fresh t'
    Cost big_m;              // threshold separating "fixing worked" outcomes
    Cost eps;
    int t_prime = 0;
    std::vector<int> w_sorted;       // the fixed vertices, ascending
    std::vector<int> tau;            // new edge id -> original edge id, -1 gadget
    std::vector<int> pw_edges;       // leader edge ids of all paths P_w, sorted
};

// Forces every cheap optimal solution path to visit all of W: each w in W
// becomes a 3-vertex leader path P_w = w1-w2-w3, incident edges are copied
// to w1 and w3, "dangerous" follower edges {w2,t}, {w2,t'} of leader cost M
// punish any leader who leaves a P_w open, and the bridge {t,t'} carries
// follower cost eps. Guarantees:
//   (i)  OPT_s(result) >= M  iff  no s-t path of inst visits all of W,
//   (ii) otherwise OPT_s(result) equals the W-constrained optimum of inst,
//        and corresponding follower optima differ by exactly eps,
//   (iii) at most 2|W| + 4|E_leader| leader edges.
// s and t are dropped from W; eps must be positive.
VertexFixingResult vertex_fixing(const BilevelInstance& inst,
                                 std::vector<int> w, const Cost& eps);

// --- classic problems -> BSP -------------------------------------------------

struct IndependentSetReduction {
    BilevelInstance inst;
    Cost threshold;          // 3n - k
};

enum class IsOrientation { Undirected, Dag };

// Chain-of-blocks gadget: OPT_w(inst) <= 3n - k iff G has an independent
// set of size k. Each block is a leader chain of total cost 2 (against a
// follower bypass of cost 3); shortcut edges between blocks carry leader
// cost M = 3n + 1 and attach to interior chain vertices, so they are only
// reachable through selected blocks.
IndependentSetReduction independent_set_to_weak(const SimpleGraph& g, int k,
                                                IsOrientation orientation);

struct HamPathReduction {
    BilevelInstance inst;
    LeaderChoice x;          // the unique optimal leader choice
    Cost eps;                // follower optimum <= eps iff Ham s-t path exists
};

// Complete graph with follower cost 1 on non-edges of G, then vertex fixing
// of V \ {s,t}: the fixed follower problem looks for a Hamiltonian s-t path
// using as few non-edges as possible.
HamPathReduction hampath_to_follower_strong(const SimpleGraph& g, int s, int t,
                                            const Cost& eps);

// Vertex-disjoint-paths gadget: one leader arc (t1,s2), one expensive
// follower bypass (s1,t2); OPT_s = 0 iff disjoint s1-t1 and s2-t2 paths
// exist, and OPT_s = 1 otherwise. Throws when either gadget arc is already
// present (subdivide it first).
BilevelInstance vdp_to_strong_dir(const Digraph& g, int s1, int t1, int s2,
                                  int t2);

struct KCycleReduction {
    BilevelInstance inst;
    Cost big_m;              // OPT_s < M iff a qualifying cycle exists;
                             // then OPT_s equals the minimum cycle weight
    std::optional<Cost> threshold;   // forwarded from the input, if any
};

// Twin-vertex split of one required vertex plus vertex fixing of the rest;
// uses at most 2|K| - 2 leader edges. Requires |K| >= 3.
KCycleReduction kcycle_to_strong_undir(const KCycleInstance& inst);

// --- Min-Max-Ham -------------------------------------------------------------

struct MinMaxHamInstance {
    SimpleGraph g;
    int s = 0;
    int t = 0;
    int v = 0;                         // degree-3 vertex
    std::pair<int, int> e_tilde;       // edge at v that must be avoidable
    std::vector<std::pair<int, int>> b;   // leader-candidate edges, disjoint
                                          // from the edges at v

    void validate() const;   // throws std::invalid_argument
};

// Theorem-3 gadget: E_leader := B, the three edges at v get costs
// (c,d) = (0,1), (0,1), (1,0) with the 1-leader-cost on e_tilde, everything
// else is free, then vertex fixing of all vertices with eps = 1.
// OPT_s(result) = 0 iff mmh is a yes-instance, and >= 1 otherwise.
VertexFixingResult minmaxham_to_strong_undir(const MinMaxHamInstance& mmh);

// --- 3-DNF -> 3-CNF equivalence formula ---------------------------------------

struct Literal {
    std::string var;
    bool negated = false;
};

using Assignment = std::map<std::string, bool>;

struct DnfFormula {
    std::vector<std::vector<Literal>> conjunctions;
};

struct CnfFormula {
    std::vector<std::vector<Literal>> clauses;
};

bool eval_literal(const Literal& lit, const Assignment& a);
bool eval_dnf(const DnfFormula& f, const Assignment& a);
bool eval_cnf(const CnfFormula& f, const Assignment& a);

struct CnfEquivalenceResult {
    CnfFormula phi2;
    std::vector<std::string> aux_vars;   // the A pool, in introduction order
    std::string z = "z";
};

// Builds phi2 over the original variables plus A and z such that an
// assignment satisfies phi2 iff z carries the value of NOT phi and the A
// variables record the per-clause evaluation chain. Conjunctions shorter
// than 3 literals are padded by repeating their last literal; conjunctions
// wider than 3 are rejected.
CnfEquivalenceResult cnf_equivalence_transform(const DnfFormula& phi);

}  // namespace bsp

#endif
