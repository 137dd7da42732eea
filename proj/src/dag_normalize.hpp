#ifndef BSP_DAG_NORMALIZE_HPP
#define BSP_DAG_NORMALIZE_HPP

#include "bsp/instance.hpp"

namespace bsp::detail {

// Augmented form used by the DAG solvers: a fresh source s' and sink t'
// joined to the original terminals by zero-cost leader edges, so every
// s'-t'-path starts with e_s and ends with e_t. Applied unconditionally;
// the augmentation is a no-op in terms of solutions.
struct DagNormalized {
    BilevelInstance inst;   // n+2 vertices; original edge ids preserved
    int e_s = -1;           // id of (s', s)
    int e_t = -1;           // id of (t, t')
};

inline DagNormalized dag_normalize(const BilevelInstance& original) {
    if (!original.is_dag())
        throw std::invalid_argument("instance must be directed acyclic");
    DagNormalized out;
    out.inst = original;
    int sp = original.n;
    int tp = original.n + 1;
    out.inst.n += 2;
    Edge es;
    es.u = sp;
    es.v = original.s;
    es.owner = Owner::Leader;
    Edge et;
    et.u = original.t;
    et.v = tp;
    et.owner = Owner::Leader;
    out.e_s = out.inst.edge_count();
    out.inst.edges.push_back(es);
    out.e_t = out.inst.edge_count();
    out.inst.edges.push_back(et);
    out.inst.s = sp;
    out.inst.t = tp;
    return out;
}

}  // namespace bsp::detail

#endif
