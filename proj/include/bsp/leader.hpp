#ifndef BSP_LEADER_HPP
#define BSP_LEADER_HPP

#include <functional>

#include "bsp/follower.hpp"
#include "bsp/instance.hpp"
#include "bsp/kcycle.hpp"

namespace bsp {

// Exact weak-variant leader solver: enumerates all X subsets of the leader
// edges and queries the polynomial weak follower for each.
SolveOutcome solve_leader_weak_enum(const BilevelInstance& inst);

// Exact strong-variant leader solver on arbitrary instances, by subset
// enumeration over the exact strong follower.
SolveOutcome solve_leader_strong_exact(const BilevelInstance& inst);

// Polynomial strong-variant solver for directed acyclic instances:
// pairwise follower segment costs plus a dynamic program over the leader
// edges in chain-compatible order.
SolveOutcome solve_leader_strong_dag(const BilevelInstance& inst);

// Oracle signature for a minimum-weight k-cycle solver.
using KCycleOracle =
    std::function<std::optional<KCycleSolution>(const KCycleInstance&)>;

// Strong-variant solver for undirected instances with few leader edges,
// routed through a shortest-k-cycle oracle: per X, a dummy vertex closes
// s-t paths into cycles and the combined weight M*d + c encodes the
// follower's and the leader's cost in one integer.
SolveOutcome solve_leader_strong_undir_via_kcycle(const BilevelInstance& inst,
                                                  const KCycleOracle& oracle);

inline SolveOutcome solve_leader_strong_undir_via_kcycle(
    const BilevelInstance& inst) {
    return solve_leader_strong_undir_via_kcycle(
        inst, [](const KCycleInstance& k) { return solve_kcycle_exact(k); });
}

}  // namespace bsp

#endif
