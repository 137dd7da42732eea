#ifndef BSP_FOLLOWER_HPP
#define BSP_FOLLOWER_HPP

#include "bsp/instance.hpp"
#include "bsp/paths.hpp"

namespace bsp {

enum class InfeasibleReason {
    None,
    NoPath,         // no s-t path in the allowed structure
    NotAChain,      // strong DAG variant: X is not a chain
    EmptySegment,   // strong DAG variant: some follower segment has no path
};

struct FollowerOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    InfeasibleReason reason = InfeasibleReason::NoPath;
    LexValue value;           // (d(Y), c(Y))
    FollowerResponse response;

    static FollowerOutcome infeasible(InfeasibleReason r) {
        FollowerOutcome out;
        out.reason = r;
        return out;
    }
};

// Weak path completion: the follower looks for any s-t path within X u Ef
// and pays only for the follower edges on it. Solved as one lexicographic
// shortest path query.
FollowerOutcome solve_follower_weak(const BilevelInstance& inst,
                                    const LeaderChoice& x);

// Strong path completion on a DAG: chain-orders X, then solves each
// follower segment between consecutive leader edges by a lexicographic
// shortest path restricted to Ef. The single-leader-edge-at-s/t
// normalization is applied internally, so any DAG instance is accepted.
FollowerOutcome solve_follower_strong_dag(const BilevelInstance& inst,
                                          const LeaderChoice& x);

// Strong path completion on an arbitrary instance: pruned depth-first
// search over simple s-t paths in X u Ef that must cover all of X.
FollowerOutcome solve_follower_strong_exact(const BilevelInstance& inst,
                                            const LeaderChoice& x);

}  // namespace bsp

#endif
