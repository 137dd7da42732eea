#ifndef BSP_INSTANCE_HPP
#define BSP_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bsp/cost.hpp"

namespace bsp {

enum class Owner { Leader, Follower };

// An edge of a bilevel instance. The id is the index into
// BilevelInstance::edges. For undirected instances (u, v) is an unordered
// pair; for directed instances it is the arc u -> v.
struct Edge {
    int u = 0;
    int v = 0;
    Owner owner = Owner::Follower;
    Cost c;   // leader's cost
    Cost d;   // follower's cost (ignored on leader edges: the follower only
              // ever pays for their own edges)
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

// Graph + leader/follower edge partition + two cost functions + terminals.
// Immutable after construction; every solver and reduction consumes or
// emits one of these.
struct BilevelInstance {
    bool directed = false;
    int n = 0;
    std::vector<Edge> edges;
    int s = 0;
    int t = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> leader_edge_ids() const;
    std::vector<int> follower_edge_ids() const;

    // Sum of leader costs over an edge id set.
    Cost leader_cost(const std::vector<int>& ids) const;
    // Sum of follower costs over an edge id set.
    Cost follower_cost(const std::vector<int>& ids) const;

    // Throws std::invalid_argument on a broken invariant (self loop,
    // parallel edge, endpoint out of range, s == t).
    void validate() const;

    // True iff directed and free of directed cycles.
    bool is_dag() const;
};

// Subset of leader edge ids, sorted ascending.
using LeaderChoice = std::vector<int>;

// Follower edge ids plus the witness s-t path they certify.
struct FollowerResponse {
    std::vector<int> edges;     // follower edge ids, sorted
    std::vector<int> path;      // witness vertex sequence s .. t
};

enum class SolveStatus { Optimal, Infeasible };

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    Cost leader_value;      // c(X u Y)
    Cost follower_value;    // d(Y)
    LeaderChoice x;
    FollowerResponse y;

    static SolveOutcome infeasible() { return SolveOutcome{}; }
};

// Parses the instance file format:
//   bsp directed | bsp undirected
//   vertices <n>
//   s <id>
//   t <id>
//   edge <u> <v> <L|F> <c> <d>
// '#' starts a comment; edge ids are assigned in file order from 0.
// Throws ParseError with the offending line number.
BilevelInstance parse_instance(const std::string& text);

// Inverse of parse_instance, canonical form (no comments, one record per
// line). parse_instance(serialize_instance(i)) reproduces i exactly.
std::string serialize_instance(const BilevelInstance& inst);

}  // namespace bsp

#endif
