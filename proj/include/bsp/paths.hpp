#ifndef BSP_PATHS_HPP
#define BSP_PATHS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bsp/instance.hpp"

namespace bsp {

// An s-t path as both its vertex sequence and its edge id sequence
// (edges[i] connects vertices[i] and vertices[i+1]).
struct Path {
    std::vector<int> vertices;
    std::vector<int> edges;

    std::vector<int> sorted_edges() const;
    std::vector<int> leader_edges(const BilevelInstance& inst) const;
    std::vector<int> follower_edges(const BilevelInstance& inst) const;
};

// True iff the subgraph on the allowed edges contains an s-t path.
bool has_st_path(const BilevelInstance& inst, const std::vector<int>& allowed);

// Reachability between arbitrary endpoints over the allowed edges.
bool has_path(const BilevelInstance& inst, const std::vector<int>& allowed,
              int from, int to);

// Every simple s-t path in the allowed subgraph, each exactly once, in
// lexicographic order of the vertex sequence. Empty when no path exists.
std::vector<Path> enumerate_st_paths(const BilevelInstance& inst,
                                     const std::vector<int>& allowed);

// As above but between arbitrary endpoints.
std::vector<Path> enumerate_paths(const BilevelInstance& inst,
                                  const std::vector<int>& allowed,
                                  int from, int to);

// Streaming variant: visits every simple path in the same order without
// materializing the whole set. The Path reference is reused between calls.
void for_each_path(const BilevelInstance& inst,
                   const std::vector<int>& allowed, int from, int to,
                   const std::function<void(const Path&)>& visit);

// Orders the edge set X as e1 < e2 < ... < ek under the DAG reachability
// relation (paths may use any edge of the instance), or nullopt when two
// members are incomparable. Throws std::invalid_argument unless the
// instance is directed acyclic.
std::optional<std::vector<int>> chain_order(const BilevelInstance& inst,
                                            const std::vector<int>& x);

struct LexPathResult {
    LexValue value;
    Path path;
};

// Lexicographic shortest path over the allowed edges: minimizes the
// componentwise sum of the edge weights under lexicographic comparison,
// breaking remaining ties toward the lexicographically smallest vertex
// sequence. nullopt when `to` is unreachable. from == to yields the empty
// path of value (0, 0).
std::optional<LexPathResult> lex_shortest_path(
    const BilevelInstance& inst, const std::vector<int>& allowed,
    const std::function<LexValue(int)>& weight, int from, int to);

}  // namespace bsp

#endif
