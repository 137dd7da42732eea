#ifndef BSP_KCYCLE_HPP
#define BSP_KCYCLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsp/cost.hpp"

namespace bsp {

// Shortest-k-cycle instance: undirected weighted graph plus a required set
// K of vertices (and optionally edges, which normalization turns into
// midpoint vertices). A cycle must be simple and have at least 3 vertices.
struct KCycleInstance {
    struct WeightedEdge {
        int u = 0;
        int v = 0;
        Cost w;
    };

    int n = 0;
    std::vector<WeightedEdge> edges;
    std::vector<int> required_vertices;
    std::vector<int> required_edges;   // edge ids, resolved by normalization
    std::optional<Cost> threshold;
};

// Replaces each required edge by two edges through a fresh midpoint vertex
// that joins the required vertex set. Midpoints are appended in
// required-edge order starting at id n; the weight split is (w, 0) with the
// first half on the edge toward the original u endpoint.
KCycleInstance normalize_required_edges(const KCycleInstance& inst);

struct KCycleSolution {
    Cost weight;
    std::vector<int> cycle;   // canonical: smallest vertex first, smaller
                              // second vertex fixes the direction
};

// Exact minimum-weight simple cycle through all required vertices, by
// exhaustive enumeration. nullopt when no simple cycle covers K.
std::optional<KCycleSolution> solve_kcycle_exact(const KCycleInstance& inst);

// True iff a qualifying cycle of weight <= threshold exists. Throws when
// the instance carries no threshold.
bool decide_kcycle(const KCycleInstance& inst);

// Text format:
//   kcycle
//   vertices <n>
//   required <id> ...
//   edge <u> <v> <w>
//   threshold <T>        (optional)
KCycleInstance parse_kcycle(const std::string& text);
std::string serialize_kcycle(const KCycleInstance& inst);

}  // namespace bsp

#endif
