#ifndef BSP_SIMPLE_GRAPH_HPP
#define BSP_SIMPLE_GRAPH_HPP

#include <algorithm>
#include <utility>
#include <vector>

namespace bsp {

// Plain undirected graph, input side of the reduction builders.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // unordered pairs

    bool has_edge(int u, int v) const {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }
    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (auto [a, b] : edges) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Plain directed graph.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;   // ordered pairs

    bool has_arc(int u, int v) const {
        for (auto [a, b] : arcs)
            if (a == u && b == v) return true;
        return false;
    }
};

}  // namespace bsp

#endif
