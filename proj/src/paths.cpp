#include "bsp/paths.hpp"

#include <algorithm>
#include <queue>

namespace bsp {

namespace {

// Adjacency over a restricted edge set, neighbors sorted for determinism.
std::vector<std::vector<std::pair<int, int>>> build_adjacency(
    const BilevelInstance& inst, const std::vector<int>& allowed) {
    std::vector<std::vector<std::pair<int, int>>> adj(inst.n);
    for (int id : allowed) {
        const Edge& e = inst.edges[id];
        adj[e.u].emplace_back(e.v, id);
        if (!inst.directed) adj[e.v].emplace_back(e.u, id);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

}  // namespace

std::vector<int> Path::sorted_edges() const {
    std::vector<int> out = edges;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Path::leader_edges(const BilevelInstance& inst) const {
    std::vector<int> out;
    for (int id : edges)
        if (inst.edges[id].owner == Owner::Leader) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Path::follower_edges(const BilevelInstance& inst) const {
    std::vector<int> out;
    for (int id : edges)
        if (inst.edges[id].owner == Owner::Follower) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_path(const BilevelInstance& inst, const std::vector<int>& allowed,
              int from, int to) {
    if (from == to) return true;
    auto adj = build_adjacency(inst, allowed);
    std::vector<char> visited(inst.n, 0);
    std::vector<int> stack = {from};
    visited[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, id] : adj[v]) {
            if (visited[w]) continue;
            if (w == to) return true;
            visited[w] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

bool has_st_path(const BilevelInstance& inst, const std::vector<int>& allowed) {
    return has_path(inst, allowed, inst.s, inst.t);
}

void for_each_path(const BilevelInstance& inst,
                   const std::vector<int>& allowed, int from, int to,
                   const std::function<void(const Path&)>& visit) {
    auto adj = build_adjacency(inst, allowed);
    std::vector<char> visited(inst.n, 0);
    Path current;
    current.vertices.push_back(from);
    visited[from] = 1;

    // Neighbors are sorted, so DFS emits paths in lexicographic order of
    // their vertex sequences.
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == to) {
            visit(current);
            return;
        }
        for (auto [w, id] : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            current.vertices.push_back(w);
            current.edges.push_back(id);
            self(self, w);
            current.vertices.pop_back();
            current.edges.pop_back();
            visited[w] = 0;
        }
    };
    dfs(dfs, from);
}

std::vector<Path> enumerate_paths(const BilevelInstance& inst,
                                  const std::vector<int>& allowed,
                                  int from, int to) {
    std::vector<Path> result;
    for_each_path(inst, allowed, from, to,
                  [&](const Path& p) { result.push_back(p); });
    return result;
}

std::vector<Path> enumerate_st_paths(const BilevelInstance& inst,
                                     const std::vector<int>& allowed) {
    return enumerate_paths(inst, allowed, inst.s, inst.t);
}

std::optional<std::vector<int>> chain_order(const BilevelInstance& inst,
                                            const std::vector<int>& x) {
    if (!inst.directed) throw std::invalid_argument("chain_order needs a directed instance");

    // Topological order; also detects cycles.
    std::vector<int> indeg(inst.n, 0);
    std::vector<std::vector<int>> adj(inst.n);
    for (const Edge& e : inst.edges) {
        adj[e.u].push_back(e.v);
        ++indeg[e.v];
    }
    std::vector<int> topo_pos(inst.n, -1);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < inst.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    int next = 0;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        topo_pos[v] = next++;
        for (int w : adj[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (next != inst.n) throw std::invalid_argument("instance has a directed cycle");

    std::vector<int> order = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = inst.edges[a];
        const Edge& eb = inst.edges[b];
        return std::tuple(topo_pos[ea.u], topo_pos[ea.v], a) <
               std::tuple(topo_pos[eb.u], topo_pos[eb.v], b);
    });

    std::vector<int> all_ids(inst.edge_count());
    for (int i = 0; i < inst.edge_count(); ++i) all_ids[i] = i;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        int head = inst.edges[order[i]].v;
        int tail = inst.edges[order[i + 1]].u;
        if (!has_path(inst, all_ids, head, tail)) return std::nullopt;
    }
    return order;
}

std::optional<LexPathResult> lex_shortest_path(
    const BilevelInstance& inst, const std::vector<int>& allowed,
    const std::function<LexValue(int)>& weight, int from, int to) {
    auto adj = build_adjacency(inst, allowed);

    // Dijkstra over labels (value, vertex sequence). The label order is
    // stable under extension, so each vertex can be finalized once with the
    // globally smallest label; predecessor chains are automatically simple.
    struct Label {
        LexValue value;
        Path path;
        bool operator>(const Label& o) const {
            if (auto cmp = value <=> o.value; cmp != 0) return cmp > 0;
            return path.vertices > o.path.vertices;
        }
    };
    std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
    std::vector<char> done(inst.n, 0);
    Label start;
    start.path.vertices.push_back(from);
    queue.push(start);
    while (!queue.empty()) {
        Label cur = queue.top();
        queue.pop();
        int v = cur.path.vertices.back();
        if (done[v]) continue;
        done[v] = 1;
        if (v == to) return LexPathResult{cur.value, cur.path};
        for (auto [w, id] : adj[v]) {
            if (done[w]) continue;
            Label nxt = cur;
            nxt.value += weight(id);
            nxt.path.vertices.push_back(w);
            nxt.path.edges.push_back(id);
            queue.push(std::move(nxt));
        }
    }
    return std::nullopt;
}

}  // namespace bsp
