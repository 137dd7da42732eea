#include "bsp/follower.hpp"

#include <algorithm>

#include "dag_normalize.hpp"

namespace bsp {

namespace {

std::vector<int> allowed_with_follower(const BilevelInstance& inst,
                                       const LeaderChoice& x) {
    std::vector<int> allowed = x;
    for (int i = 0; i < inst.edge_count(); ++i)
        if (inst.edges[i].owner == Owner::Follower) allowed.push_back(i);
    std::sort(allowed.begin(), allowed.end());
    return allowed;
}

void check_leader_choice(const BilevelInstance& inst, const LeaderChoice& x) {
    for (int id : x) {
        if (id < 0 || id >= inst.edge_count())
            throw std::invalid_argument("leader choice edge id out of range");
        if (inst.edges[id].owner != Owner::Leader)
            throw std::invalid_argument("leader choice contains a follower edge");
    }
}

}  // namespace

FollowerOutcome solve_follower_weak(const BilevelInstance& inst,
                                    const LeaderChoice& x) {
    check_leader_choice(inst, x);
    auto allowed = allowed_with_follower(inst, x);
    auto weight = [&](int id) -> LexValue {
        const Edge& e = inst.edges[id];
        if (e.owner == Owner::Follower) return {e.d, e.c};
        return {};
    };
    auto result = lex_shortest_path(inst, allowed, weight, inst.s, inst.t);
    if (!result) return FollowerOutcome::infeasible(InfeasibleReason::NoPath);
    FollowerOutcome out;
    out.status = SolveStatus::Optimal;
    out.reason = InfeasibleReason::None;
    out.value = result->value;
    out.response.edges = result->path.follower_edges(inst);
    out.response.path = result->path.vertices;
    return out;
}

FollowerOutcome solve_follower_strong_dag(const BilevelInstance& inst,
                                          const LeaderChoice& x) {
    check_leader_choice(inst, x);
    auto norm = detail::dag_normalize(inst);
    std::vector<int> chain_input = x;
    chain_input.push_back(norm.e_s);
    chain_input.push_back(norm.e_t);

    auto order = chain_order(norm.inst, chain_input);
    if (!order) return FollowerOutcome::infeasible(InfeasibleReason::NotAChain);
    if (order->front() != norm.e_s || order->back() != norm.e_t)
        return FollowerOutcome::infeasible(InfeasibleReason::NotAChain);

    auto follower_ids = norm.inst.follower_edge_ids();
    auto weight = [&](int id) -> LexValue {
        const Edge& e = norm.inst.edges[id];
        return {e.d, e.c};
    };

    FollowerOutcome out;
    out.status = SolveStatus::Optimal;
    out.reason = InfeasibleReason::None;
    out.response.path.push_back(inst.s);
    for (size_t i = 0; i + 1 < order->size(); ++i) {
        int head = norm.inst.edges[(*order)[i]].v;
        int tail = norm.inst.edges[(*order)[i + 1]].u;
        auto segment = lex_shortest_path(norm.inst, follower_ids, weight, head, tail);
        if (!segment)
            return FollowerOutcome::infeasible(InfeasibleReason::EmptySegment);
        out.value += segment->value;
        for (int id : segment->path.edges) out.response.edges.push_back(id);
        for (size_t j = 1; j < segment->path.vertices.size(); ++j)
            out.response.path.push_back(segment->path.vertices[j]);
        // traverse the next leader edge (skipping the artificial sink edge)
        if ((*order)[i + 1] != norm.e_t)
            out.response.path.push_back(norm.inst.edges[(*order)[i + 1]].v);
    }
    std::sort(out.response.edges.begin(), out.response.edges.end());
    return out;
}

FollowerOutcome solve_follower_strong_exact(const BilevelInstance& inst,
                                            const LeaderChoice& x) {
    check_leader_choice(inst, x);
    auto allowed = allowed_with_follower(inst, x);

    std::vector<std::vector<std::pair<int, int>>> adj(inst.n);
    for (int id : allowed) {
        const Edge& e = inst.edges[id];
        adj[e.u].emplace_back(e.v, id);
        if (!inst.directed) adj[e.v].emplace_back(e.u, id);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<char> in_x(inst.edge_count(), 0);
    for (int id : x) in_x[id] = 1;

    std::vector<char> visited(inst.n, 0);
    std::vector<int> path_vertices = {inst.s};
    std::vector<int> path_edges;
    size_t used_x = 0;

    bool found = false;
    LexValue best_value;
    FollowerResponse best_response;

    // A pending leader edge whose endpoint is already behind us can never be
    // placed on the path anymore.
    auto x_still_possible = [&](int head) {
        for (int id : x) {
            if (std::find(path_edges.begin(), path_edges.end(), id) != path_edges.end())
                continue;
            const Edge& e = inst.edges[id];
            if ((visited[e.u] && e.u != head) || (visited[e.v] && e.v != head))
                return false;
        }
        return true;
    };

    auto t_reachable = [&](int head) {
        if (head == inst.t) return true;
        std::vector<char> seen = visited;
        seen[head] = 1;
        std::vector<int> stack = {head};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : adj[v]) {
                if (seen[w]) continue;
                if (w == inst.t) return true;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return false;
    };

    auto dfs = [&](auto&& self, int v) -> void {
        if (v == inst.t) {
            if (used_x != x.size()) return;
            LexValue value;
            for (int id : path_edges) {
                const Edge& e = inst.edges[id];
                if (e.owner == Owner::Follower) value += LexValue{e.d, e.c};
            }
            // DFS order is lexicographic in the vertex sequence, so the
            // first hit among equal values is the canonical witness.
            if (!found || value < best_value) {
                found = true;
                best_value = value;
                best_response.path = path_vertices;
                best_response.edges.clear();
                for (int id : path_edges)
                    if (inst.edges[id].owner == Owner::Follower)
                        best_response.edges.push_back(id);
                std::sort(best_response.edges.begin(), best_response.edges.end());
            }
            return;
        }
        for (auto [w, id] : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            path_vertices.push_back(w);
            path_edges.push_back(id);
            if (in_x[id]) ++used_x;
            if (x_still_possible(w) && t_reachable(w)) self(self, w);
            if (in_x[id]) --used_x;
            path_edges.pop_back();
            path_vertices.pop_back();
            visited[w] = 0;
        }
    };
    visited[inst.s] = 1;
    dfs(dfs, inst.s);

    if (!found) return FollowerOutcome::infeasible(InfeasibleReason::NoPath);
    FollowerOutcome out;
    out.status = SolveStatus::Optimal;
    out.reason = InfeasibleReason::None;
    out.value = best_value;
    out.response = best_response;
    return out;
}

}  // namespace bsp
