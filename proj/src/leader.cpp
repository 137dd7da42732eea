#include "bsp/leader.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dag_normalize.hpp"

namespace bsp {

namespace {

std::vector<int> mask_to_choice(const std::vector<int>& leader_ids,
                                unsigned long long mask) {
    std::vector<int> x;
    for (size_t i = 0; i < leader_ids.size(); ++i)
        if (mask >> i & 1) x.push_back(leader_ids[i]);
    return x;
}

template <typename FollowerSolver>
SolveOutcome enumerate_leader_subsets(const BilevelInstance& inst,
                                      FollowerSolver&& solve_follower) {
    auto leader_ids = inst.leader_edge_ids();
    if (leader_ids.size() > 25)
        throw std::invalid_argument("too many leader edges for subset enumeration");
    SolveOutcome best = SolveOutcome::infeasible();
    for (unsigned long long mask = 0; mask < 1ull << leader_ids.size(); ++mask) {
        auto x = mask_to_choice(leader_ids, mask);
        FollowerOutcome fo = solve_follower(inst, x);
        if (fo.status != SolveStatus::Optimal) continue;
        Cost leader_value = inst.leader_cost(x) + fo.value.secondary;
        // canonical optimum: smallest leader value, then smallest follower value
        if (best.status == SolveStatus::Infeasible ||
            leader_value < best.leader_value ||
            (leader_value == best.leader_value &&
             fo.value.primary < best.follower_value)) {
            best.status = SolveStatus::Optimal;
            best.leader_value = leader_value;
            best.follower_value = fo.value.primary;
            best.x = x;
            best.y = fo.response;
        }
    }
    return best;
}

}  // namespace

SolveOutcome solve_leader_weak_enum(const BilevelInstance& inst) {
    return enumerate_leader_subsets(inst, solve_follower_weak);
}

SolveOutcome solve_leader_strong_exact(const BilevelInstance& inst) {
    return enumerate_leader_subsets(inst, solve_follower_strong_exact);
}

SolveOutcome solve_leader_strong_dag(const BilevelInstance& inst) {
    auto norm = detail::dag_normalize(inst);
    const BilevelInstance& g = norm.inst;

    // Vertex-to-vertex reachability over all edges, by DP in reverse
    // topological order.
    std::vector<std::vector<int>> adj(g.n);
    std::vector<int> indeg(g.n, 0);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        ++indeg[e.v];
    }
    std::vector<int> topo;
    {
        std::vector<int> stack;
        for (int v = 0; v < g.n; ++v)
            if (indeg[v] == 0) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            topo.push_back(v);
            for (int w : adj[v])
                if (--indeg[w] == 0) stack.push_back(w);
        }
    }
    std::vector<int> topo_pos(g.n);
    for (int i = 0; i < g.n; ++i) topo_pos[topo[i]] = i;
    std::vector<std::vector<char>> reach(g.n, std::vector<char>(g.n, 0));
    for (int i = g.n - 1; i >= 0; --i) {
        int v = topo[i];
        reach[v][v] = 1;
        for (int w : adj[v])
            for (int u = 0; u < g.n; ++u)
                if (reach[w][u]) reach[v][u] = 1;
    }
    // e < e': some path starts with e and ends with e'.
    auto prec = [&](int e, int ep) {
        return e != ep && reach[g.edges[e].v][g.edges[ep].u];
    };

    std::vector<int> leaders;
    for (int id : g.leader_edge_ids()) {
        if (id == norm.e_s || id == norm.e_t ||
            (prec(norm.e_s, id) && prec(id, norm.e_t)))
            leaders.push_back(id);   // others appear in no feasible chain
    }
    std::sort(leaders.begin(), leaders.end(), [&](int a, int b) {
        return std::tuple(topo_pos[g.edges[a].u], topo_pos[g.edges[a].v], a) <
               std::tuple(topo_pos[g.edges[b].u], topo_pos[g.edges[b].v], b);
    });

    auto follower_ids = g.follower_edge_ids();
    auto weight = [&](int id) -> LexValue {
        return {g.edges[id].d, g.edges[id].c};
    };
    // Follower segment between two chain-consecutive leader edges; the
    // leader pays the secondary (c) component of the lex-optimal segment.
    std::map<std::pair<int, int>, std::optional<LexPathResult>> segment;
    auto segment_of = [&](int e, int ep) -> const std::optional<LexPathResult>& {
        auto key = std::pair{e, ep};
        auto it = segment.find(key);
        if (it == segment.end()) {
            it = segment
                     .emplace(key, lex_shortest_path(g, follower_ids, weight,
                                                     g.edges[e].v, g.edges[ep].u))
                     .first;
        }
        return it->second;
    };

    // Best chain ending at each leader edge as (leader cost, follower cost),
    // compared lexicographically: the canonical optimum has the smallest
    // leader value and, among those, the smallest follower value.
    using ChainValue = std::pair<Cost, Cost>;
    std::map<int, ChainValue> dp;
    std::map<int, int> predecessor;
    dp[norm.e_s] = ChainValue{};
    for (int ep : leaders) {
        if (ep == norm.e_s) continue;
        std::optional<ChainValue> best;
        int best_pred = -1;
        for (int e : leaders) {
            if (!prec(e, ep)) continue;
            auto it = dp.find(e);
            if (it == dp.end()) continue;
            const auto& seg = segment_of(e, ep);
            if (!seg) continue;
            ChainValue candidate{
                it->second.first + seg->value.secondary + g.edges[ep].c,
                it->second.second + seg->value.primary};
            if (!best || candidate < *best) {
                best = candidate;
                best_pred = e;
            }
        }
        if (best) {
            dp[ep] = *best;
            predecessor[ep] = best_pred;
        }
    }

    if (!dp.count(norm.e_t)) return SolveOutcome::infeasible();

    LeaderChoice x;
    for (int e = predecessor[norm.e_t]; e != norm.e_s; e = predecessor[e])
        x.push_back(e);
    std::sort(x.begin(), x.end());

    // Re-derive the follower's response for the chosen X; it reproduces the
    // same chain and segment choices.
    FollowerOutcome fo = solve_follower_strong_dag(inst, x);
    SolveOutcome out;
    out.status = SolveStatus::Optimal;
    out.leader_value = dp[norm.e_t].first;
    out.follower_value = fo.value.primary;
    out.x = x;
    out.y = fo.response;
    return out;
}

SolveOutcome solve_leader_strong_undir_via_kcycle(const BilevelInstance& inst,
                                                  const KCycleOracle& oracle) {
    if (inst.directed)
        throw std::invalid_argument("k-cycle route requires an undirected instance");
    auto leader_ids = inst.leader_edge_ids();
    if (leader_ids.size() > 25)
        throw std::invalid_argument("too many leader edges for subset enumeration");

    // Exact common-denominator scaling to integer costs.
    long long scale = 1;
    for (const Edge& e : inst.edges) {
        scale = std::lcm(scale, e.c.den());
        if (e.owner == Owner::Follower) scale = std::lcm(scale, e.d.den());
    }
    auto c_int = [&](const Edge& e) { return e.c.num() * (scale / e.c.den()); };
    auto d_int = [&](const Edge& e) {
        return e.owner == Owner::Follower ? e.d.num() * (scale / e.d.den()) : 0;
    };
    long long sum_c = 0;
    for (const Edge& e : inst.edges) sum_c += c_int(e);
    // Smallest constant that keeps the c part of every combined weight
    // M*d + c below M, so (div, mod) decoding is injective. Equals
    // 1 + ceil(sum c / min nonzero d) whenever the smallest scaled
    // follower cost is 1.
    long long big_m = 1 + sum_c;

    // Unordered endpoint pair -> original edge id, for witness decoding.
    std::map<std::pair<int, int>, int> edge_at;
    for (int i = 0; i < inst.edge_count(); ++i) {
        const Edge& e = inst.edges[i];
        edge_at[{std::min(e.u, e.v), std::max(e.u, e.v)}] = i;
    }

    int dummy = inst.n;
    SolveOutcome best = SolveOutcome::infeasible();
    for (unsigned long long mask = 0; mask < 1ull << leader_ids.size(); ++mask) {
        auto x = mask_to_choice(leader_ids, mask);

        KCycleInstance kc;
        kc.n = inst.n + 1;
        for (int i = 0; i < inst.edge_count(); ++i) {
            const Edge& e = inst.edges[i];
            if (e.owner == Owner::Follower)
                kc.edges.push_back({e.u, e.v, Cost(big_m * d_int(e) + c_int(e))});
        }
        for (int id : x) {
            const Edge& e = inst.edges[id];
            kc.required_edges.push_back(static_cast<int>(kc.edges.size()));
            kc.edges.push_back({e.u, e.v, Cost(big_m * d_int(e) + c_int(e))});
        }
        kc.edges.push_back({dummy, inst.s, Cost()});
        kc.edges.push_back({dummy, inst.t, Cost()});
        kc.required_vertices.push_back(dummy);

        // Required X edges become required midpoint vertices n+1, n+2, ...
        // in mask order before the oracle sees the instance.
        auto solution = oracle(normalize_required_edges(kc));
        if (!solution) continue;

        long long w_star = solution->weight.num();   // integral by construction
        long long c_star = w_star % big_m;
        long long d_star = w_star / big_m;
        if (c_star > sum_c)
            throw std::logic_error("k-cycle decoding out of range");
        Cost leader_value(c_star, scale);
        Cost follower_value(d_star, scale);
        if (best.status == SolveStatus::Optimal &&
            !(leader_value < best.leader_value ||
              (leader_value == best.leader_value &&
               follower_value < best.follower_value)))
            continue;

        // Decode the witness: drop the dummy vertex, orient s -> t, strip
        // subdivision midpoints.
        const auto& cyc = solution->cycle;
        int k = static_cast<int>(cyc.size());
        int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), dummy) - cyc.begin());
        std::vector<int> walk;
        if (cyc[(at + 1) % k] == inst.s) {
            for (int i = 1; i < k; ++i) walk.push_back(cyc[(at + i) % k]);
        } else {
            for (int i = 1; i < k; ++i) walk.push_back(cyc[(at - i + k) % k]);
        }
        std::vector<int> path;
        for (int v : walk)
            if (v < inst.n) path.push_back(v);

        FollowerResponse response;
        response.path = path;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int a = std::min(path[i], path[i + 1]);
            int b = std::max(path[i], path[i + 1]);
            int id = edge_at.at({a, b});
            if (inst.edges[id].owner == Owner::Follower)
                response.edges.push_back(id);
        }
        std::sort(response.edges.begin(), response.edges.end());

        best.status = SolveStatus::Optimal;
        best.leader_value = leader_value;
        best.follower_value = follower_value;
        best.x = x;
        best.y = response;
    }
    return best;
}

}  // namespace bsp
