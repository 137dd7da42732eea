#include "bsp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bsp/paths.hpp"

namespace bsp {

namespace {

std::vector<int> all_edge_ids(const BilevelInstance& inst) {
    std::vector<int> ids(inst.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

struct PathGroup {
    LexValue value;   // (d, c) over the follower edges of the best path
    Path path;
};

// Best (d, c) follower value per leader-edge set actually realized by some
// simple s-t path; ties resolved toward the first (lexicographically
// smallest) path.
std::map<std::uint64_t, PathGroup> group_paths(
    const BilevelInstance& inst, const std::vector<int>& leader_ids,
    const std::vector<int>& required_vertices = {}) {
    std::vector<int> bit_of(inst.edge_count(), -1);
    for (size_t i = 0; i < leader_ids.size(); ++i)
        bit_of[leader_ids[i]] = static_cast<int>(i);

    std::map<std::uint64_t, PathGroup> groups;
    for_each_path(inst, all_edge_ids(inst), inst.s, inst.t, [&](const Path& p) {
        for (int v : required_vertices)
            if (std::find(p.vertices.begin(), p.vertices.end(), v) ==
                p.vertices.end())
                return;
        std::uint64_t mask = 0;
        LexValue value;
        for (int id : p.edges) {
            const Edge& e = inst.edges[id];
            if (e.owner == Owner::Leader)
                mask |= 1ull << bit_of[id];
            else
                value += {e.d, e.c};
        }
        auto it = groups.find(mask);
        if (it == groups.end() || value < it->second.value)
            groups.insert_or_assign(mask, PathGroup{value, p});
    });
    return groups;
}

SolveOutcome outcome_from(const BilevelInstance& inst,
                          const std::vector<int>& leader_ids,
                          std::uint64_t x_mask, const Cost& leader_value,
                          const LexValue& follower_best, const Path& witness) {
    SolveOutcome out;
    out.status = SolveStatus::Optimal;
    out.leader_value = leader_value;
    out.follower_value = follower_best.primary;
    for (size_t i = 0; i < leader_ids.size(); ++i)
        if (x_mask >> i & 1) out.x.push_back(leader_ids[i]);
    out.y.edges = witness.follower_edges(inst);
    out.y.path = witness.vertices;
    return out;
}

SolveOutcome brute_force_strong_impl(const BilevelInstance& inst,
                                     const std::vector<int>& required_vertices) {
    auto leader_ids = inst.leader_edge_ids();
    if (leader_ids.size() > 63)
        throw std::invalid_argument("too many leader edges for brute force");
    auto groups = group_paths(inst, leader_ids, required_vertices);

    SolveOutcome best = SolveOutcome::infeasible();
    for (const auto& [mask, group] : groups) {
        Cost leader_value = group.value.secondary;
        for (size_t i = 0; i < leader_ids.size(); ++i)
            if (mask >> i & 1) leader_value += inst.edges[leader_ids[i]].c;
        // canonical optimum: smallest leader value, then smallest follower value
        if (best.status == SolveStatus::Infeasible ||
            leader_value < best.leader_value ||
            (leader_value == best.leader_value &&
             group.value.primary < best.follower_value))
            best = outcome_from(inst, leader_ids, mask, leader_value,
                                group.value, group.path);
    }
    return best;
}

}  // namespace

SolveOutcome brute_force_bilevel(const BilevelInstance& inst, Variant variant) {
    if (variant == Variant::Strong) return brute_force_strong_impl(inst, {});

    auto leader_ids = inst.leader_edge_ids();
    size_t nl = leader_ids.size();
    if (nl > 20)
        throw std::invalid_argument("too many leader edges for weak brute force");
    auto groups = group_paths(inst, leader_ids);
    if (groups.empty()) return SolveOutcome::infeasible();

    // Subset-minimum transform: after the sweep, val[x] is the follower's
    // best value over all path groups usable under leader choice x, and
    // src[x] remembers which group attains it.
    size_t size = 1ull << nl;
    std::vector<char> has(size, 0);
    std::vector<LexValue> val(size);
    std::vector<std::uint64_t> src(size, 0);
    for (const auto& [mask, group] : groups) {
        has[mask] = 1;
        val[mask] = group.value;
        src[mask] = mask;
    }
    for (size_t bit = 0; bit < nl; ++bit) {
        for (std::uint64_t x = 0; x < size; ++x) {
            if (!(x >> bit & 1)) continue;
            std::uint64_t from = x ^ (1ull << bit);
            if (!has[from]) continue;
            if (!has[x] || val[from] < val[x]) {
                has[x] = 1;
                val[x] = val[from];
                src[x] = src[from];
            }
        }
    }

    std::vector<Cost> x_cost(size);
    for (std::uint64_t x = 1; x < size; ++x) {
        int low = std::countr_zero(x);
        x_cost[x] = x_cost[x & (x - 1)] + inst.edges[leader_ids[low]].c;
    }

    SolveOutcome best = SolveOutcome::infeasible();
    for (std::uint64_t x = 0; x < size; ++x) {
        if (!has[x]) continue;
        Cost leader_value = x_cost[x] + val[x].secondary;
        if (best.status == SolveStatus::Infeasible ||
            leader_value < best.leader_value ||
            (leader_value == best.leader_value &&
             val[x].primary < best.follower_value))
            best = outcome_from(inst, leader_ids, x, leader_value, val[x],
                                groups.at(src[x]).path);
    }
    return best;
}

SolveOutcome brute_force_bilevel_strong_through(const BilevelInstance& inst,
                                                const std::vector<int>& w) {
    return brute_force_strong_impl(inst, w);
}

FollowerOutcome oracle_follower(const BilevelInstance& inst,
                                const LeaderChoice& x, Variant variant) {
    std::vector<char> in_x(inst.edge_count(), 0);
    for (int id : x) in_x[id] = 1;
    std::vector<int> allowed = x;
    for (int i = 0; i < inst.edge_count(); ++i)
        if (inst.edges[i].owner == Owner::Follower) allowed.push_back(i);
    std::sort(allowed.begin(), allowed.end());

    bool found = false;
    LexValue best_value;
    Path best_path;
    for_each_path(inst, allowed, inst.s, inst.t, [&](const Path& p) {
        if (variant == Variant::Strong) {
            size_t used = 0;
            for (int id : p.edges)
                if (inst.edges[id].owner == Owner::Leader) ++used;
            if (used != x.size()) return;   // must cover X exactly
        }
        LexValue value;
        for (int id : p.edges) {
            const Edge& e = inst.edges[id];
            if (e.owner == Owner::Follower) value += {e.d, e.c};
        }
        if (!found || value < best_value) {
            found = true;
            best_value = value;
            best_path = p;
        }
    });
    if (!found) return FollowerOutcome::infeasible(InfeasibleReason::NoPath);
    FollowerOutcome out;
    out.status = SolveStatus::Optimal;
    out.reason = InfeasibleReason::None;
    out.value = best_value;
    out.response.edges = best_path.follower_edges(inst);
    out.response.path = best_path.vertices;
    return out;
}

MinMaxHamOutcome solve_minmaxham_exact(const MinMaxHamInstance& mmh) {
    mmh.validate();
    if (mmh.b.size() > 63)
        throw std::invalid_argument("B too large for enumeration");
    const SimpleGraph& g = mmh.g;

    std::map<std::pair<int, int>, int> b_index;
    for (size_t i = 0; i < mmh.b.size(); ++i) {
        auto [u, v] = mmh.b[i];
        b_index[{std::min(u, v), std::max(u, v)}] = static_cast<int>(i);
    }
    auto et = std::pair{std::min(mmh.e_tilde.first, mmh.e_tilde.second),
                        std::max(mmh.e_tilde.first, mmh.e_tilde.second)};

    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    // mask of used B edges -> does any Hamiltonian path with that mask use
    // e_tilde?
    std::map<std::uint64_t, bool> ham_groups;
    std::vector<char> visited(g.n, 0);
    std::uint64_t mask = 0;
    bool uses_et = false;
    int et_count = 0;
    auto dfs = [&](auto&& self, int v, int depth) -> void {
        if (v == mmh.t) {
            if (depth == g.n) {
                auto it = ham_groups.find(mask);
                if (it == ham_groups.end())
                    ham_groups[mask] = uses_et;
                else
                    it->second = it->second || uses_et;
            }
            return;
        }
        for (int w : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            auto key = std::pair{std::min(v, w), std::max(v, w)};
            auto bit = b_index.find(key);
            if (bit != b_index.end()) mask |= 1ull << bit->second;
            if (key == et) { uses_et = true; ++et_count; }
            self(self, w, depth + 1);
            if (key == et && --et_count == 0) uses_et = false;
            if (bit != b_index.end()) mask &= ~(1ull << bit->second);
            visited[w] = 0;
        }
    };
    visited[mmh.s] = 1;
    dfs(dfs, mmh.s, 1);

    for (const auto& [b_mask, any_et] : ham_groups) {
        if (any_et) continue;
        MinMaxHamOutcome out;
        out.yes = true;
        for (size_t i = 0; i < mmh.b.size(); ++i)
            if (b_mask >> i & 1) out.b_prime.push_back(mmh.b[i]);
        return out;
    }
    return {};
}

int max_independent_set(const SimpleGraph& g) {
    if (g.n > 25) throw std::invalid_argument("graph too large");
    int best = 0;
    for (std::uint32_t set = 0; set < 1u << g.n; ++set) {
        bool independent = true;
        for (auto [u, v] : g.edges)
            if ((set >> u & 1) && (set >> v & 1)) independent = false;
        if (independent) best = std::max(best, std::popcount(set));
    }
    return best;
}

bool hamiltonian_st_path(const SimpleGraph& g, int s, int t) {
    if (s == t) return false;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> visited(g.n, 0);
    auto dfs = [&](auto&& self, int v, int depth) -> bool {
        if (v == t) return depth == g.n;
        for (int w : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            bool hit = self(self, w, depth + 1);
            visited[w] = 0;
            if (hit) return true;
        }
        return false;
    };
    visited[s] = 1;
    return dfs(dfs, s, 1);
}

bool two_disjoint_paths(const Digraph& g, int s1, int t1, int s2, int t2) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.arcs) adj[u].push_back(v);

    std::vector<char> visited(g.n, 0);
    auto second_path_exists = [&]() {
        if (visited[s2] || visited[t2]) return false;
        std::vector<char> seen = visited;
        std::vector<int> stack = {s2};
        seen[s2] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == t2) return true;
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    };
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == t1) return second_path_exists();
        for (int w : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            bool hit = self(self, w);
            visited[w] = 0;
            if (hit) return true;
        }
        return false;
    };
    visited[s1] = 1;
    return dfs(dfs, s1);
}

BilevelInstance random_instance(const RandomInstanceParams& params) {
    if (params.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (params.max_cost < 0) throw std::invalid_argument("negative max cost");
    std::mt19937_64 rng(params.seed);
    // All draws go through rng() % k for cross-platform reproducibility.
    auto draw = [&](int k) { return static_cast<int>(rng() % k); };

    bool directed = params.directed || params.dag;
    auto build = [&]() {
        BilevelInstance inst;
        inst.directed = directed;
        inst.n = params.n;
        std::vector<int> pos(params.n);
        std::iota(pos.begin(), pos.end(), 0);
        if (params.dag) {
            for (int i = params.n - 1; i > 0; --i)
                std::swap(pos[i], pos[draw(i + 1)]);
            for (int v = 0; v < params.n; ++v)
                if (pos[v] == 0) inst.s = v;
            for (int v = 0; v < params.n; ++v)
                if (pos[v] == params.n - 1) inst.t = v;
        } else {
            inst.s = 0;
            inst.t = params.n - 1;
        }
        for (int u = 0; u < params.n; ++u) {
            for (int v = u + 1; v < params.n; ++v) {
                bool include = draw(100) < params.percent_edge;
                bool leader = draw(100) < params.percent_leader;
                int c = draw(params.max_cost + 1);
                int d = draw(params.max_cost + 1);
                int flip = draw(2);
                if (!include) continue;
                Edge e;
                e.owner = leader ? Owner::Leader : Owner::Follower;
                e.c = Cost(c);
                e.d = leader ? Cost() : Cost(d);
                e.u = u;
                e.v = v;
                if (params.dag ? pos[u] > pos[v] : (directed && flip))
                    std::swap(e.u, e.v);
                inst.edges.push_back(e);
            }
        }
        return inst;
    };

    for (int attempt = 0; attempt < 100; ++attempt) {
        BilevelInstance inst = build();
        if (has_st_path(inst, all_edge_ids(inst))) return inst;
    }
    BilevelInstance inst = build();
    if (!has_st_path(inst, all_edge_ids(inst)))
        inst.edges.push_back(
            {inst.s, inst.t, Owner::Follower, Cost(1), Cost(1)});
    inst.validate();
    return inst;
}

}  // namespace bsp
