#include "bsp/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "bsp/leader.hpp"
#include "bsp/oracle.hpp"
#include "bsp/paths.hpp"
#include "bsp/reductions.hpp"

namespace bsp {

namespace {

void record(SuiteResult& result, bool ok, const std::string& what) {
    if (ok) {
        ++result.passed;
    } else {
        ++result.failed;
        result.failures.push_back(what);
    }
}

std::string describe(const char* check, std::uint64_t seed, int index) {
    std::ostringstream out;
    out << check << " (seed " << seed << ", case " << index << ")";
    return out.str();
}

BilevelInstance mixed_instance(std::uint64_t seed, int i, int max_n) {
    RandomInstanceParams p;
    p.n = 3 + i % (max_n - 2);
    p.percent_edge = 40 + (i % 3) * 15;
    p.percent_leader = 30;
    p.max_cost = 4;
    p.directed = i % 3 == 1;
    p.dag = i % 3 == 2;
    p.seed = seed + static_cast<std::uint64_t>(i) * 7919;
    return random_instance(p);
}

BilevelInstance bounded_leader_instance(RandomInstanceParams p,
                                        size_t max_leader) {
    for (int bump = 0;; ++bump) {
        p.seed += bump;
        BilevelInstance inst = random_instance(p);
        if (inst.leader_edge_ids().size() <= max_leader) return inst;
    }
}

SimpleGraph random_simple_graph(std::mt19937_64& rng, int n, int percent) {
    SimpleGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.edges.push_back({u, v});
    return g;
}

SuiteResult suite_corollary1(std::uint64_t seed, int count) {
    SuiteResult result;
    for (int i = 0; i < count; ++i) {
        BilevelInstance inst = mixed_instance(seed, i, 8);
        auto strong = solve_leader_strong_exact(inst);
        auto weak = solve_leader_weak_enum(inst);
        bool ok = strong.status == SolveStatus::Optimal &&
                  weak.status == SolveStatus::Optimal &&
                  strong.leader_value <= weak.leader_value;
        record(result, ok, describe("strong optimum exceeds weak optimum", seed, i));
    }
    return result;
}

SuiteResult suite_lemma3(std::uint64_t seed, int count) {
    SuiteResult result;
    for (int i = 0; i < count; ++i) {
        BilevelInstance inst = mixed_instance(seed, i, 8);
        auto weak = solve_leader_weak_enum(inst);
        bool ok = weak.status == SolveStatus::Optimal;
        if (ok) {
            // Shrink X to the leader edges of the witness path; the path
            // must stay an optimal weak solution whose union is that path.
            std::vector<char> on_path(inst.n, 0);
            bool simple = true;
            for (int v : weak.y.path) {
                if (on_path[v]) simple = false;
                on_path[v] = 1;
            }
            LeaderChoice x_star;
            Cost cx, cy, dy;
            for (size_t j = 0; j + 1 < weak.y.path.size(); ++j) {
                int a = weak.y.path[j], b = weak.y.path[j + 1];
                for (int id = 0; id < inst.edge_count(); ++id) {
                    const Edge& e = inst.edges[id];
                    bool here = (e.u == a && e.v == b) ||
                                (!inst.directed && e.u == b && e.v == a);
                    if (!here) continue;
                    if (e.owner == Owner::Leader) {
                        x_star.push_back(id);
                        cx += e.c;
                    } else {
                        cy += e.c;
                        dy += e.d;
                    }
                    break;
                }
            }
            auto fw = solve_follower_weak(inst, x_star);
            ok = simple && fw.status == SolveStatus::Optimal &&
                 fw.value.primary == dy &&
                 cx + fw.value.secondary == weak.leader_value &&
                 cx + cy == weak.leader_value;
        }
        record(result, ok, describe("weak optimum lacks a path witness", seed, i));
    }
    return result;
}

SuiteResult suite_dag_equiv(std::uint64_t seed, int count) {
    SuiteResult result;
    for (int i = 0; i < count; ++i) {
        RandomInstanceParams p;
        p.n = 4 + i % 7;
        p.percent_edge = 35 + (i % 4) * 10;
        p.percent_leader = 25;
        p.max_cost = 4;
        p.dag = true;
        p.seed = seed + static_cast<std::uint64_t>(i) * 7919;
        BilevelInstance inst = bounded_leader_instance(p, 5);

        auto leader_ids = inst.leader_edge_ids();
        bool ok = true;
        for (std::uint64_t mask = 0; mask < 1ull << leader_ids.size(); ++mask) {
            LeaderChoice x;
            for (size_t b = 0; b < leader_ids.size(); ++b)
                if (mask >> b & 1) x.push_back(leader_ids[b]);
            auto fast = solve_follower_strong_dag(inst, x);
            auto slow = solve_follower_strong_exact(inst, x);
            ok = ok && fast.status == slow.status &&
                 (fast.status != SolveStatus::Optimal || fast.value == slow.value);
        }
        auto dp = solve_leader_strong_dag(inst);
        auto exact = solve_leader_strong_exact(inst);
        auto oracle = brute_force_bilevel(inst, Variant::Strong);
        ok = ok && dp.status == exact.status && dp.status == oracle.status;
        if (dp.status == SolveStatus::Optimal)
            ok = ok && dp.leader_value == exact.leader_value &&
                 dp.leader_value == oracle.leader_value &&
                 dp.follower_value == exact.follower_value &&
                 dp.follower_value == oracle.follower_value;
        record(result, ok, describe("DAG solver disagrees with oracle", seed, i));
    }
    return result;
}

KCycleInstance random_kcycle(std::mt19937_64& rng, int n, int k) {
    KCycleInstance kc;
    kc.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 100 < 55)
                kc.edges.push_back({u, v, Cost(static_cast<long long>(rng() % 5))});
    while (static_cast<int>(kc.required_vertices.size()) < k) {
        int v = static_cast<int>(rng() % n);
        bool fresh = true;
        for (int u : kc.required_vertices) fresh = fresh && u != v;
        if (fresh) kc.required_vertices.push_back(v);
    }
    return kc;
}

SuiteResult suite_kcycle_equiv(std::uint64_t seed, int count) {
    SuiteResult result;
    for (int i = 0; i < count; ++i) {
        std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i) * 7919;
        if (i % 2 == 0) {
            RandomInstanceParams p;
            p.n = 4 + i % 6;
            p.percent_edge = 45;
            p.percent_leader = 20;
            p.max_cost = 4;
            p.seed = case_seed;
            BilevelInstance inst = bounded_leader_instance(p, 3);
            auto routed = solve_leader_strong_undir_via_kcycle(inst);
            auto exact = solve_leader_strong_exact(inst);
            bool ok = routed.status == exact.status &&
                      (routed.status != SolveStatus::Optimal ||
                       (routed.leader_value == exact.leader_value &&
                        routed.follower_value == exact.follower_value));
            record(result, ok,
                   describe("k-cycle-routed solver disagrees", seed, i));
        } else {
            std::mt19937_64 rng(case_seed);
            int n = 5 + static_cast<int>(rng() % 4);
            int k = 3 + static_cast<int>(rng() % 2);
            KCycleInstance kc = random_kcycle(rng, n, k);
            auto red = kcycle_to_strong_undir(kc);
            auto opt = solve_leader_strong_exact(red.inst);
            auto cycle = solve_kcycle_exact(kc);
            bool ok;
            if (cycle) {
                ok = opt.status == SolveStatus::Optimal &&
                     opt.leader_value < red.big_m &&
                     opt.leader_value == cycle->weight;
            } else {
                ok = opt.status == SolveStatus::Infeasible ||
                     !(opt.leader_value < red.big_m);
            }
            record(result, ok,
                   describe("k-cycle reduction value map broken", seed, i));
        }
    }
    return result;
}

bool check_is_reduction(std::mt19937_64& rng) {
    int n = 2 + static_cast<int>(rng() % 3);
    SimpleGraph g = random_simple_graph(rng, n, 50);
    int k = 1 + static_cast<int>(rng() % n);
    bool alpha_ok = max_independent_set(g) >= k;
    for (auto orientation : {IsOrientation::Undirected, IsOrientation::Dag}) {
        auto red = independent_set_to_weak(g, k, orientation);
        auto opt = brute_force_bilevel(red.inst, Variant::Weak);
        bool cheap = opt.status == SolveStatus::Optimal &&
                     opt.leader_value <= red.threshold;
        if (cheap != alpha_ok) return false;
    }
    return true;
}

bool check_hampath_reduction(std::mt19937_64& rng) {
    int n = 3 + static_cast<int>(rng() % 3);
    SimpleGraph g = random_simple_graph(rng, n, 50);
    int s = static_cast<int>(rng() % n);
    int t = (s + 1 + static_cast<int>(rng() % (n - 1))) % n;
    auto red = hampath_to_follower_strong(g, s, t, Cost(1));
    auto fol = solve_follower_strong_exact(red.inst, red.x);
    bool cheap = fol.status == SolveStatus::Optimal && fol.value.primary <= red.eps;
    return cheap == hamiltonian_st_path(g, s, t);
}

bool check_vdp_reduction(std::mt19937_64& rng) {
    int n = 4 + static_cast<int>(rng() % 4);
    Digraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng() % 100 < 30) g.arcs.push_back({u, v});
    int s1 = 0, t1 = 1, s2 = 2, t2 = 3;
    std::erase_if(g.arcs, [&](std::pair<int, int> a) {
        return a == std::pair{s1, t2} || a == std::pair{t1, s2};
    });
    BilevelInstance inst = vdp_to_strong_dir(g, s1, t1, s2, t2);
    auto opt = brute_force_bilevel(inst, Variant::Strong);
    if (opt.status != SolveStatus::Optimal) return false;
    bool zero = opt.leader_value == Cost();
    bool gap = zero || !(opt.leader_value < Cost(1));
    return gap && zero == two_disjoint_paths(g, s1, t1, s2, t2);
}

bool check_undirected_to_directed(std::uint64_t case_seed) {
    RandomInstanceParams p;
    p.n = 3 + static_cast<int>(case_seed % 3);
    p.percent_edge = 50;
    p.percent_leader = 35;
    p.max_cost = 3;
    p.seed = case_seed;
    BilevelInstance inst = random_instance(p);
    auto dir = undirected_to_directed(inst);
    for (auto variant : {Variant::Weak, Variant::Strong}) {
        auto a = brute_force_bilevel(inst, variant);
        auto b = brute_force_bilevel(dir.inst, variant);
        if (a.status != b.status) return false;
        if (a.status == SolveStatus::Optimal &&
            (a.leader_value != b.leader_value ||
             a.follower_value != b.follower_value))
            return false;
    }
    return true;
}

bool check_cnf_transform(std::mt19937_64& rng) {
    std::vector<std::string> vars = {"x1", "x2", "y1"};
    DnfFormula phi;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
        std::vector<Literal> conj;
        int width = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < width; ++j)
            conj.push_back({vars[rng() % vars.size()], rng() % 2 == 0});
        phi.conjunctions.push_back(conj);
    }
    auto res = cnf_equivalence_transform(phi);
    for (int base = 0; base < 1 << vars.size(); ++base) {
        Assignment a;
        for (size_t j = 0; j < vars.size(); ++j) a[vars[j]] = base >> j & 1;
        bool not_phi = !eval_dnf(phi, a);
        for (int zv = 0; zv < 2; ++zv) {
            a[res.z] = zv;
            bool extendable = false;
            size_t na = res.aux_vars.size();
            for (std::uint32_t ext = 0; ext < 1u << na; ++ext) {
                for (size_t j = 0; j < na; ++j) a[res.aux_vars[j]] = ext >> j & 1;
                if (eval_cnf(res.phi2, a)) {
                    extendable = true;
                    break;
                }
            }
            if (extendable != (static_cast<bool>(zv) == not_phi)) return false;
        }
    }
    return true;
}

std::optional<MinMaxHamInstance> random_minmaxham(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 60; ++attempt) {
        int n = 4 + static_cast<int>(rng() % 2);
        MinMaxHamInstance mmh;
        mmh.g = random_simple_graph(rng, n, 60);
        int v = -1;
        for (int u = 0; u < n && v < 0; ++u)
            if (mmh.g.neighbors(u).size() == 3) v = u;
        if (v < 0) continue;
        mmh.v = v;
        auto nbrs = mmh.g.neighbors(v);
        mmh.e_tilde = {v, nbrs[rng() % 3]};
        mmh.s = static_cast<int>(rng() % n);
        mmh.t = (mmh.s + 1 + static_cast<int>(rng() % (n - 1))) % n;
        for (auto e : mmh.g.edges) {
            if (e.first == v || e.second == v) continue;
            if (mmh.b.size() < 3 && rng() % 2 == 0) mmh.b.push_back(e);
        }
        try {
            mmh.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        return mmh;
    }
    return std::nullopt;
}

bool check_minmaxham_reduction(std::mt19937_64& rng) {
    auto mmh = random_minmaxham(rng);
    if (!mmh) return true;   // nothing sampled; not a failure
    auto red = minmaxham_to_strong_undir(*mmh);
    auto opt = brute_force_bilevel(red.inst, Variant::Strong);
    bool zero = opt.status == SolveStatus::Optimal && opt.leader_value == Cost();
    bool gap = zero || opt.status == SolveStatus::Infeasible ||
               !(opt.leader_value < Cost(1));
    return gap && zero == solve_minmaxham_exact(*mmh).yes;
}

SuiteResult suite_reductions(std::uint64_t seed, int count) {
    SuiteResult result;
    const char* names[] = {
        "independent-set gadget biconditional broken",
        "hamiltonian-path gadget biconditional broken",
        "disjoint-paths gadget biconditional broken",
        "direction lift changes an optimum",
        "formula transform projection broken",
        "min-max-ham gadget biconditional broken",
    };
    for (int i = 0; i < count; ++i) {
        std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i) * 7919;
        std::mt19937_64 rng(case_seed);
        bool ok = true;
        int which = i % 6;
        switch (which) {
            case 0: ok = check_is_reduction(rng); break;
            case 1: ok = check_hampath_reduction(rng); break;
            case 2: ok = check_vdp_reduction(rng); break;
            case 3: ok = check_undirected_to_directed(case_seed); break;
            case 4: ok = check_cnf_transform(rng); break;
            case 5: ok = check_minmaxham_reduction(rng); break;
        }
        record(result, ok, describe(names[which], seed, i));
    }
    return result;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"corollary1", "lemma3", "dag-equiv", "kcycle-equiv", "reductions"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count) {
    if (name == "corollary1") return suite_corollary1(seed, count);
    if (name == "lemma3") return suite_lemma3(seed, count);
    if (name == "dag-equiv") return suite_dag_equiv(seed, count);
    if (name == "kcycle-equiv") return suite_kcycle_equiv(seed, count);
    if (name == "reductions") return suite_reductions(seed, count);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace bsp
