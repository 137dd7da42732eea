#include "bsp/reductions.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace bsp {

UndirectedToDirectedResult undirected_to_directed(const BilevelInstance& inst) {
    if (inst.directed)
        throw std::invalid_argument("instance is already directed");
    UndirectedToDirectedResult out;
    out.inst.directed = true;
    out.inst.n = inst.n + 2 * inst.edge_count();
    out.inst.s = inst.s;
    out.inst.t = inst.t;
    for (int i = 0; i < inst.edge_count(); ++i) {
        const Edge& e = inst.edges[i];
        int w = inst.n + 2 * i;
        int wp = w + 1;
        out.inst.edges.push_back({e.u, w, Owner::Follower, Cost(), Cost()});
        out.inst.edges.push_back({e.v, w, Owner::Follower, Cost(), Cost()});
        out.edge_map.push_back(static_cast<int>(out.inst.edges.size()));
        out.inst.edges.push_back({w, wp, e.owner, e.c, e.d});
        out.inst.edges.push_back({wp, e.u, Owner::Follower, Cost(), Cost()});
        out.inst.edges.push_back({wp, e.v, Owner::Follower, Cost(), Cost()});
    }
    out.inst.validate();
    return out;
}

VertexFixingResult vertex_fixing(const BilevelInstance& inst,
                                 std::vector<int> w, const Cost& eps) {
    if (inst.directed)
        throw std::invalid_argument("vertex fixing requires an undirected instance");
    if (eps == Cost())
        throw std::invalid_argument("eps must be positive");
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    std::erase_if(w, [&](int v) { return v == inst.s || v == inst.t; });
    for (int v : w)
        if (v < 0 || v >= inst.n)
            throw std::invalid_argument("fixed vertex out of range");

    Cost sum_c(1);
    for (const Edge& e : inst.edges) sum_c += e.c;
    VertexFixingResult out;
    out.big_m = sum_c.ceil();
    out.eps = eps;
    out.w_sorted = w;

    // w keeps its old id as the middle vertex w2; w1 and w3 are fresh.
    std::vector<int> w_index(inst.n, -1);
    for (size_t j = 0; j < w.size(); ++j) w_index[w[j]] = static_cast<int>(j);
    auto w1 = [&](int v) { return inst.n + 2 * w_index[v]; };
    auto w3 = [&](int v) { return inst.n + 2 * w_index[v] + 1; };
    out.t_prime = inst.n + 2 * static_cast<int>(w.size());

    BilevelInstance& g = out.inst;
    g.directed = false;
    g.n = out.t_prime + 1;
    g.s = inst.s;
    g.t = out.t_prime;

    for (int i = 0; i < inst.edge_count(); ++i) {
        const Edge& e = inst.edges[i];
        bool uw = w_index[e.u] >= 0, vw = w_index[e.v] >= 0;
        std::vector<std::pair<int, int>> pairs;
        if (!uw && !vw) {
            pairs = {{e.u, e.v}};
        } else if (uw && !vw) {
            pairs = {{w1(e.u), e.v}, {w3(e.u), e.v}};
        } else if (!uw && vw) {
            pairs = {{e.u, w1(e.v)}, {e.u, w3(e.v)}};
        } else {
            pairs = {{w1(e.u), w1(e.v)}, {w1(e.u), w3(e.v)},
                     {w3(e.u), w1(e.v)}, {w3(e.u), w3(e.v)}};
        }
        for (auto [a, b] : pairs) {
            out.tau.push_back(i);
            g.edges.push_back({a, b, e.owner, e.c, e.d});
        }
    }
    for (int v : w) {
        out.pw_edges.push_back(g.edge_count());
        out.tau.push_back(-1);
        g.edges.push_back({w1(v), v, Owner::Leader, Cost(), Cost()});
        out.pw_edges.push_back(g.edge_count());
        out.tau.push_back(-1);
        g.edges.push_back({v, w3(v), Owner::Leader, Cost(), Cost()});
    }
    for (int v : w) {   // dangerous edges
        out.tau.push_back(-1);
        g.edges.push_back({v, inst.t, Owner::Follower, out.big_m, Cost()});
        out.tau.push_back(-1);
        g.edges.push_back({v, out.t_prime, Owner::Follower, out.big_m, Cost()});
    }
    out.tau.push_back(-1);
    g.edges.push_back({inst.t, out.t_prime, Owner::Follower, Cost(), eps});
    g.validate();
    return out;
}

IndependentSetReduction independent_set_to_weak(const SimpleGraph& g, int k,
                                                IsOrientation orientation) {
    if (g.n < 1) throw std::invalid_argument("graph is empty");
    if (k < 1 || k > g.n) throw std::invalid_argument("k out of range");
    int n = g.n;
    int m = static_cast<int>(g.edges.size());
    Cost big_m(3LL * n + 1);

    std::vector<std::pair<int, int>> edges = g.edges;
    std::vector<std::vector<int>> incident(n);
    for (int i = 0; i < m; ++i) {
        auto& [u, v] = edges[i];
        if (u > v) std::swap(u, v);
        if (u == v || u < 0 || v >= n)
            throw std::invalid_argument("bad edge in input graph");
        incident[u].push_back(i);
        incident[v].push_back(i);
    }
    auto far = [&](int e, int at) {
        return edges[e].first == at ? edges[e].second : edges[e].first;
    };

    // Group the edge sides at each vertex: every group becomes one interior
    // vertex of that block's leader chain and hosts the shortcuts of its
    // edges. Two sides may share a group only if their far endpoints are
    // adjacent (so a two-shortcut hop through the shared vertex pins down an
    // edge between two selected blocks), and an edge may share a group at no
    // more than one of its endpoints (so longer shortcut runs are impossible).
    std::vector<char> shared(m, 0);
    std::vector<std::vector<std::vector<int>>> groups(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> open;
        for (int e : incident[v]) {
            bool placed = false;
            if (!shared[e]) {
                for (size_t j = 0; j < open.size() && !placed; ++j) {
                    int f = open[j];
                    if (!shared[f] && g.has_edge(far(e, v), far(f, v))) {
                        groups[v].push_back({f, e});
                        shared[e] = shared[f] = 1;
                        open.erase(open.begin() + j);
                        placed = true;
                    }
                }
            }
            if (!placed) open.push_back(e);
        }
        for (int e : open) groups[v].push_back({e});
    }

    // Left-to-right layout: per block an entry vertex, one interior chain
    // vertex per group (at least one), and an exit vertex.
    std::vector<int> entry(n), exit_(n);
    std::vector<std::array<int, 2>> stub(m, {-1, -1});   // per edge: u-, v-side
    int next = 0;
    for (int v = 0; v < n; ++v) {
        entry[v] = next++;
        if (groups[v].empty()) ++next;   // lone interior vertex
        for (const auto& grp : groups[v]) {
            for (int e : grp) stub[e][edges[e].first == v ? 0 : 1] = next;
            ++next;
        }
        exit_[v] = next++;
    }

    IndependentSetReduction out;
    BilevelInstance& inst = out.inst;
    inst.directed = orientation == IsOrientation::Dag;
    inst.n = next;
    inst.s = entry[0];
    inst.t = exit_[n - 1];
    for (int v = 0; v < n; ++v) {
        // the block's leader chain costs 2 in total, all charged at its ends
        for (int a = entry[v]; a < exit_[v]; ++a) {
            Cost c = (a == entry[v] || a + 1 == exit_[v]) ? Cost(1) : Cost();
            inst.edges.push_back({a, a + 1, Owner::Leader, c, Cost()});
        }
        inst.edges.push_back(
            {entry[v], exit_[v], Owner::Follower, Cost(3), Cost(1)});
    }
    for (int v = 0; v + 1 < n; ++v)
        inst.edges.push_back(
            {exit_[v], entry[v + 1], Owner::Follower, Cost(), Cost(1)});
    for (int e = 0; e < m; ++e)
        inst.edges.push_back(
            {stub[e][0], stub[e][1], Owner::Follower, big_m, Cost(1, 2)});
    inst.validate();
    out.threshold = Cost(3LL * n - k);
    return out;
}

HamPathReduction hampath_to_follower_strong(const SimpleGraph& g, int s, int t,
                                            const Cost& eps) {
    if (g.n < 3) throw std::invalid_argument("need at least 3 vertices");
    if (s == t || s < 0 || t < 0 || s >= g.n || t >= g.n)
        throw std::invalid_argument("bad terminals");
    BilevelInstance base;
    base.directed = false;
    base.n = g.n;
    base.s = s;
    base.t = t;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            base.edges.push_back({u, v, Owner::Follower, Cost(),
                                  g.has_edge(u, v) ? Cost() : Cost(1)});
    std::vector<int> w;
    for (int v = 0; v < g.n; ++v)
        if (v != s && v != t) w.push_back(v);
    auto fixed = vertex_fixing(base, w, eps);
    return {fixed.inst, fixed.pw_edges, eps};
}

BilevelInstance vdp_to_strong_dir(const Digraph& g, int s1, int t1, int s2,
                                  int t2) {
    std::set<int> terminals = {s1, t1, s2, t2};
    if (terminals.size() != 4)
        throw std::invalid_argument("terminals must be distinct");
    for (int v : {s1, t1, s2, t2})
        if (v < 0 || v >= g.n) throw std::invalid_argument("terminal out of range");
    if (g.has_arc(s1, t2) || g.has_arc(t1, s2))
        throw std::invalid_argument(
            "gadget arcs (s1,t2) or (t1,s2) already present; subdivide them first");
    BilevelInstance inst;
    inst.directed = true;
    inst.n = g.n;
    inst.s = s1;
    inst.t = t2;
    for (auto [u, v] : g.arcs)
        inst.edges.push_back({u, v, Owner::Follower, Cost(), Cost(1)});
    inst.edges.push_back({s1, t2, Owner::Follower, Cost(1), Cost()});
    inst.edges.push_back({t1, s2, Owner::Leader, Cost(), Cost()});
    inst.validate();
    return inst;
}

KCycleReduction kcycle_to_strong_undir(const KCycleInstance& input) {
    KCycleInstance kc = normalize_required_edges(input);
    std::vector<int> k = kc.required_vertices;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.size() < 3)
        throw std::invalid_argument("required set must have at least 3 vertices");
    for (int v : k)
        if (v < 0 || v >= kc.n)
            throw std::invalid_argument("required vertex out of range");

    int v = k.front();
    int twin = kc.n;
    BilevelInstance base;
    base.directed = false;
    base.n = kc.n + 1;
    base.s = v;
    base.t = twin;
    for (const auto& e : kc.edges) {
        base.edges.push_back({e.u, e.v, Owner::Follower, e.w, e.w});
        if (e.u == v || e.v == v) {
            int other = e.u == v ? e.v : e.u;
            base.edges.push_back({twin, other, Owner::Follower, e.w, e.w});
        }
    }
    base.validate();
    std::vector<int> w(k.begin() + 1, k.end());
    auto fixed = vertex_fixing(base, w, Cost(1));
    return {fixed.inst, fixed.big_m, input.threshold};
}

void MinMaxHamInstance::validate() const {
    if (s == t || s < 0 || t < 0 || s >= g.n || t >= g.n)
        throw std::invalid_argument("bad terminals");
    if (v < 0 || v >= g.n) throw std::invalid_argument("bad vertex v");
    auto at_v = g.neighbors(v);
    if (at_v.size() != 3) throw std::invalid_argument("v must have degree 3");
    auto is_edge_at_v = [&](std::pair<int, int> e) {
        return e.first == v || e.second == v;
    };
    if (!is_edge_at_v(e_tilde) || !g.has_edge(e_tilde.first, e_tilde.second))
        throw std::invalid_argument("e_tilde must be an edge at v");
    for (auto e : b) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("B contains a non-edge");
        if (is_edge_at_v(e))
            throw std::invalid_argument("B must avoid the edges at v");
    }
}

VertexFixingResult minmaxham_to_strong_undir(const MinMaxHamInstance& mmh) {
    mmh.validate();
    auto same_edge = [](std::pair<int, int> a, std::pair<int, int> b) {
        return (a.first == b.first && a.second == b.second) ||
               (a.first == b.second && a.second == b.first);
    };
    BilevelInstance base;
    base.directed = false;
    base.n = mmh.g.n;
    base.s = mmh.s;
    base.t = mmh.t;
    for (auto e : mmh.g.edges) {
        bool in_b = false;
        for (auto f : mmh.b)
            if (same_edge(e, f)) in_b = true;
        Cost c, d;
        if (e.first == mmh.v || e.second == mmh.v) {
            if (same_edge(e, mmh.e_tilde))
                c = Cost(1);
            else
                d = Cost(1);
        }
        base.edges.push_back(
            {e.first, e.second, in_b ? Owner::Leader : Owner::Follower, c, d});
    }
    base.validate();
    std::vector<int> w(base.n);
    for (int i = 0; i < base.n; ++i) w[i] = i;
    return vertex_fixing(base, w, Cost(1));
}

// --- formulas ----------------------------------------------------------------

bool eval_literal(const Literal& lit, const Assignment& a) {
    auto it = a.find(lit.var);
    if (it == a.end()) throw std::invalid_argument("unassigned variable " + lit.var);
    return lit.negated ? !it->second : it->second;
}

bool eval_dnf(const DnfFormula& f, const Assignment& a) {
    for (const auto& conj : f.conjunctions) {
        bool all = true;
        for (const auto& lit : conj) all = all && eval_literal(lit, a);
        if (all) return true;
    }
    return false;
}

bool eval_cnf(const CnfFormula& f, const Assignment& a) {
    for (const auto& clause : f.clauses) {
        bool any = false;
        for (const auto& lit : clause) any = any || eval_literal(lit, a);
        if (!any) return false;
    }
    return true;
}

CnfEquivalenceResult cnf_equivalence_transform(const DnfFormula& phi) {
    int k = static_cast<int>(phi.conjunctions.size());
    if (k == 0) throw std::invalid_argument("formula has no conjunctions");

    std::set<std::string> used;
    for (const auto& conj : phi.conjunctions)
        for (const auto& lit : conj) used.insert(lit.var);

    CnfEquivalenceResult out;
    auto aux = [&](const std::string& stem, int i) {
        std::string name = stem + std::to_string(i);
        if (used.count(name))
            throw std::invalid_argument("input uses reserved variable name " + name);
        return name;
    };
    std::vector<std::string> a(k + 1), ap(k + 1), app(k + 1);
    for (int i = 1; i <= k; ++i) {
        a[i] = aux("a", i);
        ap[i] = aux("a'", i);
        app[i] = aux("a''", i);
        out.aux_vars.push_back(a[i]);
        out.aux_vars.push_back(ap[i]);
        out.aux_vars.push_back(app[i]);
    }
    if (used.count(out.z))
        throw std::invalid_argument("input uses reserved variable name z");

    auto pos = [](const std::string& v) { return Literal{v, false}; };
    auto neg = [](const std::string& v) { return Literal{v, true}; };
    auto& cl = out.phi2.clauses;
    for (int i = 1; i <= k; ++i) {
        auto conj = phi.conjunctions[i - 1];
        if (conj.empty() || conj.size() > 3)
            throw std::invalid_argument("conjunction width must be 1..3");
        while (conj.size() < 3) conj.push_back(conj.back());
        // p_ij are the literals of clause i of phi1 = NOT phi.
        Literal p[3];
        for (int j = 0; j < 3; ++j) p[j] = {conj[j].var, !conj[j].negated};
        auto flip = [](Literal l) { return Literal{l.var, !l.negated}; };
        cl.push_back({neg(a[i]), p[0], pos(app[i])});
        cl.push_back({neg(app[i]), p[1], p[2]});
        cl.push_back({flip(p[0]), pos(a[i])});
        cl.push_back({flip(p[1]), pos(a[i])});
        cl.push_back({flip(p[2]), pos(a[i])});
    }
    for (int i = 2; i <= k; ++i) {
        cl.push_back({neg(a[i]), neg(ap[i - 1]), pos(ap[i])});
        cl.push_back({neg(ap[i]), pos(a[i])});
        cl.push_back({neg(ap[i]), pos(ap[i - 1])});
    }
    // a'_1 <=> a_1 anchors the conjunction chain.
    cl.push_back({neg(ap[1]), pos(a[1])});
    cl.push_back({neg(a[1]), pos(ap[1])});
    cl.push_back({pos(out.z), neg(ap[k])});
    cl.push_back({neg(out.z), pos(ap[k])});
    return out;
}

}  // namespace bsp
