#include "bsp/kcycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bsp {

KCycleInstance normalize_required_edges(const KCycleInstance& inst) {
    if (inst.required_edges.empty()) return inst;
    KCycleInstance out = inst;
    out.required_edges.clear();
    std::vector<char> split(inst.edges.size(), 0);
    for (int id : inst.required_edges) {
        if (id < 0 || id >= static_cast<int>(inst.edges.size()))
            throw std::invalid_argument("required edge id out of range");
        split[id] = 1;
    }
    out.edges.clear();
    for (size_t id = 0; id < inst.edges.size(); ++id)
        if (!split[id]) out.edges.push_back(inst.edges[id]);
    for (int id : inst.required_edges) {
        int mid = out.n++;
        const auto& e = inst.edges[id];
        out.edges.push_back({e.u, mid, e.w});
        out.edges.push_back({mid, e.v, Cost()});
        out.required_vertices.push_back(mid);
    }
    return out;
}

std::optional<KCycleSolution> solve_kcycle_exact(const KCycleInstance& input) {
    KCycleInstance inst = normalize_required_edges(input);

    std::vector<std::vector<std::pair<int, int>>> adj(inst.n);
    for (size_t id = 0; id < inst.edges.size(); ++id) {
        const auto& e = inst.edges[id];
        adj[e.u].emplace_back(e.v, static_cast<int>(id));
        adj[e.v].emplace_back(e.u, static_cast<int>(id));
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<char> required(inst.n, 0);
    int required_count = 0;
    for (int v : inst.required_vertices) {
        if (v < 0 || v >= inst.n)
            throw std::invalid_argument("required vertex out of range");
        if (!required[v]) {
            required[v] = 1;
            ++required_count;
        }
    }
    // Every qualifying cycle contains all of K, so its minimum vertex is at
    // most min(K); enumerating each cycle once from its minimum vertex only
    // needs start vertices up to that bound.
    int max_start = inst.n - 1;
    for (int v = 0; v < inst.n; ++v)
        if (required[v]) { max_start = std::min(max_start, v); break; }

    bool found = false;
    KCycleSolution best;

    std::vector<char> visited(inst.n, 0);
    std::vector<int> path;
    for (int start = 0; start <= max_start; ++start) {
        int missing = required_count - (required[start] ? 1 : 0);
        path = {start};
        visited.assign(inst.n, 0);
        visited[start] = 1;
        Cost weight;
        // Only vertices > start may appear, so each cycle is seen exactly
        // once from its minimum vertex; requiring second < last kills the
        // direction duplicate.
        auto dfs = [&](auto&& self, int v) -> void {
            for (auto [w, id] : adj[v]) {
                if (w == start && path.size() >= 3 && path[1] < v && missing == 0) {
                    Cost total = weight + inst.edges[id].w;
                    if (!found || total < best.weight ||
                        (total == best.weight && path < best.cycle)) {
                        found = true;
                        best.weight = total;
                        best.cycle = path;
                    }
                    continue;
                }
                if (w <= start || visited[w]) continue;
                visited[w] = 1;
                if (required[w]) --missing;
                path.push_back(w);
                Cost saved = weight;
                weight += inst.edges[id].w;
                self(self, w);
                weight = saved;
                path.pop_back();
                if (required[w]) ++missing;
                visited[w] = 0;
            }
        };
        dfs(dfs, start);
    }
    if (!found) return std::nullopt;
    return best;
}

bool decide_kcycle(const KCycleInstance& inst) {
    if (!inst.threshold) throw std::invalid_argument("instance has no threshold");
    auto solution = solve_kcycle_exact(inst);
    return solution && solution->weight <= *inst.threshold;
}

KCycleInstance parse_kcycle(const std::string& text) {
    KCycleInstance inst;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false, have_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (!have_header) {
            if (keyword != "kcycle")
                throw std::runtime_error("line 1: expected 'kcycle' header");
            have_header = true;
            continue;
        }
        if (keyword == "vertices") {
            if (!(ls >> inst.n) || inst.n <= 0)
                throw std::runtime_error("bad vertex count at line " + std::to_string(lineno));
            have_vertices = true;
        } else if (keyword == "required") {
            int v;
            while (ls >> v) inst.required_vertices.push_back(v);
        } else if (keyword == "edge") {
            KCycleInstance::WeightedEdge e;
            std::string wtok;
            if (!(ls >> e.u >> e.v >> wtok))
                throw std::runtime_error("bad edge at line " + std::to_string(lineno));
            auto w = Cost::parse(wtok);
            if (!w) throw std::runtime_error("bad weight at line " + std::to_string(lineno));
            e.w = *w;
            inst.edges.push_back(e);
        } else if (keyword == "threshold") {
            std::string ttok;
            if (!(ls >> ttok))
                throw std::runtime_error("bad threshold at line " + std::to_string(lineno));
            auto t = Cost::parse(ttok);
            if (!t) throw std::runtime_error("bad threshold at line " + std::to_string(lineno));
            inst.threshold = *t;
        } else {
            throw std::runtime_error("unknown keyword '" + keyword + "' at line " +
                                     std::to_string(lineno));
        }
    }
    if (!have_header || !have_vertices)
        throw std::runtime_error("truncated kcycle file");
    return inst;
}

std::string serialize_kcycle(const KCycleInstance& inst) {
    std::ostringstream out;
    out << "kcycle\nvertices " << inst.n << "\n";
    if (!inst.required_vertices.empty()) {
        out << "required";
        for (int v : inst.required_vertices) out << " " << v;
        out << "\n";
    }
    for (const auto& e : inst.edges)
        out << "edge " << e.u << " " << e.v << " " << e.w.str() << "\n";
    if (inst.threshold) out << "threshold " << inst.threshold->str() << "\n";
    return out.str();
}

}  // namespace bsp
