#include "bsp/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsp {

std::vector<int> BilevelInstance::leader_edge_ids() const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (edges[i].owner == Owner::Leader) out.push_back(i);
    return out;
}

std::vector<int> BilevelInstance::follower_edge_ids() const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (edges[i].owner == Owner::Follower) out.push_back(i);
    return out;
}

Cost BilevelInstance::leader_cost(const std::vector<int>& ids) const {
    Cost sum;
    for (int id : ids) sum += edges[id].c;
    return sum;
}

Cost BilevelInstance::follower_cost(const std::vector<int>& ids) const {
    Cost sum;
    for (int id : ids) sum += edges[id].d;
    return sum;
}

void BilevelInstance::validate() const {
    if (n <= 1) throw std::invalid_argument("instance needs at least 2 vertices");
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::invalid_argument("terminal out of range");
    if (s == t) throw std::invalid_argument("s == t");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self loop");
        auto key = directed ? std::pair{e.u, e.v}
                            : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edge");
    }
}

bool BilevelInstance::is_dag() const {
    if (!directed) return false;
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        ++indeg[e.v];
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int processed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++processed;
        for (int w : adj[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return processed == n;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    return toks;
}

int parse_vertex_id(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected vertex id, got '" + tok + "'");
    }
}

}  // namespace

BilevelInstance parse_instance(const std::string& text) {
    BilevelInstance inst;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int section = 0;  // 0: header, 1: vertices, 2: s, 3: t, 4: edges
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        switch (section) {
            case 0:
                if (toks.size() != 2 || toks[0] != "bsp" ||
                    (toks[1] != "directed" && toks[1] != "undirected"))
                    throw ParseError(lineno, "expected 'bsp directed' or 'bsp undirected'");
                inst.directed = toks[1] == "directed";
                section = 1;
                break;
            case 1:
                if (toks.size() != 2 || toks[0] != "vertices")
                    throw ParseError(lineno, "expected 'vertices <n>'");
                inst.n = parse_vertex_id(toks[1], lineno);
                if (inst.n <= 0) throw ParseError(lineno, "vertex count must be positive");
                section = 2;
                break;
            case 2:
                if (toks.size() != 2 || toks[0] != "s")
                    throw ParseError(lineno, "expected 's <id>'");
                inst.s = parse_vertex_id(toks[1], lineno);
                section = 3;
                break;
            case 3:
                if (toks.size() != 2 || toks[0] != "t")
                    throw ParseError(lineno, "expected 't <id>'");
                inst.t = parse_vertex_id(toks[1], lineno);
                section = 4;
                break;
            case 4: {
                if (toks.size() != 6 || toks[0] != "edge")
                    throw ParseError(lineno, "expected 'edge <u> <v> <L|F> <c> <d>'");
                Edge e;
                e.u = parse_vertex_id(toks[1], lineno);
                e.v = parse_vertex_id(toks[2], lineno);
                if (toks[3] == "L") e.owner = Owner::Leader;
                else if (toks[3] == "F") e.owner = Owner::Follower;
                else throw ParseError(lineno, "owner must be L or F, got '" + toks[3] + "'");
                auto c = Cost::parse(toks[4]);
                if (!c) throw ParseError(lineno, "bad cost '" + toks[4] + "' (nonnegative rational expected)");
                auto d = Cost::parse(toks[5]);
                if (!d) throw ParseError(lineno, "bad cost '" + toks[5] + "' (nonnegative rational expected)");
                e.c = *c;
                e.d = *d;
                if (e.u < 0 || e.u >= inst.n || e.v < 0 || e.v >= inst.n)
                    throw ParseError(lineno, "edge endpoint out of range");
                if (e.u == e.v) throw ParseError(lineno, "self loop");
                auto key = inst.directed
                               ? std::pair{e.u, e.v}
                               : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
                if (!seen.insert(key).second)
                    throw ParseError(lineno, "parallel edge");
                inst.edges.push_back(e);
                break;
            }
        }
    }
    if (section != 4) throw ParseError(lineno, "truncated instance file");
    if (inst.s < 0 || inst.s >= inst.n || inst.t < 0 || inst.t >= inst.n)
        throw ParseError(lineno, "terminal out of range");
    if (inst.s == inst.t) throw ParseError(lineno, "s == t");
    return inst;
}

std::string serialize_instance(const BilevelInstance& inst) {
    std::ostringstream out;
    out << "bsp " << (inst.directed ? "directed" : "undirected") << "\n";
    out << "vertices " << inst.n << "\n";
    out << "s " << inst.s << "\n";
    out << "t " << inst.t << "\n";
    for (const Edge& e : inst.edges) {
        out << "edge " << e.u << " " << e.v << " "
            << (e.owner == Owner::Leader ? "L" : "F") << " "
            << e.c.str() << " " << e.d.str() << "\n";
    }
    return out.str();
}

}  // namespace bsp
