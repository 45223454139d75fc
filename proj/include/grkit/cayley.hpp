#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"

namespace grkit {

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted, no duplicates, no loops
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw error("graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw error("edge endpoint out of range");
        if (u == v) continue;
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

// Undirected Cayley graph on the symmetrized generating set. The identity is
// rejected, inverses are adjoined, and the set must generate: a proper
// subgroup is reported in the error rather than silently accepted.
struct CayleyGraph {
    const FiniteGroup* group = nullptr;
    std::vector<Elt> generating_set;  // symmetrized, sorted
    Graph graph;
};

inline CayleyGraph cayley_graph(const FiniteGroup& G, std::vector<Elt> gens) {
    if (gens.empty()) throw error("generating set is empty");
    std::set<Elt> s;
    for (Elt g : gens) {
        if (g < 0 || g >= G.order()) throw error("generator index out of range");
        if (g == 0) throw error("the identity is not allowed in a Cayley generating set");
        s.insert(g);
        s.insert(G.inverse(g));
    }
    std::vector<Elt> sym(s.begin(), s.end());
    auto span = closure_of(G, sym);
    if (static_cast<int>(span.size()) != G.order())
        throw error("generating set spans only a subgroup of order " +
                    std::to_string(span.size()) + " of " + std::to_string(G.order()));
    std::vector<std::pair<int, int>> edges;
    for (Elt g = 0; g < G.order(); ++g)
        for (Elt x : sym) edges.push_back({g, G.mul(g, x)});
    CayleyGraph out;
    out.group = &G;
    out.generating_set = std::move(sym);
    out.graph = graph_from_edges(G.order(), edges);
    return out;
}

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;
    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

// BFS from every vertex; the graph must be connected.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix D;
    D.n = g.n;
    D.d.assign(static_cast<std::size_t>(g.n) * g.n, -1);
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int t = 0; t < g.n; ++t) {
            if (dist[t] < 0)
                throw error("graph is not connected (vertex " + std::to_string(t) +
                            " unreachable from " + std::to_string(s) + ")");
            D.at(s, t) = dist[t];
        }
    }
    return D;
}

inline int graph_diameter(const DistanceMatrix& D) {
    int m = 0;
    for (int i = 0; i < D.n; ++i)
        for (int j = 0; j < D.n; ++j) m = std::max(m, D.at(i, j));
    return m;
}

// Edge list format: one "u v" pair per line, blank lines and '#' comments
// skipped. Vertex count is max index + 1.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << u << " " << v << "\n";
}

inline Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int maxv = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw error("line " + std::to_string(lineno) + ": expected two vertex ids");
        long long extra;
        if (ls >> extra) throw error("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0 || u > 10000000 || v > 10000000)
            throw error("line " + std::to_string(lineno) + ": vertex id out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        maxv = std::max({maxv, static_cast<int>(u), static_cast<int>(v)});
    }
    if (edges.empty()) throw error("edge list is empty");
    return graph_from_edges(maxv + 1, edges);
}

}  // namespace grkit
