#pragma once

// Small undirected graphs: Kneser graphs, direct (tensor) products, BFS checks.

#include "ekr/setfam.hpp"

#include <queue>
#include <random>

namespace ekr::graph {

struct Graph {
    std::vector<std::vector<int>> adj;

    int order() const { return static_cast<int>(adj.size()); }
    long edge_count() const
    {
        long e = 0;
        for (const auto& a : adj) e += static_cast<long>(a.size());
        return e / 2;
    }
    bool has_edge(int u, int v) const { return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end(); }
    void add_edge(int u, int v)
    {
        if (u == v || has_edge(u, v)) return;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
};

inline constexpr long kMaxKneserVertices = 5000;
inline constexpr long kMaxProductVertices = 1000000;

/// Vertices are the k-subsets of [n] in layer order; edges join disjoint sets.
inline Graph kneser_graph(int n, int k, std::vector<Mask>* labels = nullptr)
{
    if (k < 1 || n < k) throw std::invalid_argument("K(n,k) needs 1 <= k <= n");
    if (binom(n, k) > kMaxKneserVertices) throw std::invalid_argument("Kneser graph exceeds 5000 vertices");
    auto vs = setfam::layer(n, k);
    Graph g{std::vector<std::vector<int>>(vs.size())};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if ((vs[i] & vs[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (labels) *labels = std::move(vs);
    return g;
}

inline Graph cycle_graph(int m)
{
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g{std::vector<std::vector<int>>(m)};
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

/// (u,v) ~ (u',v') iff u ~ u' and v ~ v'.
inline Graph direct_product(const Graph& g, const Graph& h)
{
    const long size = long(g.order()) * h.order();
    if (size > kMaxProductVertices) throw std::invalid_argument("product exceeds 10^6 vertices");
    Graph p{std::vector<std::vector<int>>(size)};
    auto id = [&](int u, int v) { return u * h.order() + v; };
    for (int u = 0; u < g.order(); ++u)
        for (int up : g.adj[u])
            for (int v = 0; v < h.order(); ++v)
                for (int vp : h.adj[v]) p.adj[id(u, v)].push_back(id(up, vp));
    return p;
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == g.order();
}

/// Vertices of an odd closed walk, empty if the graph is bipartite.
inline std::vector<int> find_odd_cycle(const Graph& g)
{
    std::vector<int> color(g.order(), -1), parent(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // climb both BFS tree paths to their meeting point
                    std::vector<int> pu{u}, pv{v};
                    while (pu.back() != s) pu.push_back(parent[pu.back()]);
                    while (pv.back() != s) pv.push_back(parent[pv.back()]);
                    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    std::vector<int> cyc(pu.begin(), pu.end());
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cyc.push_back(*it);
                    return cyc;
                }
            }
        }
    }
    return {};
}

inline bool is_bipartite(const Graph& g) { return find_odd_cycle(g).empty(); }

/// The intervals {j, ..., j+k-1} mod 2k+1 visited in steps of k: a (2k+1)-cycle in K(2k+1,k).
inline std::vector<Mask> kneser_odd_cycle(int k)
{
    const int n = 2 * k + 1;
    std::vector<Mask> cyc;
    for (int step = 0, j = 0; step < n; ++step, j = (j + k) % n) {
        Mask m = 0;
        for (int x = 0; x < k; ++x) m |= Mask{1} << ((j + x) % n);
        cyc.push_back(m);
    }
    return cyc;
}

/// Random connected graph: a random tree plus each remaining edge with probability p.
inline Graph random_connected_graph(int order, double p, std::mt19937_64& rng)
{
    if (order < 1) throw std::invalid_argument("graph needs a vertex");
    Graph g{std::vector<std::vector<int>>(order)};
    for (int v = 1; v < order; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace ekr::graph
