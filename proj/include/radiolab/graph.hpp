#ifndef RADIOLAB_GRAPH_HPP
#define RADIOLAB_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radiolab {

/// Undirected simple graph on dense vertex ids 0..p-1.
/// Adjacency lists are sorted; construction rejects self-loops and,
/// unless explicitly allowed, disconnected graphs.
struct Graph {
    int p = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> names;  // empty when vertices are unnamed
    bool connected = false;

    int edge_count() const {
        long long twice = 0;
        for (const auto& nb : adj) twice += static_cast<long long>(nb.size());
        return static_cast<int>(twice / 2);
    }

    bool has_edge(int u, int v) const {
        const auto& nb = adj[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::string name_of(int v) const {
        if (v >= 0 && v < static_cast<int>(names.size()) && !names[v].empty())
            return names[v];
        return std::to_string(v);
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < p; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

inline bool is_connected(const std::vector<std::vector<int>>& adj) {
    const int p = static_cast<int>(adj.size());
    if (p == 0) return false;
    std::vector<char> seen(p, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == p;
}

/// Builds a graph from an edge list. Self-loops always reject; duplicate
/// edges reject under strict, otherwise deduplicate. Disconnected input
/// rejects unless allow_disconnected.
inline Graph build_graph(int p, const std::vector<std::pair<int, int>>& edges,
                         bool strict = false, bool allow_disconnected = false) {
    if (p <= 0) throw std::invalid_argument("graph order must be positive");
    Graph g;
    g.p = p;
    g.adj.assign(p, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= p || v < 0 || v >= p)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int u = 0; u < p; ++u) {
        auto& nb = g.adj[u];
        std::sort(nb.begin(), nb.end());
        auto dup = std::unique(nb.begin(), nb.end());
        if (strict && dup != nb.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
        nb.erase(dup, nb.end());
    }
    g.connected = is_connected(g.adj);
    if (!g.connected && !allow_disconnected)
        throw std::invalid_argument("graph is disconnected");
    return g;
}

/// P_m with vertices u_1..u_m at indices 0..m-1.
inline Graph path(int m) {
    if (m < 1) throw std::invalid_argument("path needs m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    Graph g = build_graph(m, e);
    g.names.resize(m);
    for (int i = 0; i < m; ++i) g.names[i] = "u_" + std::to_string(i + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    Graph g = build_graph(n, e);
    g.names.resize(n);
    for (int i = 0; i < n; ++i) g.names[i] = "w_" + std::to_string(i + 1);
    return g;
}

namespace detail {
inline void hub_rim_names(Graph& g) {
    g.names.resize(g.p);
    for (int i = 0; i < g.p; ++i) g.names[i] = "v_" + std::to_string(i);
}
}  // namespace detail

/// W_n: hub v_0 at index 0 joined to every vertex of the rim cycle v_1..v_n.
inline Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % n + 1);
    }
    Graph g = build_graph(n + 1, e);
    detail::hub_rim_names(g);
    return g;
}

/// K_{1,n}: hub v_0 at index 0 joined to leaves v_1..v_n.
inline Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
    Graph g = build_graph(n + 1, e);
    detail::hub_rim_names(g);
    return g;
}

/// F_n: n triangles sharing the hub v_0; rim pairs v_{2i-1}v_{2i}.
inline Graph friendship(int n) {
    if (n < 1) throw std::invalid_argument("friendship needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 2 * n; ++i) e.emplace_back(0, i);
    for (int i = 1; i <= n; ++i) e.emplace_back(2 * i - 1, 2 * i);
    Graph g = build_graph(2 * n + 1, e);
    detail::hub_rim_names(g);
    return g;
}

/// G □ H with vertex (g,h) at index g*|V(H)|+h; this index formula is part
/// of the public contract (family constructions depend on it).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (!g.connected || !h.connected)
        throw std::invalid_argument("cartesian_product needs connected factors");
    const int hn = h.p;
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.p; ++a)
        for (int x = 0; x < hn; ++x) {
            for (int y : h.adj[x])
                if (x < y) e.emplace_back(a * hn + x, a * hn + y);
            for (int b : g.adj[a])
                if (a < b) e.emplace_back(a * hn + x, b * hn + x);
        }
    Graph prod = build_graph(g.p * hn, e);
    prod.names.resize(prod.p);
    for (int a = 0; a < g.p; ++a)
        for (int x = 0; x < hn; ++x)
            prod.names[a * hn + x] = "(" + g.name_of(a) + "," + h.name_of(x) + ")";
    return prod;
}

struct InducedSubgraph {
    Graph graph;                // vertices reindexed 0..|S|-1
    std::vector<int> vertices;  // original ids, sorted; position = new id
    bool connected = false;
};

/// Subgraph induced by S; disconnected results are allowed and flagged
/// unless require_connected.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s,
                                        bool require_connected = false) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.vertices = s;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    std::vector<int> newid(g.p, -1);
    for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) {
        int v = out.vertices[i];
        if (v < 0 || v >= g.p) throw std::invalid_argument("induced_subgraph: vertex out of range");
        newid[v] = i;
    }
    std::vector<std::pair<int, int>> e;
    for (int v : out.vertices)
        for (int w : g.adj[v])
            if (newid[w] >= 0 && v < w) e.emplace_back(newid[v], newid[w]);
    out.graph = build_graph(static_cast<int>(out.vertices.size()), e, false, true);
    out.connected = out.graph.connected;
    if (require_connected && !out.connected)
        throw std::invalid_argument("induced subgraph is disconnected");
    if (!g.names.empty()) {
        out.graph.names.resize(out.graph.p);
        for (int i = 0; i < out.graph.p; ++i) out.graph.names[i] = g.name_of(out.vertices[i]);
    }
    return out;
}

/// Same vertex set, subset of edges. Names carry over.
inline Graph edge_subgraph(const Graph& g, const std::vector<std::pair<int, int>>& kept,
                           bool allow_disconnected = false) {
    Graph sub = build_graph(g.p, kept, false, allow_disconnected);
    sub.names = g.names;
    return sub;
}

}  // namespace radiolab

#endif  // RADIOLAB_GRAPH_HPP
