#ifndef RADIOLAB_DISTANCE_HPP
#define RADIOLAB_DISTANCE_HPP

#include <queue>
#include <stdexcept>
#include <vector>

#include "radiolab/graph.hpp"

namespace radiolab {

/// All-pairs hop distances with cached diameter. Immutable once built.
struct DistanceMatrix {
    int p = 0;
    std::vector<int> dist;  // row-major p*p
    int diameter = 0;

    int operator()(int u, int v) const { return dist[static_cast<size_t>(u) * p + v]; }
};

/// Exact unweighted distances via one BFS per source.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    if (!g.connected)
        throw std::invalid_argument("all_pairs_distances: graph must be connected");
    DistanceMatrix m;
    m.p = g.p;
    m.dist.assign(static_cast<size_t>(g.p) * g.p, -1);
    std::vector<int> queue_buf(g.p);
    for (int s = 0; s < g.p; ++s) {
        int* row = m.dist.data() + static_cast<size_t>(s) * g.p;
        int head = 0, tail = 0;
        queue_buf[tail++] = s;
        row[s] = 0;
        while (head < tail) {
            int u = queue_buf[head++];
            for (int v : g.adj[u])
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue_buf[tail++] = v;
                }
        }
        for (int v = 0; v < g.p; ++v)
            if (row[v] > m.diameter) m.diameter = row[v];
    }
    return m;
}

/// d(v, S) = min over w in S of d(v, w), for every vertex v.
inline std::vector<int> distances_to_set(const DistanceMatrix& d, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("distances_to_set: empty set");
    std::vector<int> lev(d.p);
    for (int v = 0; v < d.p; ++v) {
        int best = d(v, s[0]);
        for (size_t i = 1; i < s.size(); ++i) best = std::min(best, d(v, s[i]));
        lev[v] = best;
    }
    return lev;
}

}  // namespace radiolab

#endif  // RADIOLAB_DISTANCE_HPP
