#ifndef RADIOLAB_LAYERS_HPP
#define RADIOLAB_LAYERS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "radiolab/distance.hpp"
#include "radiolab/graph.hpp"

namespace radiolab {

/// A chosen center set L_0 with k = diam(L_0) measured in G.
struct CenterSet {
    std::vector<int> vertices;  // sorted, unique, nonempty
    int k = 0;
    bool connected_induced = false;
};

inline CenterSet make_center(const Graph& g, const DistanceMatrix& d,
                             std::vector<int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("center set must be nonempty");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.p) throw std::invalid_argument("center vertex out of range");
    CenterSet c;
    c.vertices = std::move(vertices);
    for (size_t i = 0; i < c.vertices.size(); ++i)
        for (size_t j = i + 1; j < c.vertices.size(); ++j)
            c.k = std::max(c.k, d(c.vertices[i], c.vertices[j]));
    c.connected_induced = induced_subgraph(g, c.vertices).connected;
    return c;
}

/// Per-vertex levels with respect to L_0, the maximum level h, layer sizes,
/// the total level distance L(G) and the endpoint correction delta.
struct LayerDecomposition {
    std::vector<int> level;
    int h = 0;
    std::vector<int> layer_sizes;  // index i = |L_i|, 0 <= i <= h
    long long total = 0;           // L(G) = sum |L_i| * i
    int delta = 0;                 // 1 iff |L_0| = 1
};

inline LayerDecomposition layer_decomposition(const Graph&, const DistanceMatrix& d,
                                              const CenterSet& c) {
    LayerDecomposition out;
    out.level = distances_to_set(d, c.vertices);
    out.h = *std::max_element(out.level.begin(), out.level.end());
    out.layer_sizes.assign(out.h + 1, 0);
    for (int lv : out.level) {
        ++out.layer_sizes[lv];
        out.total += lv;
    }
    out.delta = c.vertices.size() == 1 ? 1 : 0;
    return out;
}

/// Checks d(u,v) <= d(u,L_0) + d(v,L_0) + diam(L_0) for every pair and
/// collects the pairs attaining equality (candidate-ordering material).
struct DistanceDecompositionCheck {
    bool holds = true;
    std::vector<std::pair<int, int>> equality_pairs;
    std::vector<std::pair<int, int>> violations;  // empty unless something is broken
};

inline DistanceDecompositionCheck distance_decomposition_check(const Graph& g,
                                                               const DistanceMatrix& d,
                                                               const CenterSet& c) {
    std::vector<int> lev = distances_to_set(d, c.vertices);
    DistanceDecompositionCheck out;
    for (int u = 0; u < g.p; ++u)
        for (int v = u + 1; v < g.p; ++v) {
            int rhs = lev[u] + lev[v] + c.k;
            if (d(u, v) > rhs) {
                out.holds = false;
                out.violations.emplace_back(u, v);
            } else if (d(u, v) == rhs) {
                out.equality_pairs.emplace_back(u, v);
            }
        }
    return out;
}

/// The components of the lower bound rn(G) >= (p-1)(d-k+1) + delta - 2 L(G).
struct BoundReport {
    int p = 0;
    int d = 0;
    int k = 0;
    int delta = 0;
    long long total = 0;
    long long bound = 0;
    std::vector<int> center;

    long long recompute() const {
        return static_cast<long long>(p - 1) * (d - k + 1) + delta - 2 * total;
    }
};

inline BoundReport lower_bound(const Graph& g, const DistanceMatrix& d, const CenterSet& c) {
    LayerDecomposition lay = layer_decomposition(g, d, c);
    BoundReport r;
    r.p = g.p;
    r.d = d.diameter;
    r.k = c.k;
    r.delta = lay.delta;
    r.total = lay.total;
    r.center = c.vertices;
    r.bound = r.recompute();
    return r;
}

/// All vertex sets of size <= max_size inducing a connected subgraph.
inline std::vector<CenterSet> enumerate_candidate_centers(const Graph& g,
                                                          const DistanceMatrix& d,
                                                          int max_size) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    if (max_size > g.p) throw std::invalid_argument("max_size exceeds graph order");
    // Grow each connected set by one neighbor at a time, deduplicating per size.
    std::vector<std::vector<int>> all;
    std::vector<std::vector<int>> layer;
    for (int v = 0; v < g.p; ++v) layer.push_back({v});
    all = layer;
    for (int size = 2; size <= max_size; ++size) {
        std::vector<std::vector<int>> next;
        for (const auto& s : layer) {
            std::vector<int> ext;
            for (int v : s)
                for (int w : g.adj[v])
                    if (!std::binary_search(s.begin(), s.end(), w)) ext.push_back(w);
            std::sort(ext.begin(), ext.end());
            ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
            for (int w : ext) {
                std::vector<int> t = s;
                t.insert(std::upper_bound(t.begin(), t.end(), w), w);
                next.push_back(std::move(t));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
        if (layer.empty()) break;
    }
    std::vector<CenterSet> out;
    out.reserve(all.size());
    for (auto& s : all) out.push_back(make_center(g, d, std::move(s)));
    return out;
}

/// Maximal Theorem-1 bound over candidate centers; ties broken by smaller
/// |L_0| then lexicographic vertex list.
inline BoundReport best_lower_bound(const Graph& g, const DistanceMatrix& d, int max_size) {
    std::vector<CenterSet> cands = enumerate_candidate_centers(g, d, max_size);
    bool have = false;
    BoundReport best;
    for (const CenterSet& c : cands) {
        BoundReport r = lower_bound(g, d, c);
        if (!have || r.bound > best.bound ||
            (r.bound == best.bound && (r.center.size() < best.center.size() ||
                                       (r.center.size() == best.center.size() &&
                                        r.center < best.center)))) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

}  // namespace radiolab

#endif  // RADIOLAB_LAYERS_HPP
