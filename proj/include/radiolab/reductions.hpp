#ifndef RADIOLAB_REDUCTIONS_HPP
#define RADIOLAB_REDUCTIONS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "radiolab/distance.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/layers.hpp"

namespace radiolab {

/// Spanning subgraph of a parent graph keeping the center subgraph intact.
struct RootedSpanningSubgraph {
    int p = 0;
    std::vector<std::pair<int, int>> kept_edges;  // u < v, sorted
    std::vector<int> root_set;
};

/// Minimum distance spanning tree rooted at L_0: all edges internal to L_0
/// plus, for each vertex at level i >= 1, one edge to its smallest-id
/// neighbor at level i-1. Levels and L(G) are preserved by construction;
/// diameter equality is a claim to check, not an axiom.
inline RootedSpanningSubgraph mdst(const Graph& g, const DistanceMatrix& d,
                                   const CenterSet& c) {
    if (!c.connected_induced)
        throw std::invalid_argument("mdst: center must induce a connected subgraph");
    std::vector<int> lev = distances_to_set(d, c.vertices);
    RootedSpanningSubgraph t;
    t.p = g.p;
    t.root_set = c.vertices;
    for (int u : c.vertices)
        for (int v : g.adj[u])
            if (u < v && std::binary_search(c.vertices.begin(), c.vertices.end(), v))
                t.kept_edges.emplace_back(u, v);
    for (int v = 0; v < g.p; ++v) {
        if (lev[v] == 0) continue;
        int parent = -1;
        for (int w : g.adj[v])
            if (lev[w] == lev[v] - 1) { parent = w; break; }  // adj sorted: smallest id
        if (parent < 0) throw std::logic_error("mdst: no parent at lower level");
        t.kept_edges.emplace_back(std::min(v, parent), std::max(v, parent));
    }
    std::sort(t.kept_edges.begin(), t.kept_edges.end());
    t.kept_edges.erase(std::unique(t.kept_edges.begin(), t.kept_edges.end()),
                       t.kept_edges.end());
    return t;
}

inline Graph to_graph(const RootedSpanningSubgraph& t, const Graph& parent) {
    return edge_subgraph(parent, t.kept_edges);
}

/// Observation-style properties of a spanning subgraph T vs its parent:
///   (a) diam(T) = diam(G), (b) levels match, (c) L(T) = L(G),
///   (d) d_T(u,v) >= d_G(u,v) for all pairs.
struct ObservationReport {
    bool diam_equal = false;      // (a)
    bool levels_equal = false;    // (b)
    bool total_equal = false;     // (c)
    bool distances_dominate = false;  // (d)
    int diam_parent = 0, diam_subgraph = 0;
    std::vector<int> level_witnesses;            // vertices violating (b)
    std::vector<std::pair<int, int>> d_witnesses;  // pairs violating (d)

    bool all_hold() const {
        return diam_equal && levels_equal && total_equal && distances_dominate;
    }
};

inline ObservationReport check_observation(const Graph& g, const DistanceMatrix& dg,
                                           const Graph& t, const CenterSet& c) {
    if (t.p != g.p) throw std::invalid_argument("check_observation: T must span V(G)");
    DistanceMatrix dt = all_pairs_distances(t);
    ObservationReport rep;
    rep.diam_parent = dg.diameter;
    rep.diam_subgraph = dt.diameter;
    rep.diam_equal = dt.diameter == dg.diameter;
    std::vector<int> lg = distances_to_set(dg, c.vertices);
    std::vector<int> lt = distances_to_set(dt, c.vertices);
    rep.levels_equal = true;
    long long totg = 0, tott = 0;
    for (int v = 0; v < g.p; ++v) {
        totg += lg[v];
        tott += lt[v];
        if (lg[v] != lt[v]) {
            rep.levels_equal = false;
            if (static_cast<int>(rep.level_witnesses.size()) < kMaxReportedViolations)
                rep.level_witnesses.push_back(v);
        }
    }
    rep.total_equal = totg == tott;
    rep.distances_dominate = true;
    for (int u = 0; u < g.p; ++u)
        for (int v = u + 1; v < g.p; ++v)
            if (dt(u, v) < dg(u, v)) {
                rep.distances_dominate = false;
                if (static_cast<int>(rep.d_witnesses.size()) < kMaxReportedViolations)
                    rep.d_witnesses.emplace_back(u, v);
            }
    return rep;
}

/// One deletion step of a Theorem-5 style reduction run.
struct DeletionStep {
    std::pair<int, int> edge;
    bool certified = false;
    long long span = -1;   // -1 when certification failed before labeling
    long long bound = 0;
};

struct DeletionSequenceReport {
    std::vector<DeletionStep> steps;
    bool all_certified = true;
    bool span_constant = true;
};

/// Deletes the edges of G missing from the target one at a time
/// (lexicographic order), recomputing distances and re-certifying the given
/// ordering after each deletion.
inline DeletionSequenceReport edge_deletion_sequence(const Graph& g,
                                                     const RootedSpanningSubgraph& target,
                                                     const CenterSet& c,
                                                     const Ordering& order) {
    if (target.p != g.p)
        throw std::invalid_argument("edge_deletion_sequence: target must span V(G)");
    std::vector<std::pair<int, int>> current = g.edges();
    for (const auto& e : target.kept_edges)
        if (!std::binary_search(current.begin(), current.end(), e))
            throw std::invalid_argument("edge_deletion_sequence: target edge missing from G");
    std::vector<std::pair<int, int>> surplus;
    for (const auto& e : current)
        if (!std::binary_search(target.kept_edges.begin(), target.kept_edges.end(), e))
            surplus.push_back(e);
    DeletionSequenceReport rep;
    long long last_span = -1;
    for (const auto& e : surplus) {
        current.erase(std::find(current.begin(), current.end(), e));
        Graph gi = edge_subgraph(g, current);  // connected: supergraph of spanning target
        DistanceMatrix di = all_pairs_distances(gi);
        CenterSet ci = make_center(gi, di, c.vertices);
        Certificate cert = certify_optimal(gi, di, ci, order);
        DeletionStep step;
        step.edge = e;
        step.certified = cert.certified;
        step.bound = cert.bound.bound;
        if (cert.certified) {
            step.span = cert.labeling.span();
            if (last_span >= 0 && step.span != last_span) rep.span_constant = false;
            last_span = step.span;
        } else {
            rep.all_certified = false;
        }
        rep.steps.push_back(step);
    }
    return rep;
}

}  // namespace radiolab

#endif  // RADIOLAB_REDUCTIONS_HPP
