#ifndef RADIOLAB_SOLVER_HPP
#define RADIOLAB_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "radiolab/distance.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/layers.hpp"

namespace radiolab {

struct SolverConfig {
    int max_vertices = 12;
    double time_budget_seconds = 0;  // <= 0: unlimited
    std::optional<int> initial_upper_bound;
    bool use_symmetry = true;
};

enum class SolveStatus { proved_optimal, budget_exhausted };

struct SolveResult {
    long long rn = -1;     // best span found; exact when proved_optimal
    long long lower = 0;   // proven lower bound (= rn when proved_optimal)
    Labeling witness;
    bool has_witness = false;
    SolveStatus status = SolveStatus::proved_optimal;
    long long nodes = 0;
};

namespace detail {

inline std::vector<std::vector<int>> distance_profiles(const DistanceMatrix& d) {
    std::vector<std::vector<int>> prof(d.p);
    for (int v = 0; v < d.p; ++v) {
        prof[v].assign(d.dist.begin() + static_cast<size_t>(v) * d.p,
                       d.dist.begin() + static_cast<size_t>(v + 1) * d.p);
        std::sort(prof[v].begin(), prof[v].end());
    }
    return prof;
}

/// Backtracking search for a distance-preserving bijection mapping a -> b.
inline bool distance_automorphism_exists(const DistanceMatrix& d,
                                         const std::vector<std::vector<int>>& prof,
                                         int a, int b) {
    if (prof[a] != prof[b]) return false;
    const int p = d.p;
    std::vector<int> img(p, -1);
    std::vector<char> used(p, 0);
    img[a] = b;
    used[b] = 1;
    std::vector<int> todo;
    for (int v = 0; v < p; ++v)
        if (v != a) todo.push_back(v);
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == todo.size()) return true;
        int u = todo[idx];
        for (int c = 0; c < p; ++c) {
            if (used[c] || prof[u] != prof[c]) continue;
            bool ok = true;
            if (d(u, a) != d(c, b)) continue;
            for (size_t k = 0; k < idx && ok; ++k)
                if (d(u, todo[k]) != d(c, img[todo[k]])) ok = false;
            if (!ok) continue;
            img[u] = c;
            used[c] = 1;
            if (self(self, idx + 1)) return true;
            img[u] = -1;
            used[c] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

/// One representative per orbit of the distance-automorphism group.
inline std::vector<int> orbit_representatives(const DistanceMatrix& d) {
    std::vector<std::vector<int>> prof = distance_profiles(d);
    std::vector<int> reps;
    std::vector<char> covered(d.p, 0);
    for (int v = 0; v < d.p; ++v) {
        if (covered[v]) continue;
        reps.push_back(v);
        for (int w = v + 1; w < d.p; ++w)
            if (!covered[w] && distance_automorphism_exists(d, prof, v, w)) covered[w] = 1;
    }
    return reps;
}

}  // namespace detail

/// Branch-and-bound over vertex orderings with the greedy minimal labeling
/// computed incrementally. Next-vertex candidates are tried farthest-first
/// from the last placed vertex; a partial ordering is cut once its span plus
/// one per remaining vertex cannot beat the incumbent. First vertices are
/// restricted to distance-automorphism orbit representatives (p <= 16).
inline SolveResult exact_radio_number(const Graph& g, const DistanceMatrix& d,
                                      const SolverConfig& cfg = {}) {
    const int p = g.p;
    const bool budgeted = cfg.time_budget_seconds > 0;
    if (p > cfg.max_vertices && !budgeted)
        throw std::invalid_argument("exact_radio_number: graph exceeds max_vertices "
                                    "and no time budget is set");
    SolveResult res;
    res.lower = p - 1;  // p distinct labels force span >= p-1
    if (p >= 2) {
        BoundReport b = best_lower_bound(g, d, std::min(2, p));
        res.lower = std::max(res.lower, b.bound);
    }
    if (p == 1) {
        res.rn = 0;
        res.lower = 0;
        res.witness.label = {0};
        res.has_witness = true;
        return res;
    }

    long long incumbent = cfg.initial_upper_bound
                              ? static_cast<long long>(*cfg.initial_upper_bound) + 1
                              : std::numeric_limits<long long>::max();
    std::vector<int> order(p), best_order;
    std::vector<int> phi(p, 0);
    std::vector<char> used(p, 0);
    bool out_of_time = false;
    const auto start = std::chrono::steady_clock::now();
    auto over_budget = [&]() {
        if (!budgeted) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                   .count() > cfg.time_budget_seconds;
    };

    auto dfs = [&](auto&& self, int depth, long long span) -> void {
        if (out_of_time) return;
        if ((++res.nodes & 0x3ff) == 0 && over_budget()) {
            out_of_time = true;
            return;
        }
        if (depth == p) {
            if (span < incumbent) {
                incumbent = span;
                best_order.assign(order.begin(), order.end());
            }
            return;
        }
        int last = order[depth - 1];
        std::vector<int> cand;
        cand.reserve(p - depth);
        for (int v = 0; v < p; ++v)
            if (!used[v]) cand.push_back(v);
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return d(last, a) > d(last, b); });
        for (int v : cand) {
            long long lab = 0;
            for (int i = 0; i < depth; ++i) {
                long long need = phi[order[i]] + d.diameter + 1 - d(order[i], v);
                if (need > lab) lab = need;
            }
            if (lab + (p - depth - 1) >= incumbent) continue;
            order[depth] = v;
            phi[v] = static_cast<int>(lab);
            used[v] = 1;
            self(self, depth + 1, lab);
            used[v] = 0;
            if (out_of_time) return;
        }
    };

    std::vector<int> starts;
    if (cfg.use_symmetry && p <= 16)
        starts = detail::orbit_representatives(d);
    else {
        starts.resize(p);
        std::iota(starts.begin(), starts.end(), 0);
    }
    for (int s : starts) {
        order[0] = s;
        phi[s] = 0;
        used[s] = 1;
        dfs(dfs, 1, 0);
        used[s] = 0;
        if (out_of_time) break;
    }

    if (!best_order.empty()) {
        res.witness = greedy_min_span(d, best_order);
        res.has_witness = true;
        res.rn = res.witness.span();
    }
    if (out_of_time) {
        res.status = SolveStatus::budget_exhausted;
    } else {
        res.status = SolveStatus::proved_optimal;
        if (res.has_witness)
            res.lower = res.rn;
        else
            res.lower = incumbent;  // exhausted below the supplied upper bound
    }
    return res;
}

/// Independent second oracle: full permutation enumeration, no pruning.
inline long long brute_force_radio_number(const Graph& g, const DistanceMatrix& d) {
    if (g.p > 8)
        throw std::invalid_argument("brute_force_radio_number: p must be <= 8");
    std::vector<int> perm(g.p);
    std::iota(perm.begin(), perm.end(), 0);
    long long best = std::numeric_limits<long long>::max();
    do {
        long long span = greedy_min_span(d, perm).span();
        best = std::min(best, span);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace radiolab

#endif  // RADIOLAB_SOLVER_HPP
