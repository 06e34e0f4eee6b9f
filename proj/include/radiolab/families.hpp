#ifndef RADIOLAB_FAMILIES_HPP
#define RADIOLAB_FAMILIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "radiolab/distance.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/layers.hpp"

namespace radiolab {

/// Bijection on {1,...,n}, 1-based.
struct Permutation1N {
    int n = 0;
    std::vector<int> fwd;  // fwd[j-1] = image of j

    int operator()(int j) const { return fwd[j - 1]; }

    Permutation1N inverse() const {
        Permutation1N inv;
        inv.n = n;
        inv.fwd.assign(n, 0);
        for (int j = 1; j <= n; ++j) inv.fwd[fwd[j - 1] - 1] = j;
        return inv;
    }
};

namespace detail {
inline void require_bijection(const Permutation1N& perm, const char* what) {
    std::vector<char> hit(perm.n, 0);
    for (int v : perm.fwd) {
        if (v < 1 || v > perm.n || hit[v - 1])
            throw std::runtime_error(std::string(what) +
                                     " is not a bijection for n=" + std::to_string(perm.n));
        hit[v - 1] = 1;
    }
}
inline int ceil_div4(int x) { return (x + 3) / 4; }
}  // namespace detail

/// tau: 1 -> n-1, 2 -> n, j -> j-2 otherwise.
inline Permutation1N tau(int n) {
    if (n < 3) throw std::invalid_argument("tau needs n >= 3");
    Permutation1N perm;
    perm.n = n;
    perm.fwd.resize(n);
    perm.fwd[0] = n - 1;
    perm.fwd[1] = n;
    for (int j = 3; j <= n; ++j) perm.fwd[j - 1] = j - 2;
    detail::require_bijection(perm, "tau");
    return perm;
}

/// sigma sends the residue class of j mod 4 to a contiguous block:
/// sigma(j) = sum_{t=0}^{r-2} ceil((n-t)/4) + ceil(j/4) where r in {1,2,3,4}
/// is the representative of j mod 4 (r = 4 for j = 0 mod 4).
inline Permutation1N sigma(int n) {
    if (n < 4) throw std::invalid_argument("sigma needs n >= 4");
    Permutation1N perm;
    perm.n = n;
    perm.fwd.resize(n);
    for (int j = 1; j <= n; ++j) {
        int r = (j - 1) % 4 + 1;
        int offset = 0;
        for (int t = 0; t <= r - 2; ++t) offset += detail::ceil_div4(n - t);
        perm.fwd[j - 1] = offset + detail::ceil_div4(j);
    }
    detail::require_bijection(perm, "sigma");
    return perm;
}

/// alpha: the 4-rotation 1..4 -> n-3..n, j -> j-4 otherwise.
inline Permutation1N alpha(int n) {
    if (n < 5) throw std::invalid_argument("alpha needs n >= 5");
    Permutation1N perm;
    perm.n = n;
    perm.fwd.resize(n);
    for (int j = 1; j <= 4; ++j) perm.fwd[j - 1] = n - 4 + j;
    for (int j = 5; j <= n; ++j) perm.fwd[j - 1] = j - 4;
    detail::require_bijection(perm, "alpha");
    return perm;
}

enum class Family { path_wheel, path_star, path_friendship, path_complete };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path_wheel: return "path-wheel";
        case Family::path_star: return "path-star";
        case Family::path_friendship: return "path-friendship";
        case Family::path_complete: return "path-complete";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
    if (s == "path-wheel") return Family::path_wheel;
    if (s == "path-star") return Family::path_star;
    if (s == "path-friendship") return Family::path_friendship;
    if (s == "path-complete") return Family::path_complete;
    return std::nullopt;
}

struct FamilySpec {
    Family family = Family::path_wheel;
    int m = 0;
    int n = 0;
};

inline bool within_hypothesis(const FamilySpec& s) {
    switch (s.family) {
        case Family::path_wheel:
        case Family::path_star: return s.m >= 3 && s.n >= 7;
        case Family::path_friendship: return s.m >= 3 && s.n >= 4;
        case Family::path_complete: return s.m >= 4 && s.n >= 3;
    }
    return false;
}

namespace detail {
inline long long half_of_even(long long num, const char* what) {
    if (num % 2 != 0)
        throw std::logic_error(std::string(what) + ": numerator is odd");
    return num / 2;
}
inline long long pw_formula(int m, int n) {
    long long mm = static_cast<long long>(m) * m;
    long long num = m % 2 == 0 ? mm * n + mm + 2 * m - 2 : mm * n + mm + 2 * m + n - 1;
    return half_of_even(num, "path-wheel radio number");
}
inline long long pk_formula(int m, int n) {
    long long mm = static_cast<long long>(m) * m;
    long long num = m % 2 == 0 ? mm * n - 2 * m + 2 : mm * n - 2 * m + n + 2;
    return half_of_even(num, "path-complete radio number");
}
}  // namespace detail

inline long long pw_radio_number(int m, int n) {
    if (m < 3 || n < 7) throw std::invalid_argument("pw_radio_number needs m >= 3, n >= 7");
    return detail::pw_formula(m, n);
}

inline long long star_radio_number(int m, int n) {
    if (m < 3 || n < 7) throw std::invalid_argument("star_radio_number needs m >= 3, n >= 7");
    return detail::pw_formula(m, n);  // identical to the wheel value
}

inline long long friendship_radio_number(int m, int n) {
    if (m < 3 || n < 4) throw std::invalid_argument("friendship_radio_number needs m >= 3, n >= 4");
    return detail::pw_formula(m, 2 * n);  // F_n inherits from W_{2n}
}

inline long long complete_radio_number(int m, int n) {
    if (m < 4 || n < 3) throw std::invalid_argument("complete_radio_number needs m >= 4, n >= 3");
    return detail::pk_formula(m, n);
}

/// Hub-column center of P_m box (W_n / K_{1,n} / F_n): the middle fiber pair
/// for even m, the single middle fiber hub for odd m. fiber = order of the
/// second factor.
inline std::vector<int> pw_center_ids(int m, int fiber) {
    if (m % 2 == 0) return {(m / 2 - 1) * fiber, (m / 2) * fiber};
    return {(m - 1) / 2 * fiber};
}

inline CenterSet pw_center(const Graph& g, const DistanceMatrix& d, int m, int fiber) {
    return make_center(g, d, pw_center_ids(m, fiber));
}

/// The paper ordering of V(P_m box W_n). Vertex (u_i, v_j) is renamed
/// (a_i, b_{pi_i(j)}) with pi_i in {id, tau, alpha, sigma tau, sigma}
/// depending on the row band of i (and b_0 for j = 0); the renamed indices
/// (r, s) determine the ordering slot. Any slot collision is a hard error.
inline Ordering pw_ordering(int m, int n) {
    if (m < 3) throw std::invalid_argument("pw_ordering needs m >= 3");
    if (n < 3) throw std::invalid_argument("pw_ordering needs n >= 3");
    const int fiber = n + 1;
    const int p = m * fiber;
    Ordering order(p, -1);
    auto place = [&](int t, int i, int j) {
        if (t < 0 || t >= p || order[t] != -1)
            throw std::runtime_error("pw_ordering: slot index collision at t=" +
                                     std::to_string(t));
        order[t] = (i - 1) * fiber + j;
    };
    if (m % 2 == 0) {
        const Permutation1N sig = sigma(n);
        const Permutation1N ta = tau(n);
        const int half = m / 2;
        for (int i = 1; i <= m; ++i) {
            const bool left = i <= half;
            for (int j = 0; j <= n; ++j) {
                const int s = j == 0 ? 0 : (left ? sig(ta(j)) : sig(j));
                int t;
                if (left)
                    t = 2 * (half - i) * fiber + 2 * s;
                else
                    t = s == 0 ? 2 * (m - i + 1) * fiber - 1
                               : 2 * (m - i) * fiber + 2 * s - 1;
                place(t, i, j);
            }
        }
    } else {
        const int mid = (m + 1) / 2;
        const Permutation1N ta = tau(n);
        const Permutation1N al = alpha(n);
        std::optional<Permutation1N> sig;
        if (m >= 5) sig = sigma(n);
        for (int i = 1; i <= m; ++i) {
            for (int j = 0; j <= n; ++j) {
                int s;
                if (j == 0)
                    s = 0;
                else if (i == 1)
                    s = ta(j);
                else if (i == mid)
                    s = al(j);
                else if (i == m)
                    s = j;
                else if (i < mid)
                    s = (*sig)(ta(j));
                else
                    s = (*sig)(j);
                int t;
                if (i == 1)
                    t = s == 0 ? 3 * n + 2 : 3 * s - 1;
                else if (i == mid)
                    t = s == 0 ? 0 : 3 * s;
                else if (i == m)
                    t = s == 0 ? 3 * n + 1 : 3 * s - 2;
                else if (i < mid)
                    t = s == 0 ? 3 * n + 2 + 2 * (i - 1) * fiber
                               : 3 * n + 2 + 2 * (i - 2) * fiber + 2 * s;
                else
                    t = s == 0 ? 3 * n + 2 + 2 * (i - mid) * fiber - 1
                               : 3 * n + 2 + 2 * (i - mid - 1) * fiber + 2 * s - 1;
                place(t, i, j);
            }
        }
    }
    for (int t = 0; t < p; ++t)
        if (order[t] < 0) throw std::runtime_error("pw_ordering: unfilled slot");
    return order;
}

struct ConstructionResult {
    FamilySpec spec;
    bool has_construction = true;
    bool outside_hypothesis = false;
    Graph graph;
    DistanceMatrix dist;
    CenterSet center;
    Ordering ordering;
    Labeling labeling;
    long long closed_form = 0;
    Certificate certificate;
};

/// Builds the family instance and, except for path-complete (closed form
/// only), its ordering, labeling and certificate. Star and friendship
/// products share the wheel product's vertex index space, so the wheel
/// ordering carries over verbatim and is re-certified against the
/// subgraph's own metric. Certification failure inside the theorem
/// hypothesis is a hard error.
inline ConstructionResult build_family(const FamilySpec& spec,
                                       bool allow_outside_hypothesis = false) {
    ConstructionResult res;
    res.spec = spec;
    res.outside_hypothesis = !within_hypothesis(spec);
    if (res.outside_hypothesis && !allow_outside_hypothesis)
        throw std::invalid_argument(std::string(family_name(spec.family)) +
                                    " parameters (m=" + std::to_string(spec.m) +
                                    ", n=" + std::to_string(spec.n) +
                                    ") below theorem hypothesis");
    const int m = spec.m, n = spec.n;
    switch (spec.family) {
        case Family::path_wheel:
            res.graph = cartesian_product(path(m), wheel(n));
            res.ordering = pw_ordering(m, n);
            res.closed_form = detail::pw_formula(m, n);
            break;
        case Family::path_star:
            res.graph = cartesian_product(path(m), star(n));
            res.ordering = pw_ordering(m, n);
            res.closed_form = detail::pw_formula(m, n);
            break;
        case Family::path_friendship:
            res.graph = cartesian_product(path(m), friendship(n));
            res.ordering = pw_ordering(m, 2 * n);
            res.closed_form = detail::pw_formula(m, 2 * n);
            break;
        case Family::path_complete:
            res.graph = cartesian_product(path(m), complete(n));
            res.closed_form = detail::pk_formula(m, n);
            res.has_construction = false;
            break;
    }
    res.dist = all_pairs_distances(res.graph);
    if (!res.has_construction) return res;
    const int fiber = spec.family == Family::path_friendship ? 2 * n + 1 : n + 1;
    res.center = pw_center(res.graph, res.dist, m, fiber);
    res.certificate = certify_optimal(res.graph, res.dist, res.center, res.ordering);
    res.labeling = res.certificate.labeling;
    if (!res.certificate.certified && !res.outside_hypothesis)
        throw std::runtime_error(std::string(family_name(spec.family)) + " (m=" +
                                 std::to_string(m) + ", n=" + std::to_string(n) +
                                 ") failed certification: " + res.certificate.failure);
    return res;
}

}  // namespace radiolab

#endif  // RADIOLAB_FAMILIES_HPP
