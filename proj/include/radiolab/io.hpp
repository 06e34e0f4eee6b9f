#ifndef RADIOLAB_IO_HPP
#define RADIOLAB_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "radiolab/families.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/layers.hpp"
#include "radiolab/reductions.hpp"
#include "radiolab/solver.hpp"

namespace radiolab {

using nlohmann::json;

/// Edge-list text format: first significant line is p, then `u v` lines;
/// `#` starts a comment, `name u <string>` attaches a display name.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int p = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> names;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "name") {
            int v;
            std::string nm;
            if (!(ls >> v) || !(ls >> nm))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": malformed name line");
            names.emplace_back(v, nm);
            continue;
        }
        if (p < 0) {
            p = std::stoi(first);
            if (p <= 0) throw std::invalid_argument("vertex count must be positive");
            continue;
        }
        int u = std::stoi(first), v;
        if (!(ls >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected `u v`");
        edges.emplace_back(u, v);
    }
    if (p < 0) throw std::invalid_argument("missing vertex count line");
    Graph g = build_graph(p, edges);
    if (!names.empty()) {
        g.names.resize(p);
        for (auto& [v, nm] : names) {
            if (v < 0 || v >= p)
                throw std::invalid_argument("name line vertex out of range");
            g.names[v] = nm;
        }
    }
    return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.p << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    if (!g.names.empty())
        for (int v = 0; v < g.p; ++v)
            if (!g.names[v].empty()) out << "name " << v << " " << g.names[v] << "\n";
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_edge_list(g, out);
}

inline json labeling_to_json(const Labeling& phi, const Ordering* order = nullptr) {
    json labels = json::object();
    for (size_t v = 0; v < phi.label.size(); ++v)
        labels[std::to_string(v)] = phi.label[v];
    json out;
    out["labels"] = std::move(labels);
    if (order) out["ordering"] = *order;
    out["span"] = phi.span();
    return out;
}

inline Labeling labeling_from_json(const json& j, int expected_p) {
    if (!j.contains("labels") || !j["labels"].is_object())
        throw std::invalid_argument("labeling JSON needs a `labels` object");
    Labeling phi;
    phi.label.assign(expected_p, -1);
    for (auto& [key, val] : j["labels"].items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= expected_p)
            throw std::invalid_argument("label for unknown vertex " + key);
        if (!val.is_number_integer() || val.get<long long>() < 0)
            throw std::invalid_argument("label of vertex " + key +
                                        " must be a non-negative integer");
        phi.label[v] = val.get<int>();
    }
    for (int v = 0; v < expected_p; ++v)
        if (phi.label[v] < 0)
            throw std::invalid_argument("missing label for vertex " + std::to_string(v));
    if (j.contains("span") && j["span"].get<long long>() != phi.span())
        throw std::invalid_argument("span field disagrees with labels");
    return phi;
}

inline Ordering ordering_from_json(const json& j, int expected_p) {
    Ordering o = j.get<Ordering>();
    if (!is_permutation_of_vertices(o, expected_p))
        throw std::invalid_argument("ordering is not a permutation of the vertex set");
    return o;
}

inline json bound_report_to_json(const BoundReport& r) {
    return json{{"p", r.p},         {"d", r.d},         {"k", r.k},
                {"delta", r.delta}, {"L", r.total},     {"bound", r.bound},
                {"center", r.center}};
}

inline json verification_to_json(const VerificationReport& r) {
    json v = json::array();
    for (const auto& pv : r.violations)
        v.push_back({{"u", pv.u}, {"v", pv.v}, {"required", pv.required},
                     {"actual", pv.actual}});
    return json{{"valid", r.valid},
                {"span", r.span},
                {"violation_count", r.violation_count},
                {"violations", std::move(v)}};
}

inline json certificate_to_json(const Certificate& c) {
    json out;
    out["certified"] = c.certified;
    out["condition_a"] = c.conditions.a_holds;
    out["condition_b"] = c.conditions.b_holds;
    out["endpoint_level_sum"] = c.conditions.endpoint_level_sum;
    out["bound"] = bound_report_to_json(c.bound);
    if (!c.failure.empty()) out["failure"] = c.failure;
    if (!c.conditions.b_violations.empty()) {
        json v = json::array();
        for (const auto& pv : c.conditions.b_violations)
            v.push_back({{"i", pv.u}, {"j", pv.v}, {"required", pv.required},
                         {"actual", pv.actual}});
        out["condition_b_violations"] = std::move(v);
    }
    if (c.certified) out["valid_radio_labeling"] = c.verification.valid;
    return out;
}

inline json construction_to_json(const ConstructionResult& r) {
    json out = labeling_to_json(r.labeling, &r.ordering);
    out["family"] = family_name(r.spec.family);
    out["m"] = r.spec.m;
    out["n"] = r.spec.n;
    out["closed_form"] = r.closed_form;
    out["outside_hypothesis"] = r.outside_hypothesis;
    out["certificate"] = certificate_to_json(r.certificate);
    return out;
}

inline json solve_result_to_json(const SolveResult& r) {
    json out;
    out["status"] = r.status == SolveStatus::proved_optimal ? "proved-optimal"
                                                            : "budget-exhausted";
    out["rn"] = r.rn;
    out["lower"] = r.lower;
    out["nodes"] = r.nodes;
    if (r.has_witness) {
        json w = labeling_to_json(r.witness);
        out["labels"] = w["labels"];
        out["span"] = w["span"];
    }
    return out;
}

inline json observation_to_json(const ObservationReport& r) {
    return json{{"diam_equal", r.diam_equal},
                {"levels_equal", r.levels_equal},
                {"total_equal", r.total_equal},
                {"distances_dominate", r.distances_dominate},
                {"diam_parent", r.diam_parent},
                {"diam_subgraph", r.diam_subgraph}};
}

inline json deletion_sequence_to_json(const DeletionSequenceReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"edge", {s.edge.first, s.edge.second}},
                         {"certified", s.certified},
                         {"span", s.span},
                         {"bound", s.bound}});
    return json{{"steps", std::move(steps)},
                {"all_certified", r.all_certified},
                {"span_constant", r.span_constant}};
}

}  // namespace radiolab

#endif  // RADIOLAB_IO_HPP
