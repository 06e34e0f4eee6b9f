// radiolab: generate, label, verify, bound, reduce and solve radio labelings.
// Exit codes: 0 success/valid, 2 input error, 3 verification or certification
// failure, 4 search budget exhausted.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "radiolab/radiolab.hpp"

using namespace radiolab;

namespace {

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RADIOLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return static_cast<int>(hw);
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) ids.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (ids.empty()) throw std::invalid_argument("empty vertex list");
    return ids;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range " + text);
    return {lo, hi};
}

Family parse_family_or_throw(const std::string& name) {
    if (auto f = parse_family(name)) return *f;
    throw std::invalid_argument("unknown family: " + name +
                                " (expected path-wheel, path-star, "
                                "path-friendship or path-complete)");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

struct GridRow {
    int m = 0, n = 0;
    long long closed_form = 0;
    long long span = -1;
    long long bound = 0;
    bool certified = false;
    std::string error;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radio labeling toolkit: bounds, optimal constructions, "
                 "verification and exact search"};
    app.require_subcommand(1);

    std::string family_name_arg, graph_path, labeling_path, center_spec, out_path;
    std::string m_range = "0", n_range = "0";
    int m = 0, n = 0, max_center_size = 2, max_vertices = 12;
    double budget = 0;
    bool auto_center = false, allow_outside = false;
    std::optional<int> upper_bound;

    auto add_family_opts = [&](CLI::App* cmd, bool need_mn) {
        cmd->add_option("--family", family_name_arg,
                        "path-wheel | path-star | path-friendship | path-complete")
            ->required();
        cmd->add_option("-m", m, "path length")->required(need_mn);
        cmd->add_option("-n", n, "second-factor parameter")->required(need_mn);
        cmd->add_flag("--allow-outside-hypothesis", allow_outside,
                      "permit parameters outside the theorem hypothesis "
                      "(results flagged, certification reported as computed)");
    };

    CLI::App* gen = app.add_subcommand("gen", "write a family graph as an edge list");
    add_family_opts(gen, true);
    gen->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* label = app.add_subcommand(
        "label", "construct the optimal labeling of a family instance");
    add_family_opts(label, true);
    label->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check a labeling file against a graph");
    verify->add_option("--graph", graph_path, "edge-list file")->required();
    verify->add_option("--labeling", labeling_path, "labeling JSON file")->required();

    CLI::App* bound = app.add_subcommand("bound", "Theorem-1 style lower bound report");
    bound->add_option("--graph", graph_path, "edge-list file")->required();
    bound->add_option("--center", center_spec, "comma-separated vertex ids for L_0");
    bound->add_flag("--auto", auto_center, "maximise over candidate centers");
    bound->add_option("--max-center-size", max_center_size,
                      "candidate |L_0| cap for --auto (default 2)");

    CLI::App* exact = app.add_subcommand("exact", "exact radio number by branch and bound");
    exact->add_option("--graph", graph_path, "edge-list file")->required();
    exact->add_option("--budget", budget, "time budget in seconds (0 = unlimited)");
    exact->add_option("--max-vertices", max_vertices,
                      "hard vertex cap when no budget is given (default 12)");
    exact->add_option("--upper-bound", upper_bound, "known upper bound to seed pruning");

    CLI::App* mdst_cmd = app.add_subcommand(
        "mdst", "minimum distance spanning tree rooted at a center");
    mdst_cmd->add_option("--graph", graph_path, "edge-list file")->required();
    mdst_cmd->add_option("--center", center_spec, "comma-separated vertex ids")->required();

    CLI::App* reduce = app.add_subcommand(
        "reduce", "edge-deletion sequence down to the rooted spanning tree");
    reduce->add_option("--family", family_name_arg, "family to build and reduce");
    reduce->add_option("-m", m, "path length");
    reduce->add_option("-n", n, "second-factor parameter");
    reduce->add_option("--graph", graph_path, "edge-list file (with --center/--labeling)");
    reduce->add_option("--center", center_spec, "comma-separated vertex ids");
    reduce->add_option("--labeling", labeling_path,
                       "labeling JSON supplying the certified ordering");

    CLI::App* grid = app.add_subcommand(
        "grid", "certify a family over a parameter grid");
    grid->add_option("family", family_name_arg, "family name")->required();
    grid->add_option("m-range", m_range, "e.g. 3..8")->required();
    grid->add_option("n-range", n_range, "e.g. 7..10")->required();
    grid->add_flag("--allow-outside-hypothesis", allow_outside,
                   "permit grid points outside the theorem hypothesis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            FamilySpec spec{parse_family_or_throw(family_name_arg), m, n};
            ConstructionResult res = build_family(spec, allow_outside);
            if (res.outside_hypothesis)
                std::cerr << "note: parameters outside theorem hypothesis\n";
            if (out_path.empty()) {
                write_edge_list(res.graph, std::cout);
            } else {
                save_graph(res.graph, out_path);
            }
            return 0;
        }

        if (label->parsed()) {
            FamilySpec spec{parse_family_or_throw(family_name_arg), m, n};
            if (spec.family == Family::path_complete)
                throw std::invalid_argument(
                    "path-complete has a closed form but no construction here; "
                    "use `bound` or `exact`");
            ConstructionResult res = build_family(spec, allow_outside);
            emit(construction_to_json(res), out_path);
            if (res.outside_hypothesis)
                std::cerr << "note: parameters outside theorem hypothesis; "
                          << (res.certificate.certified ? "certification passed anyway"
                                                        : "not certified")
                          << "\n";
            return res.certificate.certified ? 0 : 3;
        }

        if (verify->parsed()) {
            Graph g = load_graph(graph_path);
            DistanceMatrix d = all_pairs_distances(g);
            Labeling phi = labeling_from_json(load_json(labeling_path), g.p);
            VerificationReport rep = is_radio_labeling(g, d, phi);
            emit(verification_to_json(rep), "");
            if (!rep.valid)
                std::cerr << "invalid: " << rep.violation_count
                          << " violated pair(s)\n";
            return rep.valid ? 0 : 3;
        }

        if (bound->parsed()) {
            if (auto_center == center_spec.empty())
                throw std::invalid_argument("bound needs exactly one of --center or --auto");
            Graph g = load_graph(graph_path);
            DistanceMatrix d = all_pairs_distances(g);
            BoundReport rep;
            if (auto_center) {
                rep = best_lower_bound(g, d, std::min(max_center_size, g.p));
            } else {
                rep = lower_bound(g, d, make_center(g, d, parse_id_list(center_spec)));
            }
            emit(bound_report_to_json(rep), "");
            return 0;
        }

        if (exact->parsed()) {
            Graph g = load_graph(graph_path);
            DistanceMatrix d = all_pairs_distances(g);
            SolverConfig cfg;
            cfg.time_budget_seconds = budget;
            cfg.max_vertices = max_vertices;
            cfg.initial_upper_bound = upper_bound;
            SolveResult res = exact_radio_number(g, d, cfg);
            emit(solve_result_to_json(res), "");
            if (res.status == SolveStatus::budget_exhausted) {
                std::cerr << "budget exhausted: rn in [" << res.lower << ", "
                          << (res.has_witness ? std::to_string(res.rn) : "?") << "]\n";
                return 4;
            }
            return 0;
        }

        if (mdst_cmd->parsed()) {
            Graph g = load_graph(graph_path);
            DistanceMatrix d = all_pairs_distances(g);
            CenterSet c = make_center(g, d, parse_id_list(center_spec));
            RootedSpanningSubgraph t = mdst(g, d, c);
            json edges = json::array();
            for (auto [u, v] : t.kept_edges) edges.push_back({u, v});
            json out{{"kept_edges", std::move(edges)},
                     {"center", c.vertices},
                     {"observation", observation_to_json(
                                         check_observation(g, d, to_graph(t, g), c))}};
            emit(out, "");
            return 0;
        }

        if (reduce->parsed()) {
            Graph g;
            CenterSet c;
            Ordering order;
            if (!family_name_arg.empty()) {
                FamilySpec spec{parse_family_or_throw(family_name_arg), m, n};
                ConstructionResult res = build_family(spec, allow_outside);
                if (!res.has_construction)
                    throw std::invalid_argument("no construction for this family");
                g = std::move(res.graph);
                c = std::move(res.center);
                order = std::move(res.ordering);
            } else {
                if (graph_path.empty() || center_spec.empty() || labeling_path.empty())
                    throw std::invalid_argument(
                        "reduce needs --family -m -n, or --graph --center --labeling");
                g = load_graph(graph_path);
                DistanceMatrix dg = all_pairs_distances(g);
                c = make_center(g, dg, parse_id_list(center_spec));
                json j = load_json(labeling_path);
                if (j.contains("ordering")) {
                    order = ordering_from_json(j["ordering"], g.p);
                } else {
                    Labeling phi = labeling_from_json(j, g.p);
                    order = check_theorem2_conditions(g, dg, c, phi).induced;
                }
            }
            DistanceMatrix d = all_pairs_distances(g);
            RootedSpanningSubgraph t = mdst(g, d, c);
            DeletionSequenceReport rep = edge_deletion_sequence(g, t, c, order);
            emit(deletion_sequence_to_json(rep), "");
            if (!rep.all_certified) std::cerr << "some steps failed certification\n";
            return rep.all_certified ? 0 : 3;
        }

        if (grid->parsed()) {
            Family fam = parse_family_or_throw(family_name_arg);
            if (fam == Family::path_complete)
                throw std::invalid_argument("grid needs a family with a construction");
            auto [mlo, mhi] = parse_range(m_range);
            auto [nlo, nhi] = parse_range(n_range);
            std::vector<GridRow> rows;
            for (int mm = mlo; mm <= mhi; ++mm)
                for (int nn = nlo; nn <= nhi; ++nn) {
                    GridRow row;
                    row.m = mm;
                    row.n = nn;
                    rows.push_back(std::move(row));
                }
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
                    GridRow& row = rows[i];
                    try {
                        ConstructionResult res =
                            build_family({fam, row.m, row.n}, allow_outside);
                        row.closed_form = res.closed_form;
                        row.bound = res.certificate.bound.bound;
                        row.certified = res.certificate.certified;
                        if (res.certificate.certified) row.span = res.labeling.span();
                    } catch (const std::exception& e) {
                        row.error = e.what();
                    }
                }
            };
            int nthreads = std::min<int>(thread_cap(), static_cast<int>(rows.size()));
            std::vector<std::thread> pool;
            for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
            worker();
            for (auto& th : pool) th.join();
            json out = json::array();
            bool all = true;
            for (const GridRow& row : rows) {
                json r{{"m", row.m},
                       {"n", row.n},
                       {"closed_form", row.closed_form},
                       {"span", row.span},
                       {"bound", row.bound},
                       {"certified", row.certified}};
                if (!row.error.empty()) r["error"] = row.error;
                all = all && row.certified;
                out.push_back(std::move(r));
            }
            emit(out, "");
            return all ? 0 : 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
