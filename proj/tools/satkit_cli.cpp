// Command-line front end: reads graphs in the text format, prints JSON on
// stdout and a short summary on stderr.
#include "satkit/constructions.hpp"
#include "satkit/graph.hpp"
#include "satkit/io.hpp"
#include "satkit/json_out.hpp"
#include "satkit/oracle.hpp"
#include "satkit/threshold.hpp"
#include "satkit/weight.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace satkit;

struct GraphSource {
    std::string file;
    int clique = 0;
    int star_leaves = 0;
    std::string cliques;
    std::string seq;

    void add_options(CLI::App* cmd, const std::string& role) {
        cmd->add_option("file", file, "graph file (" + role + ")");
        cmd->add_option("--clique", clique, "use K_k as the " + role);
        cmd->add_option("--star", star_leaves, "use the star K_{1,k} as the " + role);
        cmd->add_option("--cliques", cliques,
                        "use a disjoint clique union p1,p2,... as the " + role);
        cmd->add_option("--seq", seq, "use a threshold sequence over {I,D} as the " + role);
    }

    Graph resolve() const {
        int given = !file.empty() + (clique > 0) + (star_leaves > 0) + !cliques.empty() +
                    !seq.empty();
        if (given != 1)
            throw std::invalid_argument(
                "give exactly one graph source (file, --clique, --star, --cliques or --seq)");
        if (!file.empty()) return read_graph_file(file);
        if (clique > 0) return complete(clique);
        if (star_leaves > 0) return star(star_leaves);
        if (!cliques.empty()) return disjoint_cliques(parse_int_list(cliques));
        return build(parse_sequence(seq));
    }

    static std::vector<int> parse_int_list(const std::string& text) {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
            out.push_back(v);
        }
        if (out.empty()) throw std::invalid_argument("empty integer list");
        return out;
    }
};

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("range must be a:b");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

bool g_json_only = false;

void emit(const json& payload, const std::string& summary) {
    std::cout << payload.dump() << "\n";
    if (!g_json_only) std::cerr << summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph saturation toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json-only", g_json_only, "suppress the stderr summary");

    GraphSource h_source;
    GraphSource g_source;
    GraphSource lift_base;
    int n = 0;
    std::string n_range;
    int workers = 1;
    int ell = 0;
    int k_param = 0;
    std::string kind;
    std::string out_path;
    std::string h_file;

    auto* weight_cmd = app.add_subcommand("weight", "edge weights and the graph weight");
    h_source.add_options(weight_cmd, "graph");

    auto* lb_cmd = app.add_subcommand("lower-bound", "linear saturation lower bound");
    h_source.add_options(lb_cmd, "graph");
    lb_cmd->add_option("--n", n, "evaluate the bound at this order");

    auto* rec_cmd = app.add_subcommand("threshold-recognize", "threshold recognition");
    g_source.add_options(rec_cmd, "graph");

    auto* tw_cmd = app.add_subcommand("threshold-weight", "weight along a threshold sequence");
    std::string tw_seq;
    tw_cmd->add_option("--seq", tw_seq, "sequence over {I,D}")->required();

    auto* con_cmd = app.add_subcommand("construct", "saturated-graph constructions");
    con_cmd->add_option("--kind", kind,
                        "dominating-lift | clique-partition | disjoint-cliques | "
                        "join-lift | threshold")
        ->required();
    con_cmd->add_option("--n", n, "target order")->required();
    con_cmd->add_option("--k", k_param, "clique size (clique-partition)");
    std::string con_cliques;
    std::string con_seq;
    con_cmd->add_option("--cliques", con_cliques, "clique sizes p1,p2,...");
    con_cmd->add_option("--ell", ell, "join depth (join-lift)");
    con_cmd->add_option("--seq", con_seq, "threshold sequence (threshold)");
    con_cmd->add_option("--base", lift_base.file, "base graph file (dominating-lift)");
    con_cmd->add_option("--out", out_path, "write the graph text here");

    auto* verify_cmd = app.add_subcommand("verify", "saturation verdict for G against H");
    g_source.add_options(verify_cmd, "host graph G");
    verify_cmd->add_option("--h-file", h_file, "forbidden graph H from a file");
    int v_clique = 0, v_star = 0;
    std::string v_cliques, v_seq;
    verify_cmd->add_option("--h-clique", v_clique, "H = K_k");
    verify_cmd->add_option("--h-star", v_star, "H = K_{1,k}");
    verify_cmd->add_option("--h-cliques", v_cliques, "H = disjoint clique union");
    verify_cmd->add_option("--h-seq", v_seq, "H from a threshold sequence");

    auto* sat_cmd = app.add_subcommand("sat-exact", "exact saturation number");
    h_source.add_options(sat_cmd, "forbidden graph");
    sat_cmd->add_option("--n", n, "order")->required();
    sat_cmd->add_option("--workers", workers, "worker threads");

    auto* probe_cmd = app.add_subcommand("probe", "saturation slopes across a range");
    h_source.add_options(probe_cmd, "forbidden graph");
    probe_cmd->add_option("--n-range", n_range, "orders a:b")->required();
    probe_cmd->add_option("--workers", workers, "worker threads");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*weight_cmd) {
            auto report = weight_report(h_source.resolve());
            std::string wt = report.graph_weight ? std::to_string(*report.graph_weight) : "inf";
            emit(weight_report_json(report), "graph weight: " + wt);
        } else if (*lb_cmd) {
            Graph h = h_source.resolve();
            if (h.edge_count() == 0) {
                emit(json{{"saturation", "inf"}},
                     "edgeless graph: saturation number is infinite at every order");
            } else {
                auto bound = lower_bound(h);
                json out = lower_bound_json(bound);
                std::string summary = "slope " + to_string(bound.slope);
                if (lb_cmd->count("--n")) {
                    out["n"] = n;
                    out["value"] = to_string(bound.value_at(n));
                    out["integer_value"] = bound.integer_value_at(n);
                    summary += ", bound at n=" + std::to_string(n) + ": " +
                               std::to_string(bound.integer_value_at(n));
                }
                emit(out, summary);
            }
        } else if (*rec_cmd) {
            Graph g = g_source.resolve();
            auto seq = recognize(g);
            json out{{"is_threshold", seq.has_value()}};
            out["sequence"] = seq ? json(to_string(*seq)) : json(nullptr);
            emit(out, seq ? "threshold: sequence " + to_string(*seq) : "not a threshold graph");
        } else if (*tw_cmd) {
            auto state = threshold_weight(parse_sequence(tw_seq));
            emit(automaton_state_json(state),
                 "wt " + (state.wt ? std::to_string(*state.wt) : "inf") + ", satlim " +
                     (state.satlim ? to_string(*state.satlim) : "inf"));
        } else if (*con_cmd) {
            Graph g;
            json params = json::object();
            std::optional<Graph> target;
            if (kind == "dominating-lift") {
                if (lift_base.file.empty())
                    throw std::invalid_argument("dominating-lift needs --base");
                Graph base = read_graph_file(lift_base.file);
                g = dominating_lift(base);
                params["base"] = lift_base.file;
            } else if (kind == "clique-partition") {
                if (k_param < 1) throw std::invalid_argument("clique-partition needs --k");
                g = clique_partition(k_param, n);
                params["k"] = k_param;
                target = star(k_param);
            } else if (kind == "disjoint-cliques") {
                auto p = GraphSource::parse_int_list(con_cliques);
                g = disjoint_cliques_saturated(p, n);
                params["cliques"] = p;
                target = disjoint_cliques(p);
            } else if (kind == "join-lift") {
                auto p = GraphSource::parse_int_list(con_cliques);
                g = join_lift(p, ell, n);
                params["cliques"] = p;
                params["ell"] = ell;
                target = join(complete(ell), disjoint_cliques(p));
            } else if (kind == "threshold") {
                auto seq = parse_sequence(con_seq);
                g = threshold_saturated(seq, n);
                params["seq"] = to_string(seq);
                target = build(seq);
            } else {
                throw std::invalid_argument("unknown construction kind: " + kind);
            }
            json out{{"kind", kind}, {"parameters", params}, {"n", g.order()},
                     {"edge_count", g.edge_count()}};
            if (target) out["target"] = graph_json(*target);
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw std::invalid_argument("cannot write: " + out_path);
                write_graph(file, g);
                out["graph_file"] = out_path;
            } else {
                out["graph_text"] = graph_to_text(g);
            }
            emit(out, kind + ": " + std::to_string(g.order()) + " vertices, " +
                          std::to_string(g.edge_count()) + " edges");
        } else if (*verify_cmd) {
            Graph g = g_source.resolve();
            GraphSource hs;
            hs.file = h_file;
            hs.clique = v_clique;
            hs.star_leaves = v_star;
            hs.cliques = v_cliques;
            hs.seq = v_seq;
            Graph h = hs.resolve();
            auto verdict = verify_saturation(g, h);
            std::string summary = !verdict.is_h_free ? "not H-free"
                                  : verdict.saturated ? "saturated"
                                                      : "H-free but not saturated";
            emit(verdict_json(verdict), summary);
        } else if (*sat_cmd) {
            auto start = std::chrono::steady_clock::now();
            auto result = sat_exact(h_source.resolve(), n, workers);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            json out = sat_result_json(result);
            out["runtime_ms"] = elapsed;
            emit(out, "sat = " + (result.value ? std::to_string(*result.value) : "inf"));
        } else if (*probe_cmd) {
            auto [lo, hi] = parse_range(n_range);
            auto probe = sharpness_probe(h_source.resolve(), lo, hi, workers);
            std::string summary = "weight slope " +
                                  (probe.weight_slope ? to_string(*probe.weight_slope) : "inf");
            emit(probe_json(probe), summary);
        }
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
