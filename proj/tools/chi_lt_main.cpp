// chi-lt — build, label, verify, bound and solve local total antimagic
// labelings from the command line. All output is deterministic JSON/DOT.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ltat/bounds.hpp"
#include "ltat/constructions.hpp"
#include "ltat/graph.hpp"
#include "ltat/json_io.hpp"
#include "ltat/labeling.hpp"
#include "ltat/solver.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ltat::error(ltat::errc::malformed_input, "cannot write " + path);
    out << text;
}

ltat::ConstructionResult run_construction(const std::string& name, int m, int n, int a) {
    using ltat::SmallCycle;
    if (name == "mC6") return ltat::label_mC6(m);
    if (name == "mC6+P6") return ltat::label_mC6_P6(m);
    if (name == "C3") return ltat::label_small_cycle(SmallCycle::C3);
    if (name == "C5") return ltat::label_small_cycle(SmallCycle::C5);
    if (name == "C8") return ltat::label_small_cycle(SmallCycle::C8);
    if (name == "mC4") return ltat::label_mC4(m);
    if (name == "mC6+nP3") return ltat::label_mC6_nP3(m, n);
    if (name == "mC6+nP6") return ltat::label_mC6_nP6(m, n);
    if (name == "mC6+nP6+aP3") return ltat::label_mC6_nP6_aP3(m, n, a);
    throw ltat::error(ltat::errc::invalid_parameter,
                      "unknown construction \"" + name +
                          "\" (expected one of: mC6, mC6+P6, C3, C5, C8, mC4, "
                          "mC6+nP3, mC6+nP6, mC6+nP6+aP3)");
}

nlohmann::json construction_bundle(const ltat::ConstructionResult& r) {
    nlohmann::json j;
    j["graph"] = ltat::graph_to_json(r.graph);
    j["labeling"] = ltat::labeling_to_json(r.labeling);
    j["report"] = ltat::report_to_json(r.report);
    j["predicted_colors"] = r.predicted_colors;
    if (r.predicted_weights) j["predicted_weights"] = *r.predicted_weights;
    j["provenance"] = r.provenance;
    if (r.warning) j["warning"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

int emit_construction(const ltat::ConstructionResult& r, const std::string& out_prefix,
                      const std::string& dot_path) {
    nlohmann::json bundle = construction_bundle(r);
    if (!out_prefix.empty()) {
        ltat::save_json(out_prefix + ".graph.json", bundle["graph"]);
        ltat::save_json(out_prefix + ".labeling.json", bundle["labeling"]);
        ltat::save_json(out_prefix + ".report.json", bundle["report"]);
    }
    if (!dot_path.empty()) write_text(dot_path, ltat::to_dot(r.graph, &r.labeling));
    std::cout << bundle.dump(2) << "\n";
    return r.verified() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local total antimagic labelings and chi_lt"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a plain graph (no labeling)");
    std::string build_family;
    int build_n = 0, build_k = 0, build_copies = 1;
    std::string build_out, build_dot;
    build->add_option("family", build_family, "path | cycle | fan | fan-pendant")->required();
    build->add_option("--n", build_n, "order (path/cycle) or triangle count (fans)")->required();
    build->add_option("--k", build_k, "pendant edges per rim vertex (fan-pendant)");
    build->add_option("--copies", build_copies, "disjoint copies")->default_val(1);
    build->add_option("-o,--out", build_out, "write graph JSON here");
    build->add_option("--dot", build_dot, "write DOT here");

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph with its labeling");
    std::string cons_name, cons_out, cons_dot;
    int cons_m = 1, cons_n = 1, cons_a = 2;
    construct->add_option("name", cons_name, "family name, e.g. mC6, mC4, mC6+nP3")->required();
    construct->add_option("--m", cons_m, "C6 copies");
    construct->add_option("--n", cons_n, "path copies");
    construct->add_option("--a", cons_a, "P3 copies (mC6+nP6+aP3)");
    construct->add_option("-o,--out", cons_out, "output prefix (.graph/.labeling/.report.json)");
    construct->add_option("--dot", cons_dot, "write DOT here");

    // verify
    auto* verify = app.add_subcommand("verify", "check a labeling against a graph");
    std::string ver_graph, ver_labeling;
    verify->add_option("graph", ver_graph, "graph JSON")->required();
    verify->add_option("labeling", ver_labeling, "labeling JSON")->required();

    // weights
    auto* weights = app.add_subcommand("weights", "induced weights of a labeling");
    std::string wt_graph, wt_labeling;
    weights->add_option("graph", wt_graph, "graph JSON")->required();
    weights->add_option("labeling", wt_labeling, "labeling JSON")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds on chi_lt");
    std::string bd_graph;
    bounds->add_option("graph", bd_graph, "graph JSON")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "structural classifications");
    std::string cls_what, cls_graph;
    classify->add_option("what", cls_what, "chi3 | components")->required();
    classify->add_option("--graph", cls_graph, "graph JSON")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "exact chi_lt search");
    std::string sol_graph;
    std::optional<int> sol_max_colors;
    long long sol_nodes = 1'000'000'000;
    double sol_secs = 0;
    int sol_threads = 1;
    solve->add_option("graph", sol_graph, "graph JSON")->required();
    solve->add_option("--max-colors", sol_max_colors, "existence query: chi_lt <= t?");
    solve->add_option("--budget-nodes", sol_nodes, "search node limit");
    solve->add_option("--budget-secs", sol_secs, "wall-clock limit (0 = none)");
    solve->add_option("--threads", sol_threads, "accepted for interface parity; search is serial");

    // extend
    auto* extend = app.add_subcommand("extend", "attach labeled pendant blocks to a construction");
    std::string ext_name, ext_role, ext_out, ext_dot;
    int ext_m = 1, ext_n = 1, ext_a = 2, ext_k = 0, ext_s = 0;
    extend->add_option("name", ext_name, "base construction name")->required();
    extend->add_option("--m", ext_m, "C6 copies");
    extend->add_option("--n", ext_n, "path copies");
    extend->add_option("--a", ext_a, "P3 copies");
    extend->add_option("--target", ext_role, "role tag of the target vertex")->required();
    extend->add_option("--k", ext_k, "block width (must equal the target's label)")->required();
    extend->add_option("--s", ext_s, "block count")->required();
    extend->add_option("-o,--out", ext_out, "output prefix");
    extend->add_option("--dot", ext_dot, "write DOT here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed()) {
            ltat::Graph unit;
            if (build_family == "path") unit = ltat::build_path(build_n);
            else if (build_family == "cycle") unit = ltat::build_cycle(build_n);
            else if (build_family == "fan") unit = ltat::build_fan(build_n);
            else if (build_family == "fan-pendant") unit = ltat::build_fan_pendant(build_n, build_k);
            else throw ltat::error(ltat::errc::invalid_parameter,
                                   "unknown family \"" + build_family + "\"");
            if (build_copies < 1)
                throw ltat::error(ltat::errc::invalid_parameter, "--copies must be >= 1");
            ltat::Graph g = build_copies == 1
                                ? std::move(unit)
                                : ltat::disjoint_union(std::vector<ltat::Graph>(build_copies, unit));
            nlohmann::json j = ltat::graph_to_json(g);
            if (!build_out.empty()) ltat::save_json(build_out, j);
            if (!build_dot.empty()) write_text(build_dot, ltat::to_dot(g));
            std::cout << j.dump(2) << "\n";
            return kExitPass;
        }
        if (construct->parsed())
            return emit_construction(run_construction(cons_name, cons_m, cons_n, cons_a),
                                     cons_out, cons_dot);
        if (verify->parsed()) {
            ltat::Graph g = ltat::graph_from_json(ltat::load_json(ver_graph));
            ltat::TotalLabeling f = ltat::labeling_from_json(ltat::load_json(ver_labeling));
            ltat::VerificationReport report = ltat::verify_ltal(g, f);
            std::cout << ltat::report_to_json(report).dump(2) << "\n";
            return report.valid ? kExitPass : kExitFail;
        }
        if (weights->parsed()) {
            ltat::Graph g = ltat::graph_from_json(ltat::load_json(wt_graph));
            ltat::TotalLabeling f = ltat::labeling_from_json(ltat::load_json(wt_labeling));
            std::cout << ltat::weight_profile_to_json(ltat::weight_profile(g, f)).dump(2)
                      << "\n";
            return kExitPass;
        }
        if (bounds->parsed()) {
            ltat::Graph g = ltat::graph_from_json(ltat::load_json(bd_graph));
            std::cout << ltat::bound_report_to_json(ltat::lower_bound(g)).dump(2) << "\n";
            return kExitPass;
        }
        if (classify->parsed()) {
            ltat::Graph g = ltat::graph_from_json(ltat::load_json(cls_graph));
            if (cls_what == "chi3") {
                bool yes = ltat::classify_chi3(g);
                std::cout << (yes ? "true" : "false") << "\n";
                return yes ? kExitPass : kExitFail;
            }
            if (cls_what == "components") {
                ltat::ComponentSummary s = ltat::classify_components(g);
                nlohmann::json j = nlohmann::json::array();
                for (const auto& [cls, mult] : s.classes) {
                    const char* kind = cls.kind == ltat::ComponentKind::Cycle
                                           ? "cycle"
                                           : cls.kind == ltat::ComponentKind::Path ? "path"
                                                                                   : "other";
                    j.push_back({{"kind", kind}, {"order", cls.order}, {"count", mult}});
                }
                std::cout << j.dump(2) << "\n";
                return kExitPass;
            }
            throw ltat::error(ltat::errc::invalid_parameter,
                              "unknown classification \"" + cls_what + "\"");
        }
        if (solve->parsed()) {
            ltat::Graph g = ltat::graph_from_json(ltat::load_json(sol_graph));
            ltat::SearchBudget budget;
            budget.node_limit = sol_nodes;
            budget.time_limit_secs = sol_secs;
            ltat::SolveResult r = sol_max_colors
                                      ? ltat::exists_ltal_with_colors(g, *sol_max_colors, budget)
                                      : ltat::solve_chi_lt(g, budget);
            std::cout << ltat::solve_result_to_json(r).dump(2) << "\n";
            switch (r.status) {
                case ltat::SolveResult::Status::Feasible:
                case ltat::SolveResult::Status::Exact:
                    return kExitPass;
                case ltat::SolveResult::Status::Infeasible:
                    return kExitFail;
                default:
                    return kExitBudget;
            }
        }
        if (extend->parsed()) {
            ltat::ConstructionResult base = run_construction(ext_name, ext_m, ext_n, ext_a);
            auto target = base.graph.find_tag(ext_role);
            if (!target)
                throw ltat::error(ltat::errc::extension_spec_invalid,
                                  "no element tagged \"" + ext_role + "\"");
            ltat::ConstructionResult r =
                ltat::extend_pendants(base, ltat::ExtensionSpec{*target, ext_k, ext_s});
            return emit_construction(r, ext_out, ext_dot);
        }
    } catch (const ltat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
