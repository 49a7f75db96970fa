// dpcolor: exact DP-coloring toolkit, command-line front end.
//
// Exit codes, uniform across subcommands:
//   0  positive result (sat / valid / certified / computed)
//   1  negative result, certified (unsat / invalid / guarantee fails)
//   2  usage, parse, or resource-limit errors

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpcolor/bounds.hpp"
#include "dpcolor/constructions.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/solver.hpp"
#include "dpcolor/version.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        dpcolor::write_file(out_path, text);
}

struct Common {
    long long node_cap = dpcolor::default_node_cap;
    long long cover_cap = 10'000'000;
    int jobs = 1;
    std::string out;
};

void attach_common(CLI::App* sub, Common& c, bool with_caps = true) {
    sub->add_option("--out", c.out, "Write the primary JSON output to this file");
    if (with_caps) {
        sub->add_option("--node-cap", c.node_cap, "Search-node budget per solve");
        sub->add_option("--cover-cap", c.cover_cap, "Largest cover family a quantifier may scan");
        sub->add_option("--jobs", c.jobs, "Worker threads for cover scanning")
            ->check(CLI::PositiveNumber);
    }
}

dpcolor::SolveOptions to_options(const Common& c) {
    dpcolor::SolveOptions o;
    o.node_cap = c.node_cap;
    o.cover_cap = c.cover_cap;
    o.jobs = c.jobs;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact DP-coloring toolkit"};
    app.set_version_flag("--version", std::string("dpcolor ") + dpcolor::toolkit_version +
                                          " (schema " +
                                          std::to_string(dpcolor::schema_version) + ")");
    app.require_subcommand(1);
    int rc = 0;

    // solve <cover.json>
    auto* solve = app.add_subcommand("solve", "Find a transversal of a cover, or certify none");
    Common solve_c;
    std::string solve_path;
    solve->add_option("cover", solve_path, "Cover JSON file")->required();
    attach_common(solve, solve_c);
    solve->callback([&]() {
        dpcolor::Cover c = dpcolor::load_cover(solve_path);
        auto validation = dpcolor::validate_cover(c);
        if (!validation.ok()) {
            emit(dpcolor::validation_to_json(validation), solve_c.out);
            rc = 1;
            return;
        }
        dpcolor::SolveResult r = dpcolor::find_transversal(c, solve_c.node_cap);
        emit(dpcolor::solve_result_to_json(r), solve_c.out);
        rc = r.satisfiable ? 0 : 1;
    });

    // verify-cover <cover.json>
    auto* verify = app.add_subcommand("verify-cover", "Check the four cover axioms");
    Common verify_c;
    std::string verify_path;
    verify->add_option("cover", verify_path, "Cover JSON file")->required();
    attach_common(verify, verify_c, false);
    verify->callback([&]() {
        dpcolor::Cover c = dpcolor::load_cover(verify_path);
        auto validation = dpcolor::validate_cover(c);
        emit(dpcolor::validation_to_json(validation), verify_c.out);
        rc = validation.ok() ? 0 : 1;
    });

    // chi-dp <graph>
    auto* chidp = app.add_subcommand("chi-dp", "Exact DP-chromatic number of a graph");
    Common chidp_c;
    std::string chidp_path;
    chidp->add_option("graph", chidp_path, "Graph file (.json or edge list)")->required();
    attach_common(chidp, chidp_c);
    chidp->callback([&]() {
        dpcolor::Graph g = dpcolor::load_graph(chidp_path);
        int k = dpcolor::chi_dp(g, to_options(chidp_c));
        nlohmann::json j;
        j["chi_dp"] = k;
        emit(j.dump(2) + "\n", chidp_c.out);
        rc = 0;
    });

    // z-dp <graph> --s-max N
    auto* zdp = app.add_subcommand(
        "z-dp", "Least s making the DP-chromatic number of the s-dominated join collapse");
    Common zdp_c;
    std::string zdp_path;
    int zdp_smax = 0;
    zdp->add_option("graph", zdp_path, "Graph file (.json or edge list)")->required();
    zdp->add_option("--s-max", zdp_smax, "Largest s to try")->required();
    attach_common(zdp, zdp_c);
    zdp->callback([&]() {
        dpcolor::Graph g = dpcolor::load_graph(zdp_path);
        auto s = dpcolor::zdp_exact(g, zdp_smax, to_options(zdp_c));
        nlohmann::json j;
        j["s_max"] = zdp_smax;
        j["z_dp"] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
        emit(j.dump(2) + "\n", zdp_c.out);
        rc = s ? 0 : 1;
    });

    // construct-hard --n N [--refute]
    auto* hard = app.add_subcommand(
        "construct-hard", "Uncolorable cover with lists as large as the chromatic number");
    Common hard_c;
    int hard_n = 0;
    bool hard_refute = false;
    std::string hard_labels;
    hard->add_option("--n", hard_n, "Even base parameter, at least 6")->required();
    hard->add_flag("--refute", hard_refute, "Run the complete search and certify no transversal");
    hard->add_option("--labels", hard_labels, "Write the cover-vertex label table to this file");
    attach_common(hard, hard_c);
    hard->callback([&]() {
        dpcolor::HardInstance h = dpcolor::hard_instance(hard_n);
        dpcolor::HardInstanceReport r =
            dpcolor::verify_hard_instance(hard_n, hard_refute, to_options(hard_c));
        std::string labels_path = hard_labels;
        if (!hard_c.out.empty()) {
            dpcolor::write_file(hard_c.out, dpcolor::cover_to_json(h.cover));
            if (labels_path.empty()) labels_path = hard_c.out + ".labels.json";
            std::cout << dpcolor::hard_report_to_json(r);
        } else {
            nlohmann::json j = nlohmann::json::parse(dpcolor::hard_report_to_json(r));
            j["cover"] = nlohmann::json::parse(dpcolor::cover_to_json(h.cover));
            std::cout << j.dump(2) + "\n";
        }
        if (!labels_path.empty())
            dpcolor::write_file(labels_path, dpcolor::hard_labels_to_json(h));
        bool negative = !r.structure_ok() || r.certified_uncolorable();
        rc = negative ? 1 : 0;
    });

    // bounds <graph>
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for the join threshold");
    Common bounds_c;
    std::string bounds_path;
    bounds->add_option("graph", bounds_path, "Graph file (.json or edge list)")->required();
    attach_common(bounds, bounds_c);
    bounds->callback([&]() {
        dpcolor::Graph g = dpcolor::load_graph(bounds_path);
        dpcolor::BoundsReport b = dpcolor::zdp_upper(g, bounds_c.node_cap);
        dpcolor::ZdpNBounds nb = dpcolor::zdp_n_bounds(g.n);
        emit(dpcolor::bounds_report_to_json(b, nb), bounds_c.out);
        rc = 0;
    });

    // reduce-list <graph> <lists.json>
    auto* reduce = app.add_subcommand("reduce-list",
                                      "Build the cover whose transversals are list colorings");
    Common reduce_c;
    std::string reduce_graph, reduce_lists;
    reduce->add_option("graph", reduce_graph, "Graph file (.json or edge list)")->required();
    reduce->add_option("lists", reduce_lists, "List assignment JSON file")->required();
    attach_common(reduce, reduce_c, false);
    reduce->callback([&]() {
        dpcolor::Graph g = dpcolor::load_graph(reduce_graph);
        dpcolor::ListAssignment la = dpcolor::load_list_assignment(reduce_lists);
        dpcolor::ListCover lc = dpcolor::cover_from_lists(g, la);
        emit(dpcolor::cover_to_json(lc.cover), reduce_c.out);
        rc = 0;
    });

    // sigma <graph> --a-size N --list-sizes ...
    auto* sigma = app.add_subcommand(
        "sigma", "Deficiency check certifying colorability of dominated-join covers");
    Common sigma_c;
    std::string sigma_path;
    long long sigma_a = 0;
    long long sigma_a_min = -1;
    int sigma_k = -1;
    long long sigma_uniform = -1;
    std::vector<long long> sigma_sizes;
    sigma->add_option("graph", sigma_path, "Graph file (.json or edge list)")->required();
    sigma->add_option("--a-size", sigma_a, "Number of dominating vertices")->required();
    sigma->add_option("--list-sizes", sigma_sizes, "Per-vertex list sizes, comma separated")
        ->delimiter(',');
    sigma->add_option("--list-size", sigma_uniform, "Uniform list size for every vertex");
    sigma->add_option("--a-list-min", sigma_a_min,
                      "Smallest list size among dominating vertices");
    sigma->add_option("--k", sigma_k, "Chromatic number (computed exactly when omitted)");
    attach_common(sigma, sigma_c);
    sigma->callback([&]() {
        dpcolor::Graph g = dpcolor::load_graph(sigma_path);
        if (sigma_sizes.empty()) {
            if (sigma_uniform < 0)
                throw CLI::ValidationError("sigma", "give --list-sizes or --list-size");
            sigma_sizes.assign(g.n, sigma_uniform);
        }
        if (sigma_a > 0 && sigma_a_min < 0)
            throw CLI::ValidationError("sigma", "--a-list-min is required when --a-size > 0");
        int k = sigma_k >= 0 ? sigma_k : dpcolor::chromatic_number(g, sigma_c.node_cap);
        dpcolor::SigmaReport r = dpcolor::sigma_report(g, sigma_a, sigma_sizes, sigma_a_min, k);
        emit(dpcolor::sigma_report_to_json(r), sigma_c.out);
        rc = r.certified() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dpcolor::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dpcolor::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
