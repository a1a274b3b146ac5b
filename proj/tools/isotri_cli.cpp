#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isotri/candidates.hpp"
#include "isotri/geometry.hpp"
#include "isotri/lemmas.hpp"
#include "isotri/nonspecial.hpp"
#include "isotri/oracle.hpp"
#include "isotri/reference.hpp"
#include "isotri/solver.hpp"
#include "isotri/svg.hpp"

using nlohmann::json;
using namespace isotri;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr double kRad2Deg = 180.0 / std::numbers::pi;

// machine output carries 12 significant digits
double sig12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return std::stod(os.str());
}

std::string fmt6(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

struct TriangleInput {
    std::string vertices;  // "x,y x,y x,y"
    std::string sides;     // "a,b,c"
};

void add_input_flags(CLI::App* cmd, TriangleInput& in) {
    auto* v = cmd->add_option("--vertices", in.vertices,
                              "three vertices as \"x,y x,y x,y\"");
    auto* s = cmd->add_option("--sides", in.sides,
                              "side lengths a,b,c (canonical placement)");
    v->excludes(s);
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::istringstream ts(token);
        double head;
        if (!(ts >> head)) throw std::runtime_error("bad number: " + token);
        out.push_back(head);
        double more;
        while (ts >> more) out.push_back(more);
    }
    return out;
}

Triangle parse_triangle(const TriangleInput& in) {
    if (!in.sides.empty()) {
        auto n = parse_numbers(in.sides);
        if (n.size() != 3) throw std::runtime_error("--sides wants 3 numbers");
        return triangle_from_sides(n[0], n[1], n[2]);
    }
    if (!in.vertices.empty()) {
        auto n = parse_numbers(in.vertices);
        if (n.size() != 6) {
            throw std::runtime_error("--vertices wants 3 \"x,y\" pairs");
        }
        return Triangle({n[0], n[1]}, {n[2], n[3]}, {n[4], n[5]});
    }
    throw std::runtime_error("give --vertices or --sides");
}

json triangle_json(const Triangle& t) {
    json v = json::array();
    for (int i = 0; i < 3; ++i) {
        v.push_back({sig12(t[i].x), sig12(t[i].y)});
    }
    return v;
}

json candidate_json(const Candidate& c, bool with_vertices) {
    json j{{"kind", c.kind.name()},
           {"exists", c.exists},
           {"valid", c.valid},
           {"area", sig12(c.area)},
           {"perimeter", sig12(c.perimeter)}};
    if (!c.note.empty()) j["note"] = c.note;
    if (with_vertices && c.triangle) j["vertices"] = triangle_json(*c.triangle);
    return j;
}

void print_table(const SolveResult& res) {
    std::cout << std::left << std::setw(14) << "kind" << std::setw(8)
              << "exists" << std::setw(7) << "valid" << std::setw(13) << "area"
              << std::setw(13) << "perimeter"
              << "note\n";
    for (const Candidate& c : res.table) {
        std::cout << std::setw(14) << c.kind.name() << std::setw(8)
                  << (c.exists ? "yes" : "no") << std::setw(7)
                  << (c.valid ? "yes" : "no");
        if (c.exists) {
            std::cout << std::setw(13) << fmt6(c.area) << std::setw(13)
                      << fmt6(c.perimeter);
        } else {
            std::cout << std::setw(13) << "-" << std::setw(13) << "-";
        }
        std::cout << c.note << "\n";
    }
}

int cmd_solve(const TriangleInput& in, const std::string& problem_str,
              bool with_oracle, bool as_json, const std::string& svg_path,
              bool svg_all, double svg_scale) {
    auto t0 = std::chrono::steady_clock::now();
    Triangle t = parse_triangle(in);
    auto problem = parse_problem(problem_str);
    if (!problem) throw std::runtime_error("unknown problem " + problem_str);
    SolveResult res = solve(t, *problem);

    bool oracle_ok = true;
    OracleResult orc;
    if (with_oracle) {
        orc = oracle_solve(t, *problem);
        oracle_ok = std::abs(orc.value - res.optimum) <=
                    1e-3 * std::abs(res.optimum);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();

    if (!svg_path.empty()) {
        std::vector<SvgItem> items;
        const auto& list = svg_all ? res.table : res.winners;
        const char* metric_kind =
            is_area_problem(*problem) ? "area" : "perimeter";
        for (const Candidate& c : list) {
            if (!c.triangle) continue;
            items.push_back({*c.triangle,
                             c.kind.name() + std::string(" ") + metric_kind,
                             is_area_problem(*problem) ? c.area : c.perimeter});
        }
        write_svg(svg_path, t, items, svg_scale);
    }

    if (as_json) {
        json doc{{"version", kVersion},
                 {"command", "solve"},
                 {"problem", problem_name(*problem)},
                 {"input", {{"vertices", triangle_json(t)}}},
                 {"optimum", sig12(res.optimum)},
                 {"timing_ms", sig12(ms)}};
        doc["winners"] = json::array();
        for (const Candidate& c : res.winners) {
            json w = candidate_json(c, true);
            w["shares_side_and_angle"] = res.shares_side_and_angle;
            doc["winners"].push_back(w);
        }
        doc["candidates"] = json::array();
        for (const Candidate& c : res.table) {
            doc["candidates"].push_back(candidate_json(c, false));
        }
        if (with_oracle) {
            doc["oracle"] = {{"value", sig12(orc.value)},
                             {"gamma_deg", sig12(orc.pose.gamma * kRad2Deg)},
                             {"theta_deg", sig12(orc.pose.theta * kRad2Deg)},
                             {"converged", orc.converged}};
        } else {
            doc["oracle"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "problem: " << problem_name(*problem) << "\n";
        std::cout << "optimum: " << fmt6(res.optimum) << "\n";
        std::cout << "winner: " << res.winners.front().kind.name();
        if (res.winners.size() > 1) {
            std::cout << " (tied with";
            for (size_t i = 1; i < res.winners.size(); ++i) {
                std::cout << ' ' << res.winners[i].kind.name();
            }
            std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "shares_side_and_angle: "
                  << (res.shares_side_and_angle ? "true" : "false") << "\n";
        print_table(res);
        if (with_oracle) {
            std::cout << "oracle: " << fmt6(orc.value) << " (gamma "
                      << fmt6(orc.pose.gamma * kRad2Deg) << " deg, theta "
                      << fmt6(orc.pose.theta * kRad2Deg) << " deg, "
                      << (oracle_ok ? "agrees" : "DISAGREES") << ")\n";
        }
    }
    return oracle_ok ? 0 : 2;
}

int cmd_oracle(const TriangleInput& in, const std::string& problem_str,
               const OracleConfig& cfg, bool as_json) {
    Triangle t = parse_triangle(in);
    auto problem = parse_problem(problem_str);
    if (!problem) throw std::runtime_error("unknown problem " + problem_str);
    OracleResult orc = oracle_solve(t, *problem, cfg);
    if (as_json) {
        json doc{{"version", kVersion},
                 {"command", "oracle"},
                 {"problem", problem_name(*problem)},
                 {"input", {{"vertices", triangle_json(t)}}},
                 {"value", sig12(orc.value)},
                 {"gamma_deg", sig12(orc.pose.gamma * kRad2Deg)},
                 {"theta_deg", sig12(orc.pose.theta * kRad2Deg)},
                 {"witness", triangle_json(orc.witness)},
                 {"evaluations", orc.evaluations},
                 {"converged", orc.converged},
                 {"method", orc.method}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "problem: " << problem_name(*problem) << "\n";
        std::cout << "value: " << fmt6(orc.value) << "\n";
        std::cout << "pose: gamma " << fmt6(orc.pose.gamma * kRad2Deg)
                  << " deg, theta " << fmt6(orc.pose.theta * kRad2Deg)
                  << " deg\n";
        std::cout << "witness:";
        for (int i = 0; i < 3; ++i) {
            std::cout << " (" << fmt6(orc.witness[i].x) << ", "
                      << fmt6(orc.witness[i].y) << ")";
        }
        std::cout << "\nevaluations: " << orc.evaluations << "\n";
        std::cout << "converged: " << (orc.converged ? "true" : "false")
                  << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& which, long long samples, std::uint64_t seed,
               long long structural_samples, const OracleConfig& cfg) {
    std::vector<CheckReport> reports;
    auto want = [&](const std::string& name) {
        return which == "all" || which == name;
    };
    if (want("embedded-inequalities")) {
        reports.push_back(check_embedded_inequalities(samples, seed));
    }
    if (want("container-inequalities")) {
        reports.push_back(check_container_inequalities(samples, seed));
    }
    if (want("minkowski-perimeter")) {
        reports.push_back(check_minkowski_perimeter(samples, seed));
    }
    if (want("hinge")) reports.push_back(check_hinge(samples, seed));
    if (want("structural")) {
        reports.push_back(check_structural(structural_samples, seed, cfg));
    }
    if (want("container-types")) {
        reports.push_back(check_container_types(samples, seed));
    }
    if (reports.empty()) throw std::runtime_error("unknown check " + which);

    long long failures = 0;
    std::cout << std::left << std::setw(26) << "check" << std::setw(10)
              << "samples" << std::setw(10) << "failures"
              << "worst_margin\n";
    for (const CheckReport& r : reports) {
        failures += r.failures;
        std::cout << std::setw(26) << r.check_id << std::setw(10) << r.samples
                  << std::setw(10) << r.failures << fmt6(r.worst_margin)
                  << "\n";
        for (const std::string& n : r.notes) std::cout << "    " << n << "\n";
        for (const std::string& d : r.details) {
            std::cout << "    FAIL " << d << "\n";
        }
    }
    return failures == 0 ? 0 : 2;
}

int cmd_paper_table(double tol_override) {
    auto rows = reference_rows(tol_override);
    size_t failures = 0;
    std::cout << std::left << std::setw(44) << "row" << std::setw(13)
              << "expected" << std::setw(15) << "computed" << std::setw(12)
              << "diff"
              << "status\n";
    for (const ReferenceRow& r : rows) {
        bool ok = r.pass();
        failures += ok ? 0 : 1;
        std::cout << std::setw(44) << r.label << std::setw(13)
                  << fmt6(r.expected) << std::setw(15)
                  << std::setprecision(9) << r.computed << std::setw(12)
                  << std::setprecision(3) << std::abs(r.computed - r.expected)
                  << std::setprecision(6) << (ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << rows.size() - failures << "/" << rows.size()
              << " rows PASS\n";
    return failures == 0 ? 0 : 2;
}

int cmd_sweep(int grid, const std::string& svg_path, double cell_px) {
    std::vector<std::string> types = {"cont:AB'C", "cont:ABC'", "cont:ABCbar",
                                      "apex", "ex2"};
    std::vector<std::vector<int>> cells(
        static_cast<size_t>(grid),
        std::vector<int>(static_cast<size_t>(grid), -1));
    const double pi = std::numbers::pi;
    std::cout << "alpha_deg beta_deg winner optimum\n";
    for (int i = 0; i < grid; ++i) {
        double alpha = (i + 0.5) / grid * (pi / 3.0);
        for (int j = 0; j < grid; ++j) {
            double beta_hi = 0.5 * (pi - alpha);
            double beta = alpha + (j + 0.5) / grid * (beta_hi - alpha);
            double gamma = pi - alpha - beta;
            if (beta - alpha < 1e-6 || gamma - beta < 1e-6) continue;
            double sg = std::sin(gamma);
            Triangle t = triangle_from_sides(std::sin(alpha) / sg,
                                             std::sin(beta) / sg, 1.0);
            SolveResult res = solve(t, Problem::MinPerimContainer);
            std::string kind = res.winners.front().kind.name();
            auto it = std::find(types.begin(), types.end(), kind);
            if (it == types.end()) {
                it = types.insert(types.end(), kind);
            }
            cells[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                static_cast<int>(it - types.begin());
            std::cout << fmt6(alpha * kRad2Deg) << ' ' << fmt6(beta * kRad2Deg)
                      << ' ' << kind << ' ' << fmt6(res.optimum) << "\n";
        }
    }
    if (!svg_path.empty()) write_phase_svg(svg_path, cells, types, cell_px);
    return 0;
}

int cmd_render(const TriangleInput& in, const std::string& kinds_csv,
               const std::string& out, double scale) {
    Triangle t = parse_triangle(in);
    TriangleShape shape = normalize(t);
    std::vector<Candidate> all;
    if (!shape.isosceles_input) {
        auto add = [&](std::vector<Candidate> v) {
            all.insert(all.end(), v.begin(), v.end());
        };
        add(embedded_specials(shape, t));
        add(container_specials(shape, t));
        add(apex_candidates(t));
        add(ex2_candidates(t));
    }
    std::vector<std::string> wanted;
    if (kinds_csv != "all") {
        std::istringstream is(kinds_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) wanted.push_back(tok);
    }
    std::vector<SvgItem> items;
    for (const Candidate& c : all) {
        if (!c.triangle || !c.exists) continue;
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.kind.name()) ==
                wanted.end()) {
            continue;
        }
        items.push_back({*c.triangle, c.kind.name(), c.perimeter});
    }
    write_svg(out, t, items, scale);
    std::cout << "wrote " << out << " (" << items.size() << " candidates)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal isosceles triangles relative to a given triangle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    TriangleInput in;
    std::string problem_str;
    bool as_json = false, with_oracle = false, svg_all = false;
    std::string svg_path;
    double svg_scale = 100.0;

    auto* solve_cmd = app.add_subcommand("solve", "solve one problem");
    add_input_flags(solve_cmd, in);
    solve_cmd->add_option("--problem", problem_str, "problem name")
        ->required();
    solve_cmd->add_flag("--oracle", with_oracle,
                        "cross-check against the brute-force search");
    solve_cmd->add_flag("--json", as_json, "machine-readable output");
    solve_cmd->add_option("--svg", svg_path, "write an SVG figure");
    solve_cmd->add_flag("--svg-all", svg_all, "draw all candidates, not just winners");
    solve_cmd->add_option("--scale", svg_scale, "SVG pixels per unit");

    OracleConfig cfg;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search only");
    add_input_flags(oracle_cmd, in);
    oracle_cmd->add_option("--problem", problem_str, "problem name")
        ->required();
    oracle_cmd->add_option("--grid-gamma", cfg.grid_gamma, "gamma grid size");
    oracle_cmd->add_option("--grid-theta", cfg.grid_theta, "theta grid size");
    oracle_cmd->add_option("--starts", cfg.refine_starts, "refinement starts");
    oracle_cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    oracle_cmd->add_flag("--json", as_json, "machine-readable output");

    std::string which = "all";
    long long samples = 10000, structural_samples = 3;
    std::uint64_t seed = 12345;
    OracleConfig vcfg;
    auto* verify_cmd = app.add_subcommand("verify", "run the property checks");
    verify_cmd->add_option("--lemma", which,
                           "check name or 'all' (embedded-inequalities, "
                           "container-inequalities, minkowski-perimeter, "
                           "hinge, structural, container-types)");
    verify_cmd->add_option("--samples", samples, "samples per check");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--structural-samples", structural_samples,
                           "samples for the (slow) structural check");

    double tol_override = -1.0;
    auto* paper_cmd =
        app.add_subcommand("paper-table", "recompute the published figures");
    paper_cmd->add_option("--tolerance", tol_override,
                          "override the per-row tolerances");

    int grid = 60;
    double cell_px = 8.0;
    std::string sweep_svg;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "winner-type map over the angle simplex");
    sweep_cmd->add_option("--grid", grid, "cells per axis");
    sweep_cmd->add_option("--svg", sweep_svg, "write a phase-map SVG");
    sweep_cmd->add_option("--cell-px", cell_px, "phase-map cell size");

    std::string kinds_csv = "all", render_out = "figure.svg";
    auto* render_cmd = app.add_subcommand("render", "draw candidates as SVG");
    add_input_flags(render_cmd, in);
    render_cmd->add_option("--kinds", kinds_csv,
                           "comma-separated candidate names, or 'all'");
    render_cmd->add_option("--out", render_out, "output path");
    render_cmd->add_option("--scale", svg_scale, "SVG pixels per unit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(in, problem_str, with_oracle, as_json, svg_path,
                             svg_all, svg_scale);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(in, problem_str, cfg, as_json);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(which, samples, seed, structural_samples, vcfg);
        }
        if (paper_cmd->parsed()) return cmd_paper_table(tol_override);
        if (sweep_cmd->parsed()) return cmd_sweep(grid, sweep_svg, cell_px);
        if (render_cmd->parsed()) {
            return cmd_render(in, kinds_csv, render_out, svg_scale);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
