// SPDX-License-Identifier: Apache-2.0

// Command line front end: evaluate the closed forms, emit plot tables, run
// the simulations, and run the cross-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or range error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomprob/closed_forms.hpp"
#include "geomprob/dilog.hpp"
#include "geomprob/montecarlo.hpp"
#include "geomprob/verify.hpp"

namespace {

using geomprob::InteriorPoint;
using geomprob::McEstimate;

// 17 significant digits round-trip a double exactly.
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_eval(const std::string& target, std::optional<double> r,
             std::optional<double> x) {
    double value = 0.0;
    if (target == "p-contain") {
        if (!r) throw CLI::ValidationError("eval p-contain requires --r");
        value = geomprob::p_contain(InteriorPoint(*r));
    } else if (target == "chord-cdf") {
        if (!r) throw CLI::ValidationError("eval chord-cdf requires --r");
        value = geomprob::chord_cdf(*r);
    } else if (target == "li2") {
        if (!x) throw CLI::ValidationError("eval li2 requires --x");
        value = geomprob::li2(*x);
    } else {  // three-circles
        value = geomprob::three_circle_probability();
    }
    std::cout << fmt17(value) << "\n";
    return 0;
}

int run_table(const std::string& what, double r_min, double r_max,
              std::uint64_t steps, const std::string& out) {
    if (!(r_min >= 0.0 && r_min <= r_max && r_max <= 1.0))
        throw CLI::ValidationError("need 0 <= r-min <= r-max <= 1");
    if (steps < 2) throw CLI::ValidationError("need steps >= 2");
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << out << "\n";
        return 2;
    }
    file << "r,value\n";
    for (std::uint64_t i = 0; i < steps; ++i) {
        double r = r_min + (r_max - r_min) * double(i) / double(steps - 1);
        double value = what == "p-contain" ? geomprob::p_contain(InteriorPoint(r))
                                           : geomprob::chord_cdf(r);
        file << fmt17(r) << "," << fmt17(value) << "\n";
    }
    return file.good() ? 0 : 2;
}

void print_estimate(const McEstimate& e, const nlohmann::ordered_json& params,
                    double closed_form) {
    nlohmann::ordered_json record;
    record["experiment"] = e.experiment;
    record["params"] = params;
    record["trials"] = e.trials;
    record["seed"] = e.seed;
    record["p_hat"] = e.p_hat;
    record["std_err"] = e.std_err;
    record["closed_form"] = closed_form;
    double z = 0.0;
    if (e.std_err > 0.0)
        z = (e.p_hat - closed_form) / e.std_err;
    else if (e.p_hat != closed_form)
        z = std::numeric_limits<double>::infinity();
    record["z_score"] = z;
    std::cout << record.dump() << "\n";
}

int run_simulate(const std::string& experiment, std::optional<double> r,
                 std::vector<double> radii, std::uint64_t trials,
                 std::uint64_t seed, unsigned workers) {
    if (experiment == "triangle") {
        if (!r) throw CLI::ValidationError("simulate triangle requires --r");
        InteriorPoint x(*r);
        McEstimate e = geomprob::simulate_triangle(x, trials, seed, workers);
        print_estimate(e, {{"r", *r}}, geomprob::p_contain(x));
    } else if (experiment == "chords") {
        if (radii.empty()) radii = {0.25, 0.5, 0.75};
        auto sim = geomprob::simulate_chords(radii, trials, seed, workers);
        for (std::size_t k = 0; k < radii.size(); ++k)
            print_estimate(sim.estimates[k], {{"r", radii[k]}},
                           geomprob::chord_cdf(radii[k]));
        print_estimate(sim.acceptance, {{"attempts", sim.attempts}}, 1.0 / 3.0);
    } else {  // three-circles
        auto tc = geomprob::simulate_three_circles(trials, seed, workers);
        double closed = geomprob::three_circle_probability();
        print_estimate(tc.ab, {{"line", "AB"}}, closed);
        print_estimate(tc.bc, {{"line", "BC"}}, closed);
    }
    return 0;
}

int run_verify(const std::string& suite, const geomprob::VerifyOptions& opts,
               bool as_json) {
    geomprob::VerificationReport report = geomprob::verify_suite(suite, opts);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["suite"] = suite;
        doc["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : report.checks)
            doc["checks"].push_back({{"name", c.name},
                                     {"expected", c.expected},
                                     {"actual", c.actual},
                                     {"tolerance", c.tolerance},
                                     {"pass", c.pass}});
        doc["overall_pass"] = report.overall_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("%-32s %23s %23s %12s  %s\n", "check", "expected", "actual",
                    "tolerance", "status");
        for (const auto& c : report.checks)
            std::printf("%-32s %23.15g %23.15g %12.3g  %s\n", c.name.c_str(),
                        c.expected, c.actual, c.tolerance,
                        c.pass ? "ok" : "FAIL");
        std::printf("overall: %s\n", report.overall_pass ? "PASS" : "FAIL");
    }
    return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric probabilities of inscribed triangles and random chords"};
    app.require_subcommand(1);

    std::string eval_target, table_what, sim_experiment, verify_suite_name = "all";
    std::optional<double> opt_r, opt_x;
    std::vector<double> radii;
    double r_min = 0.0, r_max = 1.0;
    std::uint64_t steps = 101;
    std::string out_path;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    bool as_json = false;
    std::optional<double> tol_override;

    auto* eval = app.add_subcommand("eval", "Evaluate a closed form");
    eval->add_option("target", eval_target, "One of p-contain, li2, chord-cdf, three-circles")
        ->required()
        ->check(CLI::IsMember({"p-contain", "li2", "chord-cdf", "three-circles"}));
    eval->add_option("--r", opt_r, "Distance ratio in [0, 1]");
    eval->add_option("--x", opt_x, "Dilogarithm argument, x <= 1");

    auto* table = app.add_subcommand("table", "Write a CSV table of a closed form");
    table->add_option("what", table_what, "One of p-contain, chord-cdf")
        ->required()
        ->check(CLI::IsMember({"p-contain", "chord-cdf"}));
    table->add_option("--r-min", r_min, "Lower end of the r range");
    table->add_option("--r-max", r_max, "Upper end of the r range");
    table->add_option("--steps", steps, "Number of evenly spaced rows");
    table->add_option("--out", out_path, "Output CSV path")->required();

    auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo experiment");
    sim->add_option("experiment", sim_experiment, "One of triangle, chords, three-circles")
        ->required()
        ->check(CLI::IsMember({"triangle", "chords", "three-circles"}));
    sim->add_option("--r", opt_r, "Triangle query point distance ratio");
    sim->add_option("--radius", radii, "Chord CDF evaluation radius (repeatable)");
    sim->add_option("--trials", trials, "Trial count (accepted pairs for chords)");
    sim->add_option("--seed", seed, "Random seed");
    sim->add_option("--workers", workers, "Worker threads, 0 = all cores");

    auto* verify = app.add_subcommand("verify", "Run a cross-verification suite");
    verify->add_option("--suite", verify_suite_name,
                       "One of all, predicates, dilog, quadrature, montecarlo")
        ->check(CLI::IsMember({"all", "predicates", "dilog", "quadrature", "montecarlo"}));
    verify->add_flag("--json", as_json, "Emit a JSON report");
    verify->add_option("--trials", trials, "Monte Carlo suite sample size");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--workers", workers, "Worker threads, 0 = all cores");
    verify->add_option("--tol", tol_override, "Override every check tolerance");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return run_eval(eval_target, opt_r, opt_x);
        if (table->parsed()) return run_table(table_what, r_min, r_max, steps, out_path);
        if (sim->parsed())
            return run_simulate(sim_experiment, opt_r, radii, trials, seed, workers);
        geomprob::VerifyOptions opts{trials, seed, workers, tol_override};
        return run_verify(verify_suite_name, opts, as_json);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
