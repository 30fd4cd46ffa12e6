#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "commands.hpp"
#include "psilab/errors.hpp"

using namespace psilab::cli;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string csv_path;
    std::string report_path;
    bool json = false;
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--csv", out.csv_path, "Write the CSV data section to this file instead of stdout");
    cmd->add_option("--report", out.report_path, "Write the JSON report to this file");
    cmd->add_flag("--json", out.json, "Print the JSON report on stdout instead of CSV");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw UsageError("failed writing '" + path + "'");
}

int emit(RunReport report, const Output& out, std::chrono::steady_clock::time_point start) {
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const std::string csv = to_csv(report);
    const std::string json = to_json(report).dump(2) + "\n";
    if (!out.csv_path.empty()) write_file(out.csv_path, csv);
    if (!out.report_path.empty()) write_file(out.report_path, json);
    if (out.json) {
        std::cout << json;
    } else if (out.csv_path.empty()) {
        std::cout << csv;
    }
    std::cerr << report.command << ": " << (report.pass ? "pass" : "FAIL") << " (" << report.rows.size() << " rows, "
              << report.wall_time_ms << " ms)\n";
    return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"psilab: numerical checks for psi_z(x) = sum (n+x)^{-z} and half-line operators"};
    app.require_subcommand(1);
    Output out;

    std::function<RunReport()> run;

    EvalOptions eval;
    std::string eval_z = "2";
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate psi_z(x) by one or all methods");
    eval_cmd->add_option("--z", eval_z, "Complex exponent a+bi");
    eval_cmd->add_option("--x", eval.x, "Shift x > -1");
    eval_cmd->add_option("--method", eval.method, "series | em | integral | all");
    eval_cmd->add_option("--tol", eval.tol, "Requested absolute tolerance");
    add_output_flags(eval_cmd, out);
    eval_cmd->callback([&] {
        run = [&] {
            eval.z = parse_complex(eval_z);
            return cmd_eval(eval);
        };
    });

    FeqOptions feq;
    std::string feq_z, feq_x;
    auto* feq_cmd = app.add_subcommand("feq", "Residuals of psi_z(x) - psi_z(x-1) + x^{-z} over a grid");
    feq_cmd->add_option("--z", feq_z, "Complex range lo..hi:count or list")->required();
    feq_cmd->add_option("--x", feq_x, "Real range lo..hi:count or list, x > 0")->required();
    feq_cmd->add_option("--method", feq.method, "series | em | integral");
    feq_cmd->add_option("--tol", feq.tol, "Evaluator tolerance");
    add_output_flags(feq_cmd, out);
    feq_cmd->callback([&] {
        run = [&] {
            feq.z = parse_complex_range(feq_z);
            feq.x = parse_real_range(feq_x);
            return cmd_feq(feq);
        };
    });

    BoundaryOptions boundary;
    std::string boundary_z = "2,3,0.5,0.75,0.5+14.134725i,1.5+30i";
    auto* boundary_cmd = app.add_subcommand("boundary", "Compare psi_z(0) with the reference zeta");
    boundary_cmd->add_option("--z", boundary_z, "Complex list or range");
    boundary_cmd->add_option("--method", boundary.method, "auto | series | em | integral");
    boundary_cmd->add_option("--tol", boundary.tol, "Evaluator tolerance");
    boundary_cmd->add_option("--threshold", boundary.threshold, "Pass threshold on |psi_z(0) - zeta(z)|");
    add_output_flags(boundary_cmd, out);
    boundary_cmd->callback([&] {
        run = [&] {
            boundary.z = parse_complex_range(boundary_z);
            return cmd_boundary(boundary);
        };
    });

    PoleOptions pole;
    std::string pole_x = "0,1,5";
    auto* pole_cmd = app.add_subcommand("pole", "Residue of psi_z(x) at z = 1");
    pole_cmd->add_option("--x", pole_x, "Real list or range, x >= 0");
    pole_cmd->add_option("--eps", pole.eps, "Probe radius in (1e-7, 1e-2)");
    add_output_flags(pole_cmd, out);
    pole_cmd->callback([&] {
        run = [&] {
            pole.x = parse_real_range(pole_x);
            return cmd_pole(pole);
        };
    });

    NormScanOptions scan;
    std::string scan_sigma, scan_t = "0", scan_alpha = "0";
    auto* scan_cmd = app.add_subcommand("norm-scan", "Tail exponents and convergence verdicts of weighted norms");
    scan_cmd->add_option("--sigma", scan_sigma, "Re z values")->required();
    scan_cmd->add_option("--t", scan_t, "Im z values");
    scan_cmd->add_option("--alpha", scan_alpha, "Weight exponents in [-4, 4]");
    add_output_flags(scan_cmd, out);
    scan_cmd->callback([&] {
        run = [&] {
            scan.sigma = parse_real_range(scan_sigma);
            scan.t = parse_real_range(scan_t);
            scan.alpha = parse_real_range(scan_alpha);
            return cmd_norm_scan(scan);
        };
    });

    OperatorOptions ops;
    std::string ops_z = "2";
    auto* ops_cmd = app.add_subcommand("operators", "Discretized operator experiments on the half-line");
    // --h is the grid spacing here, so help is long-form only.
    ops_cmd->set_help_flag("--help", "Print this help message and exit");
    ops_cmd->add_option("--experiment", ops.experiment, "momentum | defect | shift | dilation | intertwine")->required();
    ops_cmd->add_option("--h", ops.h, "Grid spacing");
    ops_cmd->add_option("--L", ops.length, "Grid extent");
    ops_cmd->add_option("--offset", ops.offset, "First node (default: experiment-specific)");
    ops_cmd->add_option("--z", ops_z, "Complex parameter a+bi");
    ops_cmd->add_option("--trials", ops.trials, "Random test functions for the shift experiment");
    ops_cmd->add_option("--x-max", ops.x_max, "Truncation point for the defect experiment");
    add_output_flags(ops_cmd, out);
    ops_cmd->callback([&] {
        run = [&] {
            ops.z = parse_complex(ops_z);
            return cmd_operators(ops);
        };
    });

    SuiteOptions suite;
    auto* suite_cmd = app.add_subcommand("suite", "Run every acceptance criterion");
    suite_cmd->add_option("--profile", suite.profile, "fast | strict");
    add_output_flags(suite_cmd, out);
    suite_cmd->callback([&] { run = [&] { return cmd_suite(suite); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        return emit(run(), out, start);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const psilab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
    }
    return kExitUsage;
}
