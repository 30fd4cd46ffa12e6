#pragma once

// Subcommand bodies. Each returns a RunReport; main.cpp does flag wiring,
// timing, output and exit codes.

#include <string>
#include <vector>

#include "cli_support.hpp"

namespace psilab::cli {

struct EvalOptions {
    Complex z{2.0, 0.0};
    double x = 0.0;
    std::string method = "all";  // series | em | integral | all
    double tol = 1e-12;
};
RunReport cmd_eval(const EvalOptions& opt);

struct FeqOptions {
    std::vector<Complex> z;
    std::vector<double> x;
    std::string method = "em";
    double tol = 1e-12;
};
RunReport cmd_feq(const FeqOptions& opt);

struct BoundaryOptions {
    std::vector<Complex> z;
    std::string method = "auto";  // auto picks series for Re z > 1 and em otherwise
    double tol = 1e-12;
    double threshold = 1e-9;
};
RunReport cmd_boundary(const BoundaryOptions& opt);

struct PoleOptions {
    std::vector<double> x;
    double eps = 1e-3;
};
RunReport cmd_pole(const PoleOptions& opt);

struct NormScanOptions {
    std::vector<double> sigma;
    std::vector<double> t;
    std::vector<double> alpha;
};
RunReport cmd_norm_scan(const NormScanOptions& opt);

struct OperatorOptions {
    std::string experiment;  // momentum | defect | shift | dilation | intertwine
    double h = 0.01;
    double length = 40.0;
    double offset = -1.0;  // negative: experiment default
    Complex z{2.0, 0.0};
    int trials = 10;
    double x_max = 20.0;
};
RunReport cmd_operators(const OperatorOptions& opt);

struct SuiteOptions {
    std::string profile = "fast";  // fast | strict
};
RunReport cmd_suite(const SuiteOptions& opt);

}  // namespace psilab::cli
