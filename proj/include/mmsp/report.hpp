#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mmsp/model.hpp"

namespace mmsp {

enum ExitCode {
    kExitOk = 0,
    kExitSupercritical = 2,
    kExitNoBoundLevels = 3,
    kExitUsage = 64,
    kExitIoError = 74,
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    PotentialParams params;
    PhysicalContext ctx;
    std::vector<int> l_list{0};
    int n_limit = 0;
    std::vector<ApproximationScheme> schemes;  // kept in ascending name order
    bool oracle_enabled = false;
    int grid_points = 4000;
    double r_max = 0.0;  // 0 -> scheme default 40/(2 alpha)
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty -> stdout

    void validate() const;
};

struct SweepSpec {
    enum class Axis { V0, Alpha, A, B };
    Axis axis = Axis::V0;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
};

/// Shortest round-trip decimal rendering (same in CSV and JSON output).
std::string format_double(double x);

int cmd_spectrum(const RunConfig& cfg, std::ostream& diag);
int cmd_compare(const RunConfig& cfg, std::ostream& diag);
int cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& diag);

}  // namespace mmsp
