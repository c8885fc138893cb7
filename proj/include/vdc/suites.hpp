#pragma once

#include <string>
#include <vector>

// Named verification suites shared by the command-line front end and the
// acceptance runner.  Each check is timed and self-describing; suites never
// throw for a failed property, only for broken preconditions (missing data
// files and the like).

namespace vdc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

struct SuitePaths {
    std::string data_dir = "data";   // bundled inputs (zero tables)
    std::string out_dir = ".";       // CSV / JSON emission target
};

std::vector<std::string> suite_names();
CheckList run_suite(const std::string &module, const SuitePaths &paths);

// The full acceptance battery, one entry per criterion.
CheckList acceptance_checks(const SuitePaths &paths);

// individual checks reused across suites -----------------------------------

CheckList periodic_suite(const SuitePaths &paths);
CheckList characters_suite(const SuitePaths &paths);
CheckList approximants_suite(const SuitePaths &paths);
CheckList correlations_suite(const SuitePaths &paths);
CheckList damping_suite(const SuitePaths &paths);
CheckList expweight_suite(const SuitePaths &paths);
CheckList zeros_suite(const SuitePaths &paths);

} // namespace vdc
