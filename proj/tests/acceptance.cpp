// Acceptance battery: one timed pass/fail line per criterion, nonzero exit on
// any failure.  Arguments: [data_dir] [out_dir].

#include <cstdio>
#include <string>

#include "vdc/parallel.hpp"
#include "vdc/suites.hpp"

int main(int argc, char **argv) {
    vdc::SuitePaths paths;
    if (argc > 1) paths.data_dir = argv[1];
    if (argc > 2) paths.out_dir = argv[2];

    std::printf("acceptance battery (%d threads)\n", vdc::thread_count());
    auto checks = vdc::acceptance_checks(paths);
    int failed = 0;
    for (const auto &c : checks) {
        std::printf("[%s] %-32s %8.2f s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                    c.detail.empty() ? "" : "  ", c.detail.c_str());
        std::fflush(stdout);
        if (!c.pass) failed++;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failed, checks.size());
    return failed == 0 ? 0 : 1;
}
