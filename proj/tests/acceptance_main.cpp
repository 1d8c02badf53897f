// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>

#include "homeo/acceptance.hpp"
#include "homeo/report.hpp"

int main(int argc, char** argv) {
    homeo::AcceptanceOptions options;
    options.timing = true;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

    bool all = true;
    for (const auto& result : homeo::run_acceptance(options)) {
        all = all && result.passed();
        std::printf("%s %-28s %6.2fs  %s\n", result.passed() ? "PASS" : "FAIL", result.id.c_str(), result.seconds,
                    result.description.c_str());
        for (const auto& c : result.checks) {
            if (!c.passed && !c.informational) {
                std::printf("    failed %s: measured %s %s %s (tol %s)\n", c.name.c_str(),
                            homeo::format_number(c.measured).c_str(), homeo::to_string(c.relation),
                            homeo::format_number(c.target).c_str(), homeo::format_number(c.tolerance).c_str());
            }
        }
    }
    return all ? 0 : 1;
}
