#include "dgahom/acceptance.hpp"

#include <cstring>
#include <iostream>

// Runs every acceptance criterion and prints one pass/fail line each.
// Usage: acceptance [criterion-number]
int main(int argc, char** argv) {
    using namespace dgahom::acceptance;
    std::vector<CriterionResult> results;
    if (argc > 1) {
        results.push_back(run_criterion(std::atoi(argv[1])));
    } else {
        results = run_all();
    }
    int failures = 0;
    for (const auto& r : results) {
        std::cout << format_line(r) << "\n" << std::flush;
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
