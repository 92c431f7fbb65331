#pragma once

#include <string>
#include <vector>

namespace dgahom::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// The worked examples map onto criteria: 1 -> {3}, 2 -> {4, 5}, 3 -> {6, 7}.
std::vector<CriterionResult> run_example(int which);

std::string format_line(const CriterionResult& r);

}  // namespace dgahom::acceptance
