#pragma once

#include <optional>
#include <string>
#include <vector>

namespace logalg::cli {

struct AcceptanceOptions {
    int prec = 0;                  // 0 runs the full targets; otherwise every precision is capped here
    std::optional<int> corrupt_a;  // perturb the level-11 a_n used by the identity and Honda checks
    unsigned long seed = 20240611; // random inputs of the property suites
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = true;
    int checks = 0;
    double seconds = 0;
    double limit_seconds = 0; // 0 = no time limit
    std::vector<std::string> details; // one line per sub-result, failures first
};

/// Runs criteria 1-7 in order. Never throws: an exception inside a criterion
/// fails that criterion with the error text.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opt = {});

bool all_pass(const std::vector<CriterionResult> &results);

} // namespace logalg::cli
