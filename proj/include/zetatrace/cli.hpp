#pragma once

#include "zetatrace/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zetatrace {

struct RunConfig {
    std::string command;           // count | zeta | verify | trace | cm | lefschetz
    std::string input_path;
    std::uint64_t budget = kDefaultBudget;
    unsigned holdout = 2;
    double tol = 1e-9;
    unsigned workers = 1;
    int terms = -1;                // <0: (sum betti)+2 when hinted, else 4
    std::vector<long> max_deg;     // explicit (num, den) bounds when no betti hint
    std::string output;            // empty = stdout
    std::string format = "text";   // text | json | tsv
};

// Executes one command; returns the process exit code:
// 0 pass, 1 check/computation failure, 2 usage or input error, 3 budget.
int run(const RunConfig& cfg);

// Parses argv into a RunConfig and runs it.
int cli_main(int argc, char** argv);

}  // namespace zetatrace
