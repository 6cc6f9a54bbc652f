#pragma once

#include <string>
#include <vector>

#include "fracprimes/arith.hpp"

namespace fracprimes {

enum class VerifyLevel { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ran = false;   // quick level skips the long-running criteria
    bool pass = false;  // meaningful only when ran
    double seconds = 0.0;
    std::string detail;
};

// Runs the numbered verification criteria (golden constants, exact
// inequalities, oracle-equivalence sweeps, census spot values) at pinned
// tolerances. quick skips the two sweep criteria (6 and 7). only_id > 0
// restricts the run to that criterion.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, int only_id = 0);

// Sanity check of a LambdaTable against the standalone evaluator; names the
// first mismatching entry in *why. Used as a fixture pre-check and by
// fault-injection tests.
bool check_lambda_table(const LambdaTable& table, std::string* why = nullptr);

}  // namespace fracprimes
