#pragma once

#include "rkts/environment.hpp"
#include "rkts/program.hpp"
#include "rkts/value.hpp"

#include <span>
#include <string>
#include <vector>

namespace rkts {

enum class CheckOutcome { Pass, Fail, Errored };

struct CheckResult {
    CheckFormData form;
    CheckOutcome outcome;
    std::string actual;    // written form, or raised message
    std::string expected;  // written form, or expected message
    std::string detail;    // empty on pass
};

struct TestReport {
    std::vector<CheckResult> results;  // source order

    int total() const { return static_cast<int>(results.size()); }
    int passed() const {
        int n = 0;
        for (const auto& r : results) n += r.outcome == CheckOutcome::Pass;
        return n;
    }
    int failed() const { return total() - passed(); }
    bool all_passed() const { return failed() == 0; }
};

// Runs one check against a fully populated environment. Runtime errors
// raised while evaluating expect/within operands mark the result Errored
// rather than escaping. A check-expect whose sides involve inexact numbers
// is Errored with guidance to use check-within.
CheckResult run_check(const CheckFormData& c, const EnvPtr& env);

TestReport run_checks(std::span<const CheckFormData> checks, const EnvPtr& env);

// Evaluates the program's definitions, then runs every check in source
// order. Individual check failures are data; a runtime error escaping a
// non-check form still propagates.
TestReport run_all(const Program& p);

}  // namespace rkts
