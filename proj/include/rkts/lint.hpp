#pragma once

#include "rkts/program.hpp"
#include "rkts/spec.hpp"

#include <span>
#include <string>
#include <vector>

namespace rkts {

enum class Severity { Error, Warning };

// Codes are stable strings from a fixed catalog:
//   missing-message, extra-message, missing-else, shadowed-clause,
//   missing-variant-message, no-manager-found, missing-constructor,
//   dispatch-error, program-error
struct Diagnostic {
    Severity severity;
    std::string code;
    std::string message;
    SourceLocation location;
};

bool has_errors(std::span<const Diagnostic> diags);

struct ClauseInfo {
    std::string symbol;
    SourceLocation location;
};

// The syntactic shape linting understands: a `local` whose body returns a
// one-parameter function whose body is a `match` on that parameter.
struct ManagerShape {
    std::string enclosing_define;              // "" at top level
    std::vector<std::string> enclosing_params; // constructor parameters
    std::vector<ClauseInfo> clauses;           // quoted-symbol clauses, in order
    bool has_else = false;
    SourceLocation match_location;
};

std::vector<ManagerShape> find_manager_shapes(const Program& p);

// Compares each manager's clause set against the interface messages plus
// the class's field-getter messages. Getter names come from the matching
// ClassSpec when one is supplied (honoring #:message overrides), otherwise
// from the enclosing constructor's parameters as get-<param>.
std::vector<Diagnostic> lint_manager(const Program& p, const InterfaceSpec& i,
                                     std::span<const ClassSpec> classes = {});

// Static check: every variant's manager has a clause for every required
// message. Dynamic check: construct each variant from canonical sample
// values and send every message that passed the static check; a raise is an
// error diagnostic. Variants with interface-typed fields are checked
// statically only.
std::vector<Diagnostic> verify_dispatch(const Program& p, const UnionSpec& u,
                                        const InterfaceSpec& i, const SpecFile& spec);

}  // namespace rkts
