#pragma once

#include "rkts/environment.hpp"
#include "rkts/program.hpp"
#include "rkts/testing.hpp"
#include "rkts/value.hpp"

#include <span>
#include <vector>

namespace rkts {

// Fresh global frame whose parent holds every builtin binding.
EnvPtr make_global_env();

Value eval_expr(const DatumPtr& e, const EnvPtr& env);

// Closure application binds parameters in a fresh frame over the captured
// environment; primitives dispatch directly. Applying a non-function raises.
Value apply_value(const Value& f, std::span<const Value> args, const SourceLocation& call_site);

// Binds make-<t>, <t>?, and one <t>-<field> selector per field.
void define_structure(const StructType& t, const EnvPtr& env, const SourceLocation& loc);

struct EvalResult {
    EnvPtr env;
    TestReport report;
    std::vector<Value> expression_values;  // top-level expressions, in order
};

// Definitions and expressions evaluate in source order, each definition
// extending the global frame; checks are collected and run afterwards.
EvalResult eval_program(const Program& p);

}  // namespace rkts
