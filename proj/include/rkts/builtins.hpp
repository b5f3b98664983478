#pragma once

#include "rkts/value.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rkts {

// Every primitive binding the interpreter provides, plus the constants
// `pi` and `empty`. Arithmetic follows exactness contagion: exact operands
// give exact results, any inexact operand makes the result inexact.
const std::unordered_map<std::string, Value>& builtin_table();

// `format` directive expansion: ~s written form, ~a display form, ~~ tilde.
std::string format_template(const std::string& tmpl, std::span<const Value> args,
                            const SourceLocation& loc);

// Raises RuntimeError whose message is exactly `msg`.
[[noreturn]] void raise_error(std::string msg, const SourceLocation& loc);

}  // namespace rkts
