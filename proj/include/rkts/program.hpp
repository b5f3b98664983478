#pragma once

#include "rkts/datum.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rkts {

// (define name expr) or (define (name param...) body)
struct DefineForm {
    std::string name;
    bool is_function = false;
    std::vector<std::string> params;  // function form only, nonempty
    DatumPtr body;                    // the defined expression / function body
    SourceLocation location;
};

// (define-struct name (field...))
struct StructDefForm {
    std::string type_name;
    std::vector<std::string> field_names;
    SourceLocation location;
};

enum class CheckKind { Expect, Within, Error };

// One of the three check forms; checks are collected at parse time and run
// after all top-level definitions.
struct CheckFormData {
    CheckKind kind;
    DatumPtr actual;
    DatumPtr expected;   // expected value (expect/within) or message expression (error)
    DatumPtr tolerance;  // within only
    SourceLocation location;
};

struct RequireForm {
    SourceLocation location;  // accepted and ignored
};

struct ExprForm {
    DatumPtr datum;
};

using TopForm = std::variant<DefineForm, StructDefForm, CheckFormData, RequireForm, ExprForm>;

struct Program {
    std::vector<TopForm> forms;
};

// Parses one (define ...) datum. Shared by the top-level classifier and by
// `local`. Throws ParseError on malformed defines (including nullary
// function headers, which are rejected).
DefineForm parse_define(const Datum& d);

// Classifies top-level datums. Malformed special forms are rejected here,
// not at evaluation time.
Program parse_program(std::span<const DatumPtr> data);

// tokenize + read_all + parse_program
Program parse_source(std::string_view text);

}  // namespace rkts
