#pragma once

#include "rkts/datum.hpp"
#include "rkts/error.hpp"
#include "rkts/numeric.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rkts {

class Environment;
using EnvPtr = std::shared_ptr<Environment>;

struct StructType {
    std::string name;
    std::vector<std::string> field_names;
};
using StructTypePtr = std::shared_ptr<const StructType>;

class Value;

struct StructInstanceData {
    StructTypePtr type;
    std::vector<Value> fields;  // declaration order
};

// Every object in a source program is one of these: parameters, a body, and
// the captured environment. The environment is never mutated after capture.
struct ClosureData {
    std::string name;  // for diagnostics; empty when anonymous
    std::vector<std::string> params;
    DatumPtr body;
    EnvPtr env;
};

struct PrimitiveData {
    std::string name;
    int min_args;
    int max_args;  // -1 = variadic
    std::function<Value(std::span<const Value>, const SourceLocation&)> apply;
};

/// A runtime value. Immutable; cheap handles to shared payloads for the
/// compound alternatives.
class Value {
public:
    enum class Kind { Exact, Inexact, Boolean, Symbol, Text, List, Struct, Closure, Primitive };

    using ListPtr = std::shared_ptr<const std::vector<Value>>;
    using StructPtr = std::shared_ptr<const StructInstanceData>;
    using ClosurePtr = std::shared_ptr<const ClosureData>;
    using PrimitivePtr = std::shared_ptr<const PrimitiveData>;

    static Value exact(BigRational r) { return Value(std::move(r)); }
    static Value exact(long n) { return Value(BigRational(n)); }
    static Value inexact(double d) { return Value(d); }
    static Value boolean(bool b) { return Value(b); }
    static Value symbol(std::string name) { return Value(SymbolName{std::move(name)}); }
    static Value text(std::string chars) { return Value(StringLit{std::move(chars)}); }
    static Value list(std::vector<Value> items) {
        return Value(std::make_shared<const std::vector<Value>>(std::move(items)));
    }
    static Value list(ListPtr items) { return Value(std::move(items)); }
    static Value struct_instance(StructTypePtr type, std::vector<Value> fields) {
        return Value(std::make_shared<const StructInstanceData>(
            StructInstanceData{std::move(type), std::move(fields)}));
    }
    static Value closure(ClosurePtr c) { return Value(std::move(c)); }
    static Value primitive(PrimitivePtr p) { return Value(std::move(p)); }

    Kind kind() const { return static_cast<Kind>(rep_.index()); }

    bool is_exact() const { return kind() == Kind::Exact; }
    bool is_inexact() const { return kind() == Kind::Inexact; }
    bool is_number() const { return is_exact() || is_inexact(); }
    bool is_boolean() const { return kind() == Kind::Boolean; }
    bool is_symbol() const { return kind() == Kind::Symbol; }
    bool is_text() const { return kind() == Kind::Text; }
    bool is_list() const { return kind() == Kind::List; }
    bool is_struct() const { return kind() == Kind::Struct; }
    bool is_function() const { return kind() == Kind::Closure || kind() == Kind::Primitive; }

    const BigRational& exact_value() const { return std::get<BigRational>(rep_); }
    double inexact_value() const { return std::get<double>(rep_); }
    bool boolean_value() const { return std::get<bool>(rep_); }
    const std::string& symbol_name() const { return std::get<SymbolName>(rep_).name; }
    const std::string& text_value() const { return std::get<StringLit>(rep_).value; }
    const std::vector<Value>& list_items() const { return *std::get<ListPtr>(rep_); }
    ListPtr list_ptr() const { return std::get<ListPtr>(rep_); }
    const StructInstanceData& struct_data() const { return *std::get<StructPtr>(rep_); }
    const ClosureData& closure_data() const { return *std::get<ClosurePtr>(rep_); }
    ClosurePtr closure_ptr() const { return std::get<ClosurePtr>(rep_); }
    const PrimitiveData& primitive_data() const { return *std::get<PrimitivePtr>(rep_); }
    PrimitivePtr primitive_ptr() const { return std::get<PrimitivePtr>(rep_); }

    // numbers only
    double number_as_double() const {
        return is_exact() ? rational_to_double(exact_value()) : inexact_value();
    }

private:
    using Rep = std::variant<BigRational, double, bool, SymbolName, StringLit, ListPtr,
                             StructPtr, ClosurePtr, PrimitivePtr>;
    explicit Value(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

// "exact number", "list", "structure", ...
std::string_view kind_name(Value::Kind k);

// equal?: same kind, fieldwise/elementwise for compounds, identity for
// functions. Exact and inexact numbers are never equal to each other.
bool structurally_equal(const Value& a, const Value& b);

// True when the value is, or contains, an inexact number.
bool contains_inexact(const Value& v);

// Written form: strings quoted, symbols bare, lists as (a b c).
std::string written_form(const Value& v);

// Display form: like written form but strings print their characters.
std::string display_form(const Value& v);

}  // namespace rkts
