#pragma once

#include "rkts/datum.hpp"
#include "rkts/error.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rkts {

class SpecError : public std::exception {
public:
    SpecError(std::string message, SourceLocation location)
        : message_(std::move(message)), location_(location) {}
    const std::string& message() const { return message_; }
    SourceLocation location() const { return location_; }
    const char* what() const noexcept override { return message_.c_str(); }

private:
    std::string message_;
    SourceLocation location_;
};

/// A base type name, or a function type with at least one parameter.
class TypeExpr {
public:
    static TypeExpr base(std::string name) {
        TypeExpr t;
        t.base_ = std::move(name);
        return t;
    }
    static TypeExpr function(std::vector<TypeExpr> params, TypeExpr result) {
        TypeExpr t;
        t.params_ = std::move(params);
        t.result_ = std::make_shared<TypeExpr>(std::move(result));
        return t;
    }

    bool is_function() const { return result_ != nullptr; }
    const std::string& base_name() const { return base_; }
    const std::vector<TypeExpr>& params() const { return params_; }
    const TypeExpr& result() const { return *result_; }

    // "number", "gs -> boolean", "(a -> b) c -> d"
    std::string to_string() const;

private:
    std::string base_;
    std::vector<TypeExpr> params_;
    std::shared_ptr<const TypeExpr> result_;
};

struct Service {
    std::string message;
    TypeExpr result;
    std::optional<std::string> wrapper_name;  // #:wrapper-name override
    SourceLocation location;
};

struct InterfaceSpec {
    std::string name;
    std::vector<Service> services;  // nonempty, messages unique
    SourceLocation location;

    const Service* find_service(const std::string& message) const;
};

struct FieldSpec {
    std::string name;
    TypeExpr type;
    std::optional<std::string> message_override;  // #:message

    // 'get-<name> unless overridden
    std::string getter_message() const {
        return message_override ? *message_override : "get-" + name;
    }
};

struct ClassSpec {
    std::string constructor_name;  // conventionally make-<variant>
    std::string interface_name;
    std::vector<FieldSpec> fields;  // names distinct
    SourceLocation location;

    // "sq" for "make-sq"; the full constructor name otherwise
    std::string variant_name() const;
};

struct UnionSpec {
    std::string name;                   // the interface
    std::vector<std::string> variants;  // >= 2 constructor names
    SourceLocation location;
};

struct SpecFile {
    std::vector<InterfaceSpec> interfaces;
    std::vector<ClassSpec> classes;
    std::vector<UnionSpec> unions;

    const InterfaceSpec* find_interface(const std::string& name) const;
    const ClassSpec* find_class(const std::string& constructor_name) const;
    std::vector<const ClassSpec*> classes_of(const std::string& interface_name) const;
};

// Parses define-interface / define-class / define-union forms. Validates
// that every class implements a declared interface and every union variant
// names a declared class of the union's interface.
SpecFile parse_spec(std::span<const DatumPtr> data);

// tokenize + read_all + parse_spec
SpecFile parse_spec_source(std::string_view text);

}  // namespace rkts
