#include "rkts/lint.hpp"

#include "rkts/evaluator.hpp"

#include <unordered_map>
#include <unordered_set>

namespace rkts {

bool has_errors(std::span<const Diagnostic> diags) {
    for (const Diagnostic& d : diags) {
        if (d.severity == Severity::Error) return true;
    }
    return false;
}

namespace {

bool head_is(const Datum& d, std::string_view name) {
    return d.is_sequence() && !d.sequence().empty() && d.sequence()[0]->is_symbol(name);
}

// (define (NAME PARAM) (match PARAM clause...)) returned by the local body.
bool extract_manager(const Datum& def, const std::string& returned, ManagerShape& shape) {
    if (!head_is(def, "define") || def.sequence().size() != 3) return false;
    const Datum& header = *def.sequence()[1];
    if (!header.is_sequence() || header.sequence().size() != 2) return false;
    if (!header.sequence()[0]->is_symbol(returned) || !header.sequence()[1]->is_symbol()) {
        return false;
    }
    const std::string& param = header.sequence()[1]->symbol_name();
    const Datum& body = *def.sequence()[2];
    if (!head_is(body, "match") || body.sequence().size() < 2 ||
        !body.sequence()[1]->is_symbol(param)) {
        return false;
    }
    shape.match_location = body.location();
    for (std::size_t i = 2; i < body.sequence().size(); ++i) {
        const Datum& clause = *body.sequence()[i];
        if (!clause.is_sequence() || clause.sequence().size() != 2) continue;
        const Datum& pattern = *clause.sequence()[0];
        if (pattern.is_symbol("else")) {
            shape.has_else = true;
        } else if (pattern.is_quote_form() && pattern.sequence()[1]->is_symbol()) {
            shape.clauses.push_back({pattern.sequence()[1]->symbol_name(), clause.location()});
        }
    }
    return true;
}

void walk_for_managers(const DatumPtr& d, const std::string& enclosing,
                       const std::vector<std::string>& params,
                       std::vector<ManagerShape>& shapes) {
    if (!d->is_sequence()) return;
    if (head_is(*d, "local") && d->sequence().size() == 3 && d->sequence()[1]->is_sequence() &&
        d->sequence()[2]->is_symbol()) {
        const std::string& returned = d->sequence()[2]->symbol_name();
        for (const DatumPtr& def : d->sequence()[1]->sequence()) {
            ManagerShape shape;
            shape.enclosing_define = enclosing;
            shape.enclosing_params = params;
            if (extract_manager(*def, returned, shape)) {
                shapes.push_back(std::move(shape));
                break;
            }
        }
    }
    for (const DatumPtr& child : d->sequence()) {
        walk_for_managers(child, enclosing, params, shapes);
    }
}

std::vector<std::string> lambda_params(const Datum& d) {
    std::vector<std::string> params;
    if (head_is(d, "lambda") && d.sequence().size() == 3 && d.sequence()[1]->is_sequence()) {
        for (const DatumPtr& p : d.sequence()[1]->sequence()) {
            if (!p->is_symbol()) return {};
            params.push_back(p->symbol_name());
        }
    }
    return params;
}

// Interface messages first, then the class's field getters.
std::vector<std::string> required_messages(const InterfaceSpec& i, const ManagerShape& shape,
                                           const ClassSpec* cs) {
    std::vector<std::string> required;
    std::unordered_set<std::string> seen;
    for (const Service& s : i.services) {
        if (seen.insert(s.message).second) required.push_back(s.message);
    }
    if (cs != nullptr) {
        for (const FieldSpec& f : cs->fields) {
            std::string msg = f.getter_message();
            if (seen.insert(msg).second) required.push_back(std::move(msg));
        }
    } else {
        for (const std::string& p : shape.enclosing_params) {
            std::string msg = "get-" + p;
            if (seen.insert(msg).second) required.push_back(std::move(msg));
        }
    }
    return required;
}

Value sym_value(const std::string& name) {
    return Value::symbol(name);
}

}  // namespace

std::vector<ManagerShape> find_manager_shapes(const Program& p) {
    std::vector<ManagerShape> shapes;
    for (const TopForm& form : p.forms) {
        if (const auto* def = std::get_if<DefineForm>(&form)) {
            std::vector<std::string> params =
                def->is_function ? def->params : lambda_params(*def->body);
            walk_for_managers(def->body, def->name, params, shapes);
        } else if (const auto* expr = std::get_if<ExprForm>(&form)) {
            walk_for_managers(expr->datum, "", {}, shapes);
        }
    }
    return shapes;
}

std::vector<Diagnostic> lint_manager(const Program& p, const InterfaceSpec& i,
                                     std::span<const ClassSpec> classes) {
    std::vector<Diagnostic> diags;
    std::vector<ManagerShape> shapes = find_manager_shapes(p);
    if (shapes.empty()) {
        diags.push_back({Severity::Warning, "no-manager-found",
                         "no manager-shaped class definition found", {1, 1}});
        return diags;
    }
    for (const ManagerShape& shape : shapes) {
        const ClassSpec* cs = nullptr;
        for (const ClassSpec& c : classes) {
            if (c.constructor_name == shape.enclosing_define) cs = &c;
        }
        std::vector<std::string> required = required_messages(i, shape, cs);
        std::unordered_set<std::string> required_set(required.begin(), required.end());
        std::unordered_set<std::string> present;
        for (const ClauseInfo& clause : shape.clauses) {
            if (!present.insert(clause.symbol).second) {
                diags.push_back({Severity::Warning, "shadowed-clause",
                                 "clause '" + clause.symbol + " is shadowed by an earlier clause",
                                 clause.location});
            } else if (!required_set.contains(clause.symbol)) {
                diags.push_back({Severity::Warning, "extra-message",
                                 "clause '" + clause.symbol + " is not a message of " + i.name,
                                 clause.location});
            }
        }
        for (const std::string& msg : required) {
            if (!present.contains(msg)) {
                diags.push_back({Severity::Error, "missing-message",
                                 "manager for " + i.name + " has no clause for '" + msg,
                                 shape.match_location});
            }
        }
        if (!shape.has_else) {
            diags.push_back({Severity::Error, "missing-else",
                             "manager for " + i.name + " has no else clause",
                             shape.match_location});
        }
    }
    return diags;
}

std::vector<Diagnostic> verify_dispatch(const Program& p, const UnionSpec& u,
                                        const InterfaceSpec& i, const SpecFile& spec) {
    std::vector<Diagnostic> diags;

    std::unordered_map<std::string, const ManagerShape*> shape_by_ctor;
    std::vector<ManagerShape> shapes = find_manager_shapes(p);
    for (const ManagerShape& s : shapes) {
        if (!s.enclosing_define.empty()) shape_by_ctor.emplace(s.enclosing_define, &s);
    }

    EnvPtr env;
    try {
        env = eval_program(p).env;
    } catch (const RuntimeError& e) {
        diags.push_back({Severity::Error, "program-error",
                         "program evaluation failed: " + e.message(), e.location()});
    }

    std::unordered_set<std::string> interface_names;
    for (const InterfaceSpec& iface : spec.interfaces) interface_names.insert(iface.name);

    for (const std::string& ctor : u.variants) {
        const ClassSpec* cs = spec.find_class(ctor);
        if (cs == nullptr) {
            diags.push_back({Severity::Error, "missing-constructor",
                             "union variant " + ctor + " is not a declared class", u.location});
            continue;
        }
        const std::string variant = cs->variant_name();

        const ManagerShape* shape = nullptr;
        if (auto it = shape_by_ctor.find(ctor); it != shape_by_ctor.end()) shape = it->second;

        ManagerShape empty_shape;
        std::vector<std::string> required =
            required_messages(i, shape != nullptr ? *shape : empty_shape, cs);

        // Static: every required message has a clause.
        std::unordered_set<std::string> missing;
        if (shape != nullptr) {
            std::unordered_set<std::string> present;
            for (const ClauseInfo& clause : shape->clauses) present.insert(clause.symbol);
            for (const std::string& msg : required) {
                if (!present.contains(msg)) {
                    diags.push_back({Severity::Error, "missing-variant-message",
                                     "class " + variant + " does not handle '" + msg,
                                     shape->match_location});
                    missing.insert(msg);
                }
            }
        }

        if (env == nullptr) continue;
        SourceLocation at = shape != nullptr ? shape->match_location : SourceLocation{1, 1};

        const Value* ctor_value = env->lookup(ctor);
        if (ctor_value == nullptr || !ctor_value->is_function()) {
            diags.push_back({Severity::Error, "missing-constructor",
                             "constructor " + ctor + " is not defined by the program", at});
            continue;
        }

        // Canonical sample construction; interface-typed or unknown-typed
        // fields leave the variant to the static check alone.
        std::vector<Value> args;
        bool static_only = false;
        for (const FieldSpec& f : cs->fields) {
            if (f.type.is_function() || interface_names.contains(f.type.base_name())) {
                static_only = true;
                break;
            }
            const std::string& base = f.type.base_name();
            if (base == "number") {
                args.push_back(Value::exact(1L));
            } else if (base == "symbol") {
                args.push_back(sym_value("sample"));
            } else if (base == "boolean") {
                args.push_back(Value::boolean(true));
            } else if (base == "string") {
                args.push_back(Value::text("sample"));
            } else {
                static_only = true;
                break;
            }
        }
        if (static_only) continue;

        Value instance = Value::boolean(false);
        try {
            instance = apply_value(*ctor_value, args, at);
        } catch (const RuntimeError& e) {
            diags.push_back({Severity::Error, "dispatch-error",
                             "constructing a " + variant + " raised: " + e.message(), at});
            continue;
        }
        if (!instance.is_function()) {
            diags.push_back({Severity::Error, "dispatch-error",
                             "constructor " + ctor + " did not return an object", at});
            continue;
        }
        for (const std::string& msg : required) {
            if (missing.contains(msg)) continue;
            try {
                Value m = sym_value(msg);
                apply_value(instance, std::span(&m, 1), at);
            } catch (const RuntimeError& e) {
                diags.push_back({Severity::Error, "dispatch-error",
                                 "sending '" + msg + " to a " + variant +
                                     " raised: " + e.message(),
                                 at});
            }
        }
    }
    return diags;
}

}  // namespace rkts
