#include "rkts/evaluator.hpp"

#include "rkts/builtins.hpp"

#include <unordered_set>

namespace rkts {

namespace {

[[noreturn]] void eval_error(std::string msg, const SourceLocation& loc) {
    throw RuntimeError(std::move(msg), loc);
}

Value make_closure(std::string name, std::vector<std::string> params, DatumPtr body, EnvPtr env) {
    return Value::closure(std::make_shared<const ClosureData>(
        ClosureData{std::move(name), std::move(params), std::move(body), std::move(env)}));
}

Value with_name(const Value& v, const std::string& name) {
    if (v.kind() != Value::Kind::Closure || !v.closure_data().name.empty()) return v;
    const ClosureData& c = v.closure_data();
    return make_closure(name, c.params, c.body, c.env);
}

Value quote_to_value(const DatumPtr& d) {
    return std::visit(
        [&](const auto& c) -> Value {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BigRational>) {
                return Value::exact(c);
            } else if constexpr (std::is_same_v<T, double>) {
                return Value::inexact(c);
            } else if constexpr (std::is_same_v<T, bool>) {
                return Value::boolean(c);
            } else if constexpr (std::is_same_v<T, SymbolName>) {
                return Value::symbol(c.name);
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return Value::text(c.value);
            } else {
                std::vector<Value> items;
                items.reserve(c.size());
                for (const DatumPtr& item : c) items.push_back(quote_to_value(item));
                return Value::list(std::move(items));
            }
        },
        d->content());
}

bool eval_boolean_guard(const char* form, const DatumPtr& e, const EnvPtr& env) {
    Value v = eval_expr(e, env);
    if (!v.is_boolean()) {
        eval_error(std::string(form) + ": question result is not a boolean: " + written_form(v),
                   e->location());
    }
    return v.boolean_value();
}

Value eval_lambda(const Datum& d, const EnvPtr& env) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() != 3 || !seq[1]->is_sequence()) {
        eval_error("lambda: expects a parameter list and exactly one body expression",
                   d.location());
    }
    const DatumSeq& header = seq[1]->sequence();
    if (header.empty()) {
        eval_error("lambda: expects at least one parameter", seq[1]->location());
    }
    std::vector<std::string> params;
    std::unordered_set<std::string> seen;
    for (const DatumPtr& p : header) {
        if (!p->is_symbol()) eval_error("lambda: parameters must be symbols", p->location());
        if (!seen.insert(p->symbol_name()).second) {
            eval_error("lambda: duplicate parameter " + p->symbol_name(), p->location());
        }
        params.push_back(p->symbol_name());
    }
    return make_closure("", std::move(params), seq[2], env);
}

void eval_define_into(const Datum& d, const EnvPtr& frame) {
    DefineForm f;
    try {
        f = parse_define(d);
    } catch (const ParseError& e) {
        throw RuntimeError(e.message(), e.location());
    }
    Value v = f.is_function ? make_closure(f.name, f.params, f.body, frame)
                            : with_name(eval_expr(f.body, frame), f.name);
    if (!frame->define(f.name, std::move(v))) {
        eval_error("duplicate definition: " + f.name, f.location);
    }
}

Value eval_local(const Datum& d, const EnvPtr& env) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() != 3 || !seq[1]->is_sequence()) {
        eval_error("local: expects a definition group and exactly one body expression",
                   d.location());
    }
    EnvPtr frame = Environment::make(env);
    for (const DatumPtr& def : seq[1]->sequence()) {
        if (!def->is_sequence() || def->sequence().empty() ||
            !def->sequence()[0]->is_symbol("define")) {
            eval_error("local: the definition group may contain only define forms",
                       def->location());
        }
        eval_define_into(*def, frame);
    }
    return eval_expr(seq[2], frame);
}

Value eval_match(const Datum& d, const EnvPtr& env) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() < 3) {
        eval_error("match: expects an expression and at least one clause", d.location());
    }
    // Validate clause shapes before evaluating anything: every pattern is a
    // quoted symbol, except a final else.
    struct Clause {
        const std::string* symbol;  // nullptr for else
        DatumPtr body;
    };
    std::vector<Clause> clauses;
    for (std::size_t i = 2; i < seq.size(); ++i) {
        const Datum& c = *seq[i];
        if (!c.is_sequence() || c.sequence().size() != 2) {
            eval_error("match: malformed clause", c.location());
        }
        const Datum& pattern = *c.sequence()[0];
        if (pattern.is_symbol("else")) {
            if (i + 1 != seq.size()) {
                eval_error("match: else must be the last clause", pattern.location());
            }
            clauses.push_back({nullptr, c.sequence()[1]});
        } else if (pattern.is_quote_form() && pattern.sequence()[1]->is_symbol()) {
            clauses.push_back({&pattern.sequence()[1]->symbol_name(), c.sequence()[1]});
        } else {
            eval_error("match: patterns must be quoted symbols or else", pattern.location());
        }
    }
    Value scrutinee = eval_expr(seq[1], env);
    for (const Clause& c : clauses) {
        if (c.symbol == nullptr ||
            (scrutinee.is_symbol() && scrutinee.symbol_name() == *c.symbol)) {
            return eval_expr(c.body, env);
        }
    }
    eval_error("no matching clause", d.location());
}

Value eval_cond(const Datum& d, const EnvPtr& env) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() < 2) eval_error("cond: expects at least one clause", d.location());
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const Datum& c = *seq[i];
        if (!c.is_sequence() || c.sequence().size() != 2) {
            eval_error("cond: malformed clause", c.location());
        }
        const DatumPtr& question = c.sequence()[0];
        if (question->is_symbol("else")) {
            if (i + 1 != seq.size()) {
                eval_error("cond: else must be the last clause", question->location());
            }
            return eval_expr(c.sequence()[1], env);
        }
        if (eval_boolean_guard("cond", question, env)) {
            return eval_expr(c.sequence()[1], env);
        }
    }
    eval_error("cond: all question results were false", d.location());
}

Value eval_sequence(const Datum& d, const EnvPtr& env) {
    const DatumSeq& seq = d.sequence();
    if (seq.empty()) {
        eval_error("function call: expected a function after the open parenthesis", d.location());
    }
    if (seq[0]->is_symbol()) {
        const std::string& head = seq[0]->symbol_name();
        if (head == "quote") {
            if (seq.size() != 2) eval_error("quote: expects a single datum", d.location());
            return quote_to_value(seq[1]);
        }
        if (head == "lambda") return eval_lambda(d, env);
        if (head == "local") return eval_local(d, env);
        if (head == "match") return eval_match(d, env);
        if (head == "if") {
            if (seq.size() != 4) {
                eval_error("if: expects a question and two answers", d.location());
            }
            return eval_boolean_guard("if", seq[1], env) ? eval_expr(seq[2], env)
                                                         : eval_expr(seq[3], env);
        }
        if (head == "cond") return eval_cond(d, env);
        if (head == "and" || head == "or") {
            if (seq.size() < 3) {
                eval_error(head + ": expects at least two expressions", d.location());
            }
            bool stop_on = head == "or";
            for (std::size_t i = 1; i < seq.size(); ++i) {
                if (eval_boolean_guard(head.c_str(), seq[i], env) == stop_on) {
                    return Value::boolean(stop_on);
                }
            }
            return Value::boolean(!stop_on);
        }
        if (head == "define" || head == "define-struct") {
            eval_error(head + ": not allowed in an expression position", d.location());
        }
        if (head == "check-expect" || head == "check-within" || head == "check-error") {
            eval_error(head + ": found a test that is not at the top level", d.location());
        }
    }
    Value fn = eval_expr(seq[0], env);
    std::vector<Value> args;
    args.reserve(seq.size() - 1);
    for (std::size_t i = 1; i < seq.size(); ++i) args.push_back(eval_expr(seq[i], env));
    return apply_value(fn, args, d.location());
}

std::string plural_args(std::size_t n) {
    return std::to_string(n) + (n == 1 ? " argument" : " arguments");
}

}  // namespace

Value eval_expr(const DatumPtr& e, const EnvPtr& env) {
    return std::visit(
        [&](const auto& c) -> Value {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BigRational>) {
                return Value::exact(c);
            } else if constexpr (std::is_same_v<T, double>) {
                return Value::inexact(c);
            } else if constexpr (std::is_same_v<T, bool>) {
                return Value::boolean(c);
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return Value::text(c.value);
            } else if constexpr (std::is_same_v<T, SymbolName>) {
                if (c.name == "...") {
                    eval_error("template placeholder reached", e->location());
                }
                if (c.name == "else") {
                    eval_error("else: not allowed here", e->location());
                }
                const Value* v = env->lookup(c.name);
                if (v == nullptr) {
                    eval_error(c.name + ": this variable is not defined", e->location());
                }
                return *v;
            } else {
                return eval_sequence(*e, env);
            }
        },
        e->content());
}

Value apply_value(const Value& f, std::span<const Value> args, const SourceLocation& call_site) {
    switch (f.kind()) {
        case Value::Kind::Closure: {
            const ClosureData& c = f.closure_data();
            if (args.size() != c.params.size()) {
                std::string who = c.name.empty() ? "the function" : c.name;
                eval_error(who + ": expects " + plural_args(c.params.size()) + ", given " +
                               std::to_string(args.size()),
                           call_site);
            }
            EnvPtr frame = Environment::make(c.env);
            for (std::size_t i = 0; i < args.size(); ++i) frame->define(c.params[i], args[i]);
            return eval_expr(c.body, frame);
        }
        case Value::Kind::Primitive: {
            const PrimitiveData& p = f.primitive_data();
            std::size_t n = args.size();
            bool too_few = n < static_cast<std::size_t>(p.min_args);
            bool too_many = p.max_args >= 0 && n > static_cast<std::size_t>(p.max_args);
            if (too_few || too_many) {
                std::string expectation =
                    p.min_args == p.max_args
                        ? plural_args(p.min_args)
                        : (p.max_args < 0 ? "at least " + plural_args(p.min_args)
                                          : "between " + std::to_string(p.min_args) + " and " +
                                                std::to_string(p.max_args) + " arguments");
                eval_error(p.name + ": expects " + expectation + ", given " + std::to_string(n),
                           call_site);
            }
            return p.apply(args, call_site);
        }
        default:
            eval_error("application of a non-function: " + std::string(kind_name(f.kind())),
                       call_site);
    }
}

void define_structure(const StructType& t, const EnvPtr& env, const SourceLocation& loc) {
    auto type = std::make_shared<const StructType>(t);
    auto bind = [&](const std::string& name, Value v) {
        if (!env->define(name, std::move(v))) {
            eval_error("duplicate definition: " + name, loc);
        }
    };

    std::size_t field_count = type->field_names.size();
    bind("make-" + type->name,
         Value::primitive(std::make_shared<const PrimitiveData>(PrimitiveData{
             "make-" + type->name, static_cast<int>(field_count), static_cast<int>(field_count),
             [type](std::span<const Value> args, const SourceLocation&) {
                 return Value::struct_instance(type, std::vector<Value>(args.begin(), args.end()));
             }})));

    bind(type->name + "?",
         Value::primitive(std::make_shared<const PrimitiveData>(
             PrimitiveData{type->name + "?", 1, 1,
                           [type](std::span<const Value> args, const SourceLocation&) {
                               return Value::boolean(args[0].is_struct() &&
                                                     args[0].struct_data().type == type);
                           }})));

    for (std::size_t i = 0; i < field_count; ++i) {
        std::string selector = type->name + "-" + type->field_names[i];
        bind(selector,
             Value::primitive(std::make_shared<const PrimitiveData>(PrimitiveData{
                 selector, 1, 1,
                 [type, i, selector](std::span<const Value> args, const SourceLocation& at) -> Value {
                     if (!args[0].is_struct() || args[0].struct_data().type != type) {
                         throw RuntimeError(selector + ": expects a " + type->name, at);
                     }
                     return args[0].struct_data().fields[i];
                 }})));
    }
}

EnvPtr make_global_env() {
    static const EnvPtr builtins_env = [] {
        EnvPtr env = Environment::make();
        for (const auto& [name, value] : builtin_table()) env->define(name, value);
        return env;
    }();
    return Environment::make(builtins_env);
}

EvalResult eval_program(const Program& p) {
    EvalResult result;
    result.env = make_global_env();
    std::vector<CheckFormData> checks;
    for (const TopForm& form : p.forms) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, DefineForm>) {
                    Value v = f.is_function
                                  ? make_closure(f.name, f.params, f.body, result.env)
                                  : with_name(eval_expr(f.body, result.env), f.name);
                    if (!result.env->define(f.name, std::move(v))) {
                        eval_error("duplicate definition: " + f.name, f.location);
                    }
                } else if constexpr (std::is_same_v<T, StructDefForm>) {
                    define_structure({f.type_name, f.field_names}, result.env, f.location);
                } else if constexpr (std::is_same_v<T, CheckFormData>) {
                    checks.push_back(f);
                } else if constexpr (std::is_same_v<T, ExprForm>) {
                    result.expression_values.push_back(eval_expr(f.datum, result.env));
                }
            },
            form);
    }
    result.report = run_checks(checks, result.env);
    return result;
}

}  // namespace rkts
