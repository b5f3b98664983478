#include "rkts/builtins.hpp"

#include "rkts/evaluator.hpp"

#include <cmath>
#include <numbers>

namespace rkts {

namespace {

using Args = std::span<const Value>;

[[noreturn]] void prim_error(const std::string& name, const std::string& what,
                             const SourceLocation& loc) {
    throw RuntimeError(name + ": " + what, loc);
}

void want_number(const char* name, const Value& v, const SourceLocation& loc) {
    if (!v.is_number()) {
        prim_error(name, "expects a number, given " + written_form(v), loc);
    }
}

void want_list(const char* name, const Value& v, const SourceLocation& loc) {
    if (!v.is_list()) {
        prim_error(name, "expects a list, given " + written_form(v), loc);
    }
}

bool all_exact(Args args) {
    for (const Value& v : args) {
        if (!v.is_exact()) return false;
    }
    return true;
}

Value prim(std::string name, int min_args, int max_args,
           std::function<Value(Args, const SourceLocation&)> fn) {
    return Value::primitive(std::make_shared<const PrimitiveData>(
        PrimitiveData{std::move(name), min_args, max_args, std::move(fn)}));
}

// + - * with contagion: exact operands stay exact, any inexact operand
// makes the whole result inexact.
template <typename ExactOp, typename DoubleOp>
Value fold_arith(const char* name, Args args, const SourceLocation& loc, ExactOp exact_op,
                 DoubleOp double_op) {
    for (const Value& v : args) want_number(name, v, loc);
    if (all_exact(args)) {
        BigRational acc = args[0].exact_value();
        for (std::size_t i = 1; i < args.size(); ++i) acc = exact_op(acc, args[i].exact_value());
        return Value::exact(std::move(acc));
    }
    double acc = args[0].number_as_double();
    for (std::size_t i = 1; i < args.size(); ++i) acc = double_op(acc, args[i].number_as_double());
    return Value::inexact(acc);
}

// =, <, ... chain over adjacent pairs; mixed exactness compares in binary64.
template <typename ExactCmp, typename DoubleCmp>
Value fold_compare(const char* name, Args args, const SourceLocation& loc, ExactCmp exact_cmp,
                   DoubleCmp double_cmp) {
    for (const Value& v : args) want_number(name, v, loc);
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        const Value& a = args[i];
        const Value& b = args[i + 1];
        bool ok = a.is_exact() && b.is_exact()
                      ? exact_cmp(a.exact_value(), b.exact_value())
                      : double_cmp(a.number_as_double(), b.number_as_double());
        if (!ok) return Value::boolean(false);
    }
    return Value::boolean(true);
}

Value builtin_divide(Args args, const SourceLocation& loc) {
    for (const Value& v : args) want_number("/", v, loc);
    for (std::size_t i = 1; i < args.size(); ++i) {
        const Value& d = args[i];
        bool zero = d.is_exact() ? d.exact_value() == 0 : d.inexact_value() == 0.0;
        if (zero) prim_error("/", "division by zero", loc);
    }
    if (all_exact(args)) {
        BigRational acc = args[0].exact_value();
        for (std::size_t i = 1; i < args.size(); ++i) acc /= args[i].exact_value();
        return Value::exact(std::move(acc));
    }
    double acc = args[0].number_as_double();
    for (std::size_t i = 1; i < args.size(); ++i) acc /= args[i].number_as_double();
    return Value::inexact(acc);
}

Value builtin_sqrt(Args args, const SourceLocation& loc) {
    const Value& v = args[0];
    want_number("sqrt", v, loc);
    if (v.is_exact()) {
        const BigRational& r = v.exact_value();
        if (r < 0) prim_error("sqrt", "expects a nonnegative number", loc);
        if (auto root = exact_sqrt(r)) return Value::exact(std::move(*root));
        return Value::inexact(std::sqrt(rational_to_double(r)));
    }
    double d = v.inexact_value();
    if (d < 0) prim_error("sqrt", "expects a nonnegative number", loc);
    return Value::inexact(std::sqrt(d));
}

Value builtin_map(Args args, const SourceLocation& loc) {
    const Value& fn = args[0];
    if (!fn.is_function()) prim_error("map", "expects a function as its first argument", loc);
    std::size_t n = 0;
    for (std::size_t i = 1; i < args.size(); ++i) {
        want_list("map", args[i], loc);
        if (i == 1) {
            n = args[i].list_items().size();
        } else if (args[i].list_items().size() != n) {
            prim_error("map", "all lists must have the same length", loc);
        }
    }
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Value> call;
        call.reserve(args.size() - 1);
        for (std::size_t j = 1; j < args.size(); ++j) call.push_back(args[j].list_items()[i]);
        out.push_back(apply_value(fn, call, loc));
    }
    return Value::list(std::move(out));
}

Value builtin_filter(Args args, const SourceLocation& loc) {
    const Value& fn = args[0];
    if (!fn.is_function()) prim_error("filter", "expects a function as its first argument", loc);
    want_list("filter", args[1], loc);
    std::vector<Value> out;
    for (const Value& item : args[1].list_items()) {
        Value keep = apply_value(fn, std::span(&item, 1), loc);
        if (!keep.is_boolean()) {
            prim_error("filter", "the function must return a boolean", loc);
        }
        if (keep.boolean_value()) out.push_back(item);
    }
    return Value::list(std::move(out));
}

Value builtin_foldr(Args args, const SourceLocation& loc) {
    const Value& fn = args[0];
    if (!fn.is_function()) prim_error("foldr", "expects a function as its first argument", loc);
    std::size_t n = 0;
    for (std::size_t i = 2; i < args.size(); ++i) {
        want_list("foldr", args[i], loc);
        if (i == 2) {
            n = args[i].list_items().size();
        } else if (args[i].list_items().size() != n) {
            prim_error("foldr", "all lists must have the same length", loc);
        }
    }
    Value acc = args[1];
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Value> call;
        call.reserve(args.size() - 1);
        for (std::size_t j = 2; j < args.size(); ++j) call.push_back(args[j].list_items()[i]);
        call.push_back(std::move(acc));
        acc = apply_value(fn, call, loc);
    }
    return acc;
}

std::unordered_map<std::string, Value> build_table() {
    std::unordered_map<std::string, Value> t;
    auto add = [&](std::string name, int min_args, int max_args,
                   std::function<Value(Args, const SourceLocation&)> fn) {
        t.emplace(name, prim(name, min_args, max_args, std::move(fn)));
    };

    add("+", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_arith("+", a, loc, [](auto x, auto y) { return x + y; },
                          [](double x, double y) { return x + y; });
    });
    add("*", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_arith("*", a, loc, [](auto x, auto y) { return x * y; },
                          [](double x, double y) { return x * y; });
    });
    add("-", 1, -1, [](Args a, const SourceLocation& loc) {
        if (a.size() == 1) {
            want_number("-", a[0], loc);
            if (a[0].is_exact()) return Value::exact(-a[0].exact_value());
            return Value::inexact(-a[0].inexact_value());
        }
        return fold_arith("-", a, loc, [](auto x, auto y) { return x - y; },
                          [](double x, double y) { return x - y; });
    });
    add("/", 2, -1, builtin_divide);

    add("=", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_compare("=", a, loc, [](const auto& x, const auto& y) { return x == y; },
                            [](double x, double y) { return x == y; });
    });
    add("<", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_compare("<", a, loc, [](const auto& x, const auto& y) { return x < y; },
                            [](double x, double y) { return x < y; });
    });
    add(">", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_compare(">", a, loc, [](const auto& x, const auto& y) { return x > y; },
                            [](double x, double y) { return x > y; });
    });
    add("<=", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_compare("<=", a, loc, [](const auto& x, const auto& y) { return x <= y; },
                            [](double x, double y) { return x <= y; });
    });
    add(">=", 2, -1, [](Args a, const SourceLocation& loc) {
        return fold_compare(">=", a, loc, [](const auto& x, const auto& y) { return x >= y; },
                            [](double x, double y) { return x >= y; });
    });

    add("sqr", 1, 1, [](Args a, const SourceLocation& loc) {
        want_number("sqr", a[0], loc);
        if (a[0].is_exact()) {
            const BigRational& r = a[0].exact_value();
            return Value::exact(r * r);
        }
        double d = a[0].inexact_value();
        return Value::inexact(d * d);
    });
    add("sqrt", 1, 1, builtin_sqrt);
    add("add1", 1, 1, [](Args a, const SourceLocation& loc) {
        want_number("add1", a[0], loc);
        if (a[0].is_exact()) return Value::exact(a[0].exact_value() + 1);
        return Value::inexact(a[0].inexact_value() + 1.0);
    });
    add("sub1", 1, 1, [](Args a, const SourceLocation& loc) {
        want_number("sub1", a[0], loc);
        if (a[0].is_exact()) return Value::exact(a[0].exact_value() - 1);
        return Value::inexact(a[0].inexact_value() - 1.0);
    });
    add("abs", 1, 1, [](Args a, const SourceLocation& loc) {
        want_number("abs", a[0], loc);
        if (a[0].is_exact()) {
            const BigRational& r = a[0].exact_value();
            return Value::exact(r < 0 ? -r : r);
        }
        return Value::inexact(std::fabs(a[0].inexact_value()));
    });
    add("min", 1, -1, [](Args a, const SourceLocation& loc) {
        for (const Value& v : a) want_number("min", v, loc);
        std::size_t best = 0;
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i].number_as_double() < a[best].number_as_double()) best = i;
        }
        if (all_exact(a)) return a[best];
        return Value::inexact(a[best].number_as_double());
    });
    add("max", 1, -1, [](Args a, const SourceLocation& loc) {
        for (const Value& v : a) want_number("max", v, loc);
        std::size_t best = 0;
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i].number_as_double() > a[best].number_as_double()) best = i;
        }
        if (all_exact(a)) return a[best];
        return Value::inexact(a[best].number_as_double());
    });

    add("not", 1, 1, [](Args a, const SourceLocation& loc) {
        if (!a[0].is_boolean()) {
            prim_error("not", "expects a boolean, given " + written_form(a[0]), loc);
        }
        return Value::boolean(!a[0].boolean_value());
    });

    add("cons", 2, 2, [](Args a, const SourceLocation& loc) {
        if (!a[1].is_list()) {
            prim_error("cons", "second argument must be a list, given " + written_form(a[1]), loc);
        }
        std::vector<Value> items;
        items.reserve(a[1].list_items().size() + 1);
        items.push_back(a[0]);
        items.insert(items.end(), a[1].list_items().begin(), a[1].list_items().end());
        return Value::list(std::move(items));
    });
    add("first", 1, 1, [](Args a, const SourceLocation& loc) {
        want_list("first", a[0], loc);
        if (a[0].list_items().empty()) prim_error("first", "expects a non-empty list", loc);
        return a[0].list_items().front();
    });
    add("rest", 1, 1, [](Args a, const SourceLocation& loc) {
        want_list("rest", a[0], loc);
        const auto& items = a[0].list_items();
        if (items.empty()) prim_error("rest", "expects a non-empty list", loc);
        return Value::list(std::vector<Value>(items.begin() + 1, items.end()));
    });
    add("empty?", 1, 1, [](Args a, const SourceLocation&) {
        return Value::boolean(a[0].is_list() && a[0].list_items().empty());
    });
    add("cons?", 1, 1, [](Args a, const SourceLocation&) {
        return Value::boolean(a[0].is_list() && !a[0].list_items().empty());
    });
    add("list", 0, -1, [](Args a, const SourceLocation&) {
        return Value::list(std::vector<Value>(a.begin(), a.end()));
    });
    add("length", 1, 1, [](Args a, const SourceLocation& loc) {
        want_list("length", a[0], loc);
        return Value::exact(static_cast<long>(a[0].list_items().size()));
    });
    add("append", 0, -1, [](Args a, const SourceLocation& loc) {
        std::vector<Value> items;
        for (const Value& v : a) {
            want_list("append", v, loc);
            items.insert(items.end(), v.list_items().begin(), v.list_items().end());
        }
        return Value::list(std::move(items));
    });
    add("reverse", 1, 1, [](Args a, const SourceLocation& loc) {
        want_list("reverse", a[0], loc);
        std::vector<Value> items(a[0].list_items().rbegin(), a[0].list_items().rend());
        return Value::list(std::move(items));
    });

    add("map", 2, -1, builtin_map);
    add("filter", 2, 2, builtin_filter);
    add("foldr", 3, -1, builtin_foldr);

    add("string-append", 0, -1, [](Args a, const SourceLocation& loc) {
        std::string out;
        for (const Value& v : a) {
            if (!v.is_text()) {
                prim_error("string-append", "expects a string, given " + written_form(v), loc);
            }
            out += v.text_value();
        }
        return Value::text(std::move(out));
    });
    add("string=?", 2, -1, [](Args a, const SourceLocation& loc) {
        for (const Value& v : a) {
            if (!v.is_text()) {
                prim_error("string=?", "expects a string, given " + written_form(v), loc);
            }
        }
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i].text_value() != a[i + 1].text_value()) return Value::boolean(false);
        }
        return Value::boolean(true);
    });
    add("symbol->string", 1, 1, [](Args a, const SourceLocation& loc) {
        if (!a[0].is_symbol()) {
            prim_error("symbol->string", "expects a symbol, given " + written_form(a[0]), loc);
        }
        return Value::text(a[0].symbol_name());
    });
    add("symbol=?", 2, -1, [](Args a, const SourceLocation& loc) {
        for (const Value& v : a) {
            if (!v.is_symbol()) {
                prim_error("symbol=?", "expects a symbol, given " + written_form(v), loc);
            }
        }
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i].symbol_name() != a[i + 1].symbol_name()) return Value::boolean(false);
        }
        return Value::boolean(true);
    });
    add("number->string", 1, 1, [](Args a, const SourceLocation& loc) {
        want_number("number->string", a[0], loc);
        return Value::text(written_form(a[0]));
    });

    add("format", 1, -1, [](Args a, const SourceLocation& loc) {
        if (!a[0].is_text()) {
            prim_error("format", "expects a format string, given " + written_form(a[0]), loc);
        }
        return Value::text(format_template(a[0].text_value(), a.subspan(1), loc));
    });
    add("error", 1, 1, [](Args a, const SourceLocation& loc) -> Value {
        if (!a[0].is_text()) prim_error("error", "expects a string", loc);
        raise_error(a[0].text_value(), loc);
    });
    add("equal?", 2, 2, [](Args a, const SourceLocation&) {
        return Value::boolean(structurally_equal(a[0], a[1]));
    });

    t.emplace("pi", Value::inexact(std::numbers::pi));
    t.emplace("empty", Value::list(std::vector<Value>{}));
    return t;
}

}  // namespace

const std::unordered_map<std::string, Value>& builtin_table() {
    static const std::unordered_map<std::string, Value> table = build_table();
    return table;
}

std::string format_template(const std::string& tmpl, std::span<const Value> args,
                            const SourceLocation& loc) {
    std::string out;
    std::size_t next_arg = 0;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '~') {
            out += tmpl[i];
            continue;
        }
        if (i + 1 >= tmpl.size()) {
            throw RuntimeError("format: incomplete directive at end of format string", loc);
        }
        char directive = tmpl[++i];
        switch (directive) {
            case '~':
                out += '~';
                break;
            case 's':
            case 'a':
                if (next_arg >= args.size()) {
                    throw RuntimeError("format: too few values for the format string", loc);
                }
                out += directive == 's' ? written_form(args[next_arg]) : display_form(args[next_arg]);
                ++next_arg;
                break;
            default:
                throw RuntimeError(std::string("format: unknown directive ~") + directive, loc);
        }
    }
    if (next_arg != args.size()) {
        throw RuntimeError("format: too many values for the format string", loc);
    }
    return out;
}

void raise_error(std::string msg, const SourceLocation& loc) {
    throw RuntimeError(std::move(msg), loc);
}

}  // namespace rkts
