#include "rkts/testing.hpp"

#include "rkts/evaluator.hpp"

#include <cmath>
#include <variant>

namespace rkts {

namespace {

// Successful value or the raised message.
using Outcome = std::variant<Value, std::string>;

Outcome try_eval(const DatumPtr& e, const EnvPtr& env) {
    try {
        return eval_expr(e, env);
    } catch (const RuntimeError& err) {
        return err.message();
    }
}

// nullopt when the values agree within the tolerance; otherwise a shape
// diagnostic. Non-numeric leaves must be equal; numeric leaves may differ by
// at most `tol`.
std::optional<std::string> within_mismatch(const Value& a, const Value& b, double tol) {
    if (a.is_number() && b.is_number()) {
        double da = a.number_as_double();
        double db = b.number_as_double();
        if (std::fabs(da - db) <= tol) return std::nullopt;
        return "";  // plain numeric mismatch, no shape diagnostic
    }
    if (a.kind() != b.kind()) {
        return std::string("shape mismatch: ") + std::string(kind_name(a.kind())) + " vs " +
               std::string(kind_name(b.kind()));
    }
    switch (a.kind()) {
        case Value::Kind::List: {
            const auto& xs = a.list_items();
            const auto& ys = b.list_items();
            if (xs.size() != ys.size()) return "shape mismatch: list lengths differ";
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (auto m = within_mismatch(xs[i], ys[i], tol)) return m;
            }
            return std::nullopt;
        }
        case Value::Kind::Struct: {
            const auto& x = a.struct_data();
            const auto& y = b.struct_data();
            if (x.type != y.type) return "shape mismatch: different structure types";
            for (std::size_t i = 0; i < x.fields.size(); ++i) {
                if (auto m = within_mismatch(x.fields[i], y.fields[i], tol)) return m;
            }
            return std::nullopt;
        }
        default:
            if (structurally_equal(a, b)) return std::nullopt;
            return "";
    }
}

CheckResult errored(const CheckFormData& c, std::string detail) {
    return {c, CheckOutcome::Errored, "", "", std::move(detail)};
}

CheckResult run_expect(const CheckFormData& c, const EnvPtr& env) {
    Outcome actual = try_eval(c.actual, env);
    if (auto* msg = std::get_if<std::string>(&actual)) {
        return errored(c, "check-expect raised \"" + *msg + "\"");
    }
    Outcome expected = try_eval(c.expected, env);
    if (auto* msg = std::get_if<std::string>(&expected)) {
        return errored(c, "check-expect raised \"" + *msg + "\"");
    }
    const Value& av = std::get<Value>(actual);
    const Value& ev = std::get<Value>(expected);
    if (contains_inexact(av) || contains_inexact(ev)) {
        return errored(c, "use check-within for inexact results");
    }
    CheckResult result{c, CheckOutcome::Pass, written_form(av), written_form(ev), ""};
    if (!structurally_equal(av, ev)) {
        result.outcome = CheckOutcome::Fail;
        result.detail = "expected " + result.expected + " got " + result.actual;
    }
    return result;
}

CheckResult run_within(const CheckFormData& c, const EnvPtr& env) {
    Outcome actual = try_eval(c.actual, env);
    if (auto* msg = std::get_if<std::string>(&actual)) {
        return errored(c, "check-within raised \"" + *msg + "\"");
    }
    Outcome expected = try_eval(c.expected, env);
    if (auto* msg = std::get_if<std::string>(&expected)) {
        return errored(c, "check-within raised \"" + *msg + "\"");
    }
    Outcome tolerance = try_eval(c.tolerance, env);
    if (auto* msg = std::get_if<std::string>(&tolerance)) {
        return errored(c, "check-within raised \"" + *msg + "\"");
    }
    const Value& tv = std::get<Value>(tolerance);
    if (!tv.is_number() || tv.number_as_double() < 0) {
        return errored(c, "check-within: the tolerance must be a nonnegative number, given " +
                              written_form(tv));
    }
    double tol = tv.number_as_double();
    const Value& av = std::get<Value>(actual);
    const Value& ev = std::get<Value>(expected);
    CheckResult result{c, CheckOutcome::Pass, written_form(av), written_form(ev), ""};
    if (auto mismatch = within_mismatch(av, ev, tol)) {
        result.outcome = CheckOutcome::Fail;
        result.detail = mismatch->empty()
                            ? "expected " + result.expected + " \xc2\xb1" + written_form(tv) +
                                  " got " + result.actual
                            : *mismatch;
    }
    return result;
}

CheckResult run_error_check(const CheckFormData& c, const EnvPtr& env) {
    Outcome expected = try_eval(c.expected, env);
    if (auto* msg = std::get_if<std::string>(&expected)) {
        return errored(c, "check-error raised \"" + *msg + "\"");
    }
    const Value& ev = std::get<Value>(expected);
    if (!ev.is_text()) {
        return errored(c, "check-error: the expected message must be a string, given " +
                              written_form(ev));
    }
    CheckResult result{c, CheckOutcome::Pass, "", escape_string(ev.text_value()), ""};
    try {
        Value v = eval_expr(c.actual, env);
        result.outcome = CheckOutcome::Fail;
        result.actual = written_form(v);
        result.detail = "expected an error " + result.expected + " but got " + result.actual;
    } catch (const RuntimeError& err) {
        result.actual = escape_string(err.message());
        // Messages must match byte for byte.
        if (err.message() != ev.text_value()) {
            result.outcome = CheckOutcome::Fail;
            result.detail = "expected an error " + result.expected + " but the error was " +
                            result.actual;
        }
    }
    return result;
}

}  // namespace

CheckResult run_check(const CheckFormData& c, const EnvPtr& env) {
    switch (c.kind) {
        case CheckKind::Expect: return run_expect(c, env);
        case CheckKind::Within: return run_within(c, env);
        case CheckKind::Error: return run_error_check(c, env);
    }
    return errored(c, "unknown check kind");
}

TestReport run_checks(std::span<const CheckFormData> checks, const EnvPtr& env) {
    TestReport report;
    report.results.reserve(checks.size());
    for (const CheckFormData& c : checks) {
        report.results.push_back(run_check(c, env));
    }
    return report;
}

TestReport run_all(const Program& p) {
    return eval_program(p).report;
}

}  // namespace rkts
