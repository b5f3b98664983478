#include "rkts/value.hpp"

#include <sstream>

namespace rkts {

std::string_view kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::Exact: return "exact number";
        case Value::Kind::Inexact: return "inexact number";
        case Value::Kind::Boolean: return "boolean";
        case Value::Kind::Symbol: return "symbol";
        case Value::Kind::Text: return "string";
        case Value::Kind::List: return "list";
        case Value::Kind::Struct: return "structure";
        case Value::Kind::Closure: return "function";
        case Value::Kind::Primitive: return "function";
    }
    return "value";
}

bool structurally_equal(const Value& a, const Value& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Value::Kind::Exact:
            return a.exact_value() == b.exact_value();
        case Value::Kind::Inexact:
            return a.inexact_value() == b.inexact_value();
        case Value::Kind::Boolean:
            return a.boolean_value() == b.boolean_value();
        case Value::Kind::Symbol:
            return a.symbol_name() == b.symbol_name();
        case Value::Kind::Text:
            return a.text_value() == b.text_value();
        case Value::Kind::List: {
            const auto& xs = a.list_items();
            const auto& ys = b.list_items();
            if (xs.size() != ys.size()) return false;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (!structurally_equal(xs[i], ys[i])) return false;
            }
            return true;
        }
        case Value::Kind::Struct: {
            const auto& x = a.struct_data();
            const auto& y = b.struct_data();
            if (x.type != y.type) return false;
            for (std::size_t i = 0; i < x.fields.size(); ++i) {
                if (!structurally_equal(x.fields[i], y.fields[i])) return false;
            }
            return true;
        }
        case Value::Kind::Closure:
            return a.closure_ptr() == b.closure_ptr();
        case Value::Kind::Primitive:
            return a.primitive_ptr() == b.primitive_ptr();
    }
    return false;
}

bool contains_inexact(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Inexact:
            return true;
        case Value::Kind::List:
            for (const Value& item : v.list_items()) {
                if (contains_inexact(item)) return true;
            }
            return false;
        case Value::Kind::Struct:
            for (const Value& field : v.struct_data().fields) {
                if (contains_inexact(field)) return true;
            }
            return false;
        default:
            return false;
    }
}

namespace {

void render(const Value& v, std::ostringstream& out, bool written) {
    switch (v.kind()) {
        case Value::Kind::Exact:
            out << rational_to_string(v.exact_value());
            break;
        case Value::Kind::Inexact:
            out << inexact_to_string(v.inexact_value());
            break;
        case Value::Kind::Boolean:
            out << (v.boolean_value() ? "#true" : "#false");
            break;
        case Value::Kind::Symbol:
            out << v.symbol_name();
            break;
        case Value::Kind::Text:
            out << (written ? escape_string(v.text_value()) : v.text_value());
            break;
        case Value::Kind::List: {
            out << '(';
            const auto& items = v.list_items();
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i > 0) out << ' ';
                render(items[i], out, written);
            }
            out << ')';
            break;
        }
        case Value::Kind::Struct: {
            const auto& s = v.struct_data();
            out << "(make-" << s.type->name;
            for (const Value& field : s.fields) {
                out << ' ';
                render(field, out, written);
            }
            out << ')';
            break;
        }
        case Value::Kind::Closure: {
            const std::string& name = v.closure_data().name;
            out << "#<procedure";
            if (!name.empty()) out << ':' << name;
            out << '>';
            break;
        }
        case Value::Kind::Primitive:
            out << "#<procedure:" << v.primitive_data().name << '>';
            break;
    }
}

}  // namespace

std::string written_form(const Value& v) {
    std::ostringstream out;
    render(v, out, true);
    return out.str();
}

std::string display_form(const Value& v) {
    std::ostringstream out;
    render(v, out, false);
    return out.str();
}

}  // namespace rkts
