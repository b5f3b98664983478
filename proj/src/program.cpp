#include "rkts/program.hpp"

#include <unordered_set>

namespace rkts {

namespace {

std::string head_symbol(const Datum& d) {
    if (!d.is_sequence() || d.sequence().empty()) return {};
    const Datum& head = *d.sequence()[0];
    return head.is_symbol() ? head.symbol_name() : std::string{};
}

CheckFormData parse_check(const Datum& d, CheckKind kind) {
    const DatumSeq& seq = d.sequence();
    const char* name = kind == CheckKind::Expect ? "check-expect"
                     : kind == CheckKind::Within ? "check-within"
                                                 : "check-error";
    std::size_t want = kind == CheckKind::Within ? 4 : 3;
    if (seq.size() != want) {
        std::string msg = std::string(name) + ": expects ";
        if (kind == CheckKind::Expect) {
            msg += "an expression and an expected value";
        } else if (kind == CheckKind::Within) {
            msg += "an expression, an expected value, and a tolerance";
        } else {
            msg += "an expression and an expected error message";
        }
        throw ParseError(std::move(msg), d.location());
    }
    CheckFormData c;
    c.kind = kind;
    c.actual = seq[1];
    c.expected = seq[2];
    if (kind == CheckKind::Within) c.tolerance = seq[3];
    c.location = d.location();
    return c;
}

StructDefForm parse_define_struct(const Datum& d) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() != 3 || !seq[1]->is_symbol() || !seq[2]->is_sequence()) {
        throw ParseError("define-struct: expects a name and a field list", d.location());
    }
    StructDefForm s;
    s.type_name = seq[1]->symbol_name();
    s.location = d.location();
    std::unordered_set<std::string> seen;
    for (const DatumPtr& f : seq[2]->sequence()) {
        if (!f->is_symbol()) {
            throw ParseError("define-struct: field names must be symbols", f->location());
        }
        if (!seen.insert(f->symbol_name()).second) {
            throw ParseError("define-struct: duplicate field name " + f->symbol_name(),
                             f->location());
        }
        s.field_names.push_back(f->symbol_name());
    }
    return s;
}

}  // namespace

DefineForm parse_define(const Datum& d) {
    const DatumSeq& seq = d.sequence();
    if (seq.size() != 3) {
        throw ParseError("define: expects a name or function header and exactly one expression",
                         d.location());
    }
    DefineForm f;
    f.location = d.location();
    f.body = seq[2];
    const Datum& target = *seq[1];
    if (target.is_symbol()) {
        f.name = target.symbol_name();
        return f;
    }
    if (!target.is_sequence()) {
        throw ParseError("define: expects a name or function header", d.location());
    }
    const DatumSeq& header = target.sequence();
    if (header.empty() || !header[0]->is_symbol()) {
        throw ParseError("define: a function header needs a name", target.location());
    }
    if (header.size() < 2) {
        throw ParseError("define: a function definition needs at least one parameter",
                         target.location());
    }
    f.name = header[0]->symbol_name();
    f.is_function = true;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (!header[i]->is_symbol()) {
            throw ParseError("define: parameters must be symbols", header[i]->location());
        }
        const std::string& p = header[i]->symbol_name();
        if (!seen.insert(p).second) {
            throw ParseError("define: duplicate parameter " + p, header[i]->location());
        }
        f.params.push_back(p);
    }
    return f;
}

Program parse_program(std::span<const DatumPtr> data) {
    Program program;
    for (const DatumPtr& d : data) {
        std::string head = head_symbol(*d);
        if (head == "define") {
            program.forms.emplace_back(parse_define(*d));
        } else if (head == "define-struct") {
            program.forms.emplace_back(parse_define_struct(*d));
        } else if (head == "check-expect") {
            program.forms.emplace_back(parse_check(*d, CheckKind::Expect));
        } else if (head == "check-within") {
            program.forms.emplace_back(parse_check(*d, CheckKind::Within));
        } else if (head == "check-error") {
            program.forms.emplace_back(parse_check(*d, CheckKind::Error));
        } else if (head == "require") {
            program.forms.emplace_back(RequireForm{d->location()});
        } else {
            program.forms.emplace_back(ExprForm{d});
        }
    }
    return program;
}

Program parse_source(std::string_view text) {
    std::vector<DatumPtr> data = read_source(text);
    return parse_program(data);
}

}  // namespace rkts
