#include "rkts/spec.hpp"

#include <unordered_set>

namespace rkts {

std::string TypeExpr::to_string() const {
    if (!is_function()) return base_;
    std::string out;
    for (const TypeExpr& p : params_) {
        std::string text = p.to_string();
        if (p.is_function()) text = "(" + text + ")";
        out += text;
        out += ' ';
    }
    out += "-> " + result_->to_string();
    return out;
}

const Service* InterfaceSpec::find_service(const std::string& message) const {
    for (const Service& s : services) {
        if (s.message == message) return &s;
    }
    return nullptr;
}

std::string ClassSpec::variant_name() const {
    if (constructor_name.starts_with("make-") && constructor_name.size() > 5) {
        return constructor_name.substr(5);
    }
    return constructor_name;
}

const InterfaceSpec* SpecFile::find_interface(const std::string& name) const {
    for (const InterfaceSpec& i : interfaces) {
        if (i.name == name) return &i;
    }
    return nullptr;
}

const ClassSpec* SpecFile::find_class(const std::string& constructor_name) const {
    for (const ClassSpec& c : classes) {
        if (c.constructor_name == constructor_name) return &c;
    }
    return nullptr;
}

std::vector<const ClassSpec*> SpecFile::classes_of(const std::string& interface_name) const {
    std::vector<const ClassSpec*> out;
    for (const ClassSpec& c : classes) {
        if (c.interface_name == interface_name) out.push_back(&c);
    }
    return out;
}

namespace {

const std::string& want_symbol(const DatumPtr& d, const char* what) {
    if (!d->is_symbol()) {
        throw SpecError(std::string("expected ") + what, d->location());
    }
    return d->symbol_name();
}

TypeExpr parse_type(const DatumPtr& d) {
    if (d->is_symbol()) return TypeExpr::base(d->symbol_name());
    if (d->is_sequence() && !d->sequence().empty() && d->sequence()[0]->is_symbol("->")) {
        const DatumSeq& seq = d->sequence();
        if (seq.size() < 3) {
            throw SpecError("a function type needs at least one parameter and a result",
                            d->location());
        }
        std::vector<TypeExpr> params;
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) params.push_back(parse_type(seq[i]));
        return TypeExpr::function(std::move(params), parse_type(seq.back()));
    }
    throw SpecError("malformed type: expected a name or (-> param... result)", d->location());
}

Service parse_service(const DatumPtr& d) {
    if (!d->is_sequence() || d->sequence().size() < 3 || !d->sequence()[0]->is_symbol("service")) {
        throw SpecError("expected (service message type ...)", d->location());
    }
    const DatumSeq& seq = d->sequence();
    Service s;
    s.message = want_symbol(seq[1], "a service message symbol");
    s.result = parse_type(seq[2]);
    s.location = d->location();
    for (std::size_t i = 3; i < seq.size(); i += 2) {
        const std::string& key = want_symbol(seq[i], "a service option keyword");
        if (key != "#:wrapper-name") {
            throw SpecError("unknown service option " + key, seq[i]->location());
        }
        if (i + 1 >= seq.size()) {
            throw SpecError("#:wrapper-name needs a value", seq[i]->location());
        }
        s.wrapper_name = want_symbol(seq[i + 1], "a wrapper name symbol");
    }
    return s;
}

InterfaceSpec parse_interface(const DatumPtr& d) {
    const DatumSeq& seq = d->sequence();
    if (seq.size() < 3) {
        throw SpecError("an interface needs a name and at least one service", d->location());
    }
    InterfaceSpec i;
    i.name = want_symbol(seq[1], "an interface name");
    i.location = d->location();
    std::unordered_set<std::string> seen;
    for (std::size_t k = 2; k < seq.size(); ++k) {
        Service s = parse_service(seq[k]);
        if (!seen.insert(s.message).second) {
            throw SpecError("duplicate service message '" + s.message, seq[k]->location());
        }
        i.services.push_back(std::move(s));
    }
    return i;
}

FieldSpec parse_field(const DatumPtr& d) {
    if (!d->is_sequence() || d->sequence().size() < 2) {
        throw SpecError("expected (field-name type ...)", d->location());
    }
    const DatumSeq& seq = d->sequence();
    FieldSpec f;
    f.name = want_symbol(seq[0], "a field name");
    f.type = parse_type(seq[1]);
    for (std::size_t i = 2; i < seq.size(); i += 2) {
        const std::string& key = want_symbol(seq[i], "a field option keyword");
        if (key != "#:message") {
            throw SpecError("unknown field option " + key, seq[i]->location());
        }
        if (i + 1 >= seq.size()) {
            throw SpecError("#:message needs a value", seq[i]->location());
        }
        f.message_override = want_symbol(seq[i + 1], "a message symbol");
    }
    return f;
}

ClassSpec parse_class(const DatumPtr& d, const SpecFile& so_far) {
    const DatumSeq& seq = d->sequence();
    if (seq.size() != 5 || !seq[2]->is_symbol("implements")) {
        throw SpecError(
            "expected (define-class constructor implements interface (fields ...))",
            d->location());
    }
    ClassSpec c;
    c.constructor_name = want_symbol(seq[1], "a constructor name");
    c.interface_name = want_symbol(seq[3], "an interface name");
    c.location = d->location();
    if (so_far.find_interface(c.interface_name) == nullptr) {
        throw SpecError("unknown interface reference " + c.interface_name, seq[3]->location());
    }
    const Datum& fields = *seq[4];
    if (!fields.is_sequence() || fields.sequence().empty() ||
        !fields.sequence()[0]->is_symbol("fields")) {
        throw SpecError("expected a (fields ...) group", fields.location());
    }
    std::unordered_set<std::string> seen;
    const DatumSeq& fseq = fields.sequence();
    for (std::size_t i = 1; i < fseq.size(); ++i) {
        FieldSpec f = parse_field(fseq[i]);
        if (!seen.insert(f.name).second) {
            throw SpecError("duplicate field name " + f.name, fseq[i]->location());
        }
        c.fields.push_back(std::move(f));
    }
    return c;
}

UnionSpec parse_union(const DatumPtr& d, const SpecFile& so_far) {
    const DatumSeq& seq = d->sequence();
    if (seq.size() != 3 || !seq[2]->is_sequence()) {
        throw SpecError("expected (define-union interface (variant...))", d->location());
    }
    UnionSpec u;
    u.name = want_symbol(seq[1], "an interface name");
    u.location = d->location();
    if (so_far.find_interface(u.name) == nullptr) {
        throw SpecError("unknown interface reference " + u.name, seq[1]->location());
    }
    for (const DatumPtr& v : seq[2]->sequence()) {
        const std::string& ctor = want_symbol(v, "a variant constructor name");
        const ClassSpec* c = so_far.find_class(ctor);
        if (c == nullptr) {
            throw SpecError("unknown class reference " + ctor, v->location());
        }
        if (c->interface_name != u.name) {
            throw SpecError("variant " + ctor + " does not implement " + u.name, v->location());
        }
        u.variants.push_back(ctor);
    }
    if (u.variants.size() < 2) {
        throw SpecError("a union needs at least two variants", d->location());
    }
    return u;
}

}  // namespace

SpecFile parse_spec(std::span<const DatumPtr> data) {
    SpecFile spec;
    for (const DatumPtr& d : data) {
        if (!d->is_sequence() || d->sequence().empty() || !d->sequence()[0]->is_symbol()) {
            throw SpecError("expected define-interface, define-class, or define-union",
                            d->location());
        }
        const std::string& head = d->sequence()[0]->symbol_name();
        if (head == "define-interface") {
            InterfaceSpec i = parse_interface(d);
            if (spec.find_interface(i.name) != nullptr) {
                throw SpecError("duplicate interface " + i.name, d->location());
            }
            spec.interfaces.push_back(std::move(i));
        } else if (head == "define-class") {
            ClassSpec c = parse_class(d, spec);
            if (spec.find_class(c.constructor_name) != nullptr) {
                throw SpecError("duplicate class " + c.constructor_name, d->location());
            }
            spec.classes.push_back(std::move(c));
        } else if (head == "define-union") {
            spec.unions.push_back(parse_union(d, spec));
        } else {
            throw SpecError("unknown spec form " + head, d->location());
        }
    }
    return spec;
}

SpecFile parse_spec_source(std::string_view text) {
    std::vector<DatumPtr> data = read_source(text);
    return parse_spec(data);
}

}  // namespace rkts
