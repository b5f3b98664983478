#include "rkts/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace rkts {

namespace {

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string object_param_name(const std::string& type_name) {
    return "a-" + ascii_lower(type_name);
}

// 'is-sq? -> sq?, 'getx -> x, 'get-length -> length, 'area -> area
std::string message_stem(const std::string& msg) {
    std::string stem;
    if (msg.starts_with("is-")) {
        stem = msg.substr(3);
    } else if (msg.starts_with("get-")) {
        stem = msg.substr(4);
    } else if (msg.starts_with("get")) {
        stem = msg.substr(3);
    } else {
        stem = msg;
    }
    return stem.empty() ? msg : stem;
}

// 'bigger? -> is-this-bigger?, 'd2p -> this-d2p
std::string helper_base_name(const std::string& msg) {
    if (msg.ends_with("?")) {
        std::string core = msg.starts_with("is-") ? msg.substr(3) : msg;
        return "is-this-" + core;
    }
    return "this-" + msg;
}

std::string unique_name(std::string desired, std::unordered_set<std::string>& taken) {
    std::string name = desired;
    int suffix = 1;
    while (!taken.insert(name).second) {
        name = desired + std::to_string(suffix++);
    }
    return name;
}

std::vector<std::string> helper_param_names(const TypeExpr& fn_type,
                                            std::unordered_set<std::string>& taken) {
    std::vector<std::string> names;
    int index = 1;
    for (const TypeExpr& p : fn_type.params()) {
        std::string desired =
            p.is_function() ? "x" + std::to_string(index) : object_param_name(p.base_name());
        names.push_back(unique_name(desired, taken));
        ++index;
    }
    return names;
}

std::string signature_line(const std::vector<std::string>& param_types,
                           const std::string& result) {
    std::string out = ";; ";
    for (const std::string& t : param_types) {
        out += t;
        out += ' ';
    }
    out += "-> " + result;
    return out;
}

}  // namespace

std::string emit_interface_comment(const InterfaceSpec& i) {
    std::size_t width = 0;
    for (const Service& s : i.services) width = std::max(width, s.message.size() + 1);
    std::ostringstream out;
    out << ";; A " << i.name << " is an interface offering:\n";
    for (const Service& s : i.services) {
        out << ";;" << std::string(2 + width - (s.message.size() + 1), ' ') << '\'' << s.message
            << ":  " << s.result.to_string() << '\n';
    }
    return out.str();
}

std::string generate_class_template(const ClassSpec& c, const InterfaceSpec& i) {
    const std::string variant = c.variant_name();

    std::unordered_set<std::string> taken;
    for (const FieldSpec& f : c.fields) taken.insert(f.name);

    // One stub helper per function-typed service.
    struct Helper {
        const Service* service;
        std::string name;
        std::vector<std::string> params;
    };
    std::vector<Helper> helpers;
    for (const Service& s : i.services) {
        if (!s.result.is_function()) continue;
        Helper h;
        h.service = &s;
        h.name = unique_name(helper_base_name(s.message), taken);
        helpers.push_back(std::move(h));
    }
    for (Helper& h : helpers) {
        std::unordered_set<std::string> param_taken = taken;
        h.params = helper_param_names(h.service->result, param_taken);
    }
    std::string manager = unique_name("manager", taken);
    std::string msg_param = unique_name("m", taken);

    // Field getters first, then interface messages not already covered.
    struct Clause {
        std::string message;
        std::string body;
    };
    std::vector<Clause> clauses;
    std::unordered_set<std::string> clause_set;
    for (const FieldSpec& f : c.fields) {
        std::string msg = f.getter_message();
        if (clause_set.insert(msg).second) clauses.push_back({std::move(msg), f.name});
    }
    for (const Service& s : i.services) {
        if (!clause_set.insert(s.message).second) continue;
        std::string body = "...";
        for (const Helper& h : helpers) {
            if (h.service == &s) body = h.name;
        }
        clauses.push_back({s.message, std::move(body)});
    }

    // The local group, one block per definition, blank lines between blocks.
    std::vector<std::vector<std::string>> blocks;
    for (const Helper& h : helpers) {
        std::vector<std::string> types;
        for (const TypeExpr& p : h.service->result.params()) types.push_back(p.to_string());
        std::vector<std::string> block;
        block.push_back(signature_line(types, h.service->result.result().to_string()));
        block.push_back(";; Purpose: Implement the '" + h.service->message +
                        " service for this " + variant);
        std::string header = "(define (" + h.name;
        for (const std::string& p : h.params) header += " " + p;
        header += ") ...)";
        block.push_back(std::move(header));
        blocks.push_back(std::move(block));
    }
    {
        std::size_t width = 0;
        for (const Clause& cl : clauses) width = std::max(width, cl.message.size() + 1);
        std::vector<std::string> block;
        block.push_back(";; message -> service throws error");
        block.push_back(";; Purpose: Provide service for the given message");
        block.push_back("(define (" + manager + " " + msg_param + ")");
        block.push_back("  (match " + msg_param);
        for (const Clause& cl : clauses) {
            std::string quoted = "'" + cl.message;
            block.push_back("    [" + quoted + std::string(width - quoted.size() + 1, ' ') +
                            cl.body + "]");
        }
        block.push_back("    [else (error (format \"Unknown " + i.name +
                        " service requested: ~s\" " + msg_param + "))]))]");
        blocks.push_back(std::move(block));
    }

    std::ostringstream out;
    std::vector<std::string> field_types;
    for (const FieldSpec& f : c.fields) field_types.push_back(f.type.to_string());
    out << signature_line(field_types, variant) << '\n';
    out << ";; Purpose: Return a " << variant << " object\n";
    out << "(define (" << c.constructor_name;
    for (const FieldSpec& f : c.fields) out << ' ' << f.name;
    out << ")\n";

    const std::string indent(10, ' ');
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t l = 0; l < blocks[b].size(); ++l) {
            if (b == 0 && l == 0) {
                out << "  (local [" << blocks[b][l] << '\n';
            } else {
                out << indent << blocks[b][l] << '\n';
            }
        }
        if (b + 1 < blocks.size()) out << '\n';
    }
    out << "    " << manager << "))\n";
    return out.str();
}

std::string wrapper_name_for(const Service& s, const std::string& type_name) {
    if (s.wrapper_name) return *s.wrapper_name;
    return type_name + "-" + message_stem(s.message);
}

std::string generate_wrappers(const InterfaceSpec& i, const std::string& type_name) {
    std::ostringstream out;
    bool first = true;
    for (const Service& s : i.services) {
        if (!first) out << '\n';
        first = false;
        std::string wrapper = wrapper_name_for(s, type_name);
        if (!s.result.is_function()) {
            std::string obj = object_param_name(type_name);
            out << signature_line({type_name}, s.result.to_string()) << '\n';
            out << ";; Purpose: Request the '" << s.message << " service of the given "
                << type_name << '\n';
            out << "(define (" << wrapper << ' ' << obj << ") (" << obj << " '" << s.message
                << "))\n";
            continue;
        }
        std::vector<std::string> types{type_name};
        for (const TypeExpr& p : s.result.params()) types.push_back(p.to_string());
        out << signature_line(types, s.result.result().to_string()) << '\n';
        out << ";; Purpose: Request the '" << s.message << " service of the first given "
            << type_name << '\n';
        std::vector<std::string> extras;
        std::size_t n = s.result.params().size();
        for (std::size_t k = 0; k < n; ++k) {
            extras.push_back(n == 1 ? "that" : "that" + std::to_string(k + 1));
        }
        out << "(define (" << wrapper << " this";
        for (const std::string& e : extras) out << ' ' << e;
        out << ") ((this '" << s.message << ')';
        for (const std::string& e : extras) out << ' ' << e;
        out << "))\n";
    }
    return out.str();
}

}  // namespace rkts
