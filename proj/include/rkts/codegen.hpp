#pragma once

#include "rkts/spec.hpp"

#include <string>

namespace rkts {

// ;; comment block naming each service and its result type, messages
// right-aligned so the colons line up.
std::string emit_interface_comment(const InterfaceSpec& i);

// A runnable class skeleton: constructor over the declared fields whose body
// is a `local` holding one stub helper per function-typed service, and a
// `manager` matching every field getter and interface message, ending in an
// else clause that raises the formatted unknown-service error. Stub bodies
// are `...`, which parses and raises when evaluated.
std::string generate_class_template(const ClassSpec& c, const InterfaceSpec& i);

// One wrapper definition per service: value services apply the object to
// the message; function services apply the returned function to the extra
// inputs.
std::string generate_wrappers(const InterfaceSpec& i, const std::string& type_name);

// Naming rule: strip a leading "is-" / "get-" / "get" from the message and
// prepend "<type>-"; a #:wrapper-name override wins.
std::string wrapper_name_for(const Service& s, const std::string& type_name);

}  // namespace rkts
