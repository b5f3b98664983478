#pragma once

#include "rkts/value.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

namespace rkts {

/// One frame in the lexical chain. Lookup resolves to the innermost binding.
/// Frames are extend-only: a name is bound at most once per frame and
/// existing bindings are never reassigned.
class Environment {
public:
    static EnvPtr make(EnvPtr parent = nullptr) {
        return std::make_shared<Environment>(std::move(parent));
    }

    explicit Environment(EnvPtr parent) : parent_(std::move(parent)) {}

    // nullptr when unbound anywhere in the chain
    const Value* lookup(const std::string& name) const {
        for (const Environment* env = this; env != nullptr; env = env->parent_.get()) {
            auto it = env->bindings_.find(name);
            if (it != env->bindings_.end()) return &it->second;
        }
        return nullptr;
    }

    // false when the name is already bound in this frame
    bool define(std::string name, Value v) {
        return bindings_.emplace(std::move(name), std::move(v)).second;
    }

    bool bound_here(const std::string& name) const { return bindings_.contains(name); }

private:
    std::unordered_map<std::string, Value> bindings_;
    EnvPtr parent_;
};

}  // namespace rkts
