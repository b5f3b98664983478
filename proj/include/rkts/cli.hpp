#pragma once

#include <ostream>
#include <span>
#include <string>

namespace rkts {

// Exit status contract: 0 success, 1 check/lint failures or a runtime
// error, 2 usage/parse/spec errors. Diagnostics go to `err`, program and
// test output to `out`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rkts
