#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "a1kit/module.hpp"

namespace a1kit {

/// Parse error for .a1m module files, carrying a 1-based line number
/// (0 when the error is not tied to a line).
class ModuleFileError : public std::runtime_error {
public:
    ModuleFileError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Line-oriented module definition format ('#' starts a comment):
///
///   name: HZ
///   generators:
///   g0 @ 0
///   g1 @ 2
///   sq1:
///   g1 -> g2
///   sq2:
///   g0 -> g1 + g3
///
/// Every identifier on the right must be declared, sq1 lines must raise
/// degree by 1 and sq2 lines by 2, and the assembled module must satisfy the
/// action relations (checked by verify_action; failures are fatal).
A1Module parse_module_file(std::string_view text);

/// Reads and parses a file from disk.
A1Module load_module_file(const std::string& path);

/// Canonical printer; parse(print(m)) rebuilds an equal module.
std::string print_module_file(const A1Module& m);

}  // namespace a1kit
