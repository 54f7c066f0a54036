#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

/// Bad user input: malformed text, values out of range, duplicates.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a documented size cap (enumeration, tables).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal inconsistency: a structural invariant the algorithms rely on was
/// violated. Always a bug or an impossible input state; never caught and
/// papered over inside the library.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace permstat
