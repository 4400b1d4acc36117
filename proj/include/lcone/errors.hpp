#pragma once

#include <stdexcept>
#include <string>

namespace lcone {

/// Bad user-supplied input (malformed word, illegal chamber set, ...).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Request exceeds a configured enumeration limit.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal consistency failure; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

#define LCONE_CHECK(cond, msg)                            \
    do {                                                  \
        if (!(cond)) throw ::lcone::internal_error(msg);  \
    } while (0)

} // namespace lcone
