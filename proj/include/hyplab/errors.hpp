#pragma once

#include <stdexcept>
#include <string>

namespace hyplab {

// Bad user input: config files, word strings, model specs. CLI exit code 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or ball blew past its hard cap. CLI exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A hard internal consistency check failed (these should be unreachable).
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace hyplab
