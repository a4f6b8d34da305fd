#pragma once

#include <stdexcept>
#include <string>

namespace tpp {

// Bad input: malformed descriptors, out-of-range ids, broken tables,
// dimension mismatches, unsatisfied mathematical preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Refusal to start work that exceeds a resource guard (group order cap,
// exhaustive-search size guard). Distinct from input_error so callers can
// map it to a different exit status.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpp
