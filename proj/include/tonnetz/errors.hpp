#pragma once

#include <stdexcept>
#include <string>

namespace tonnetz {

/// Raised for every domain violation: malformed structures, labels that do
/// not resolve, operations applied outside their preconditions.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw error(what); }

}  // namespace tonnetz
