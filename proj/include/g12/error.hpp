// Error helpers. Domain errors are bad inputs; logic errors are broken
// internal invariants and map to a distinct CLI exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace g12 {

[[noreturn]] inline void domain_fail(const std::string& msg) {
  throw std::domain_error(msg);
}

[[noreturn]] inline void internal_fail(const std::string& msg) {
  throw std::logic_error(msg);
}

}  // namespace g12

#define G12_CHECK(cond, msg) \
  do { if (!(cond)) ::g12::internal_fail(msg); } while (0)
