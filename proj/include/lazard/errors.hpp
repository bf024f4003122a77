#pragma once

#include <stdexcept>
#include <string>

namespace lazard {

/// Malformed user input: parse errors, dimension mismatches, zero polynomials
/// where nonzero ones are required. The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant (an exact division that was not exact, a
/// residual collapsing to zero). The CLI maps this to exit code 2.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline void checkInput(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void checkInternal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace lazard
