#ifndef KSS_ERRORS_HPP
#define KSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kss {

// Malformed input: unreadable files, bad JSON, schema violations, bad
// rational strings. CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Model rejected at validation with a machine-readable reason code.
// CLI exit code 3.
struct validation_error : std::runtime_error {
  validation_error(std::string reason_code, const std::string& msg)
      : std::runtime_error(msg), code(std::move(reason_code)) {}
  std::string code;
};

// Structurally valid request that is degenerate for the given data
// (affinely dependent points, endpoint on a wall, point outside the
// simplex, ...). CLI exit code 4.
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked internal invariant failed; carries the witness in the message.
struct invariant_violation : std::logic_error {
  explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace kss

#endif
