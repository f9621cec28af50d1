#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehalg {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Validation,
  Guard,
  Verification,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Outcome of an axiom check. On failure, `axiom` names the first violated
// axiom and `witness` lists the offending element/basis indices.
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string detail;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string axiom, std::vector<std::size_t> witness, std::string detail) {
    return {false, std::move(axiom), std::move(witness), std::move(detail)};
  }
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace ehalg
