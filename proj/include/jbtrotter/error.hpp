#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jbtrotter {

enum class ErrorKind {
  kInvalidInput,  // bad arguments to a library operation
  kParse,         // malformed JSON
  kSchema,        // well-formed JSON with the wrong shape
  kSymmetry,      // sym/herm payload not (anti)symmetric
  kMismatch,      // element payload does not fit the declared algebra
  kCapacity,      // step count would exceed the planner cap
  kUsage,         // CLI argument errors
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kSymmetry: return "symmetry";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kUsage: return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kInvalidInput, what);
}

}  // namespace jbtrotter
