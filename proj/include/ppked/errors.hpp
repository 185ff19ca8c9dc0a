#pragma once

#include <stdexcept>
#include <string>

namespace ppked {

// Bad run configuration or a checkpoint/config disagreement. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (corpus, features, index, generations).
// CLI exit code 3. `code()` distinguishes the failure class programmatically.
class DataError : public std::runtime_error {
 public:
  enum class Code {
    kGeneric,
    kBadMagic,
    kBadVersion,
    kShapeMismatch,
    kTruncated,
    kDuplicateId,
    kMissingId,
    kLeakage,
  };

  DataError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  explicit DataError(const std::string& what)
      : std::runtime_error(what), code_(Code::kGeneric) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace ppked
