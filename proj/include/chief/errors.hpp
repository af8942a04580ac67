#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chief {

enum class ErrorKind {
  CapExceeded,
  InvalidPermutation,
  ActionNotHomomorphism,
  ActionNotAutomorphism,
  NotNormal,
  NotNested,
  NotStrictlyNested,
  DifferentParents,
  SearchCapExceeded,
  NodeCapExceeded,
  OracleBoundExceeded,
  NotAssociated,
  NotAChain,
  NotChief,
  AbelianFactor,
  NotInjective,
  NotSurjective,
  ImageNotNormal,
  ImageNotFullOnFactor,
  NotGeneralizedCentral,
  NotSemisimpleType,
  NotCharacteristicallySimple,
  ExtensionCheckFailed,
  PostconditionFailed,
  InvalidArgument,
  ParseError,
  UnknownName,
  BadAction,
  SectionMissing,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }
  // Without the kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

// Internal consistency check that survives release builds; failures map to
// PostconditionFailed (CLI exit code 4).
inline void ensure(bool condition, const char* what) {
  if (!condition) raise(ErrorKind::PostconditionFailed, what);
}

}  // namespace chief
