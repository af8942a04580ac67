#include "chief/errors.hpp"

namespace chief {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorKind::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotStrictlyNested: return "NotStrictlyNested";
    case ErrorKind::DifferentParents: return "DifferentParents";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::NodeCapExceeded: return "NodeCapExceeded";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::NotAssociated: return "NotAssociated";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::NotChief: return "NotChief";
    case ErrorKind::AbelianFactor: return "AbelianFactor";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ImageNotNormal: return "ImageNotNormal";
    case ErrorKind::ImageNotFullOnFactor: return "ImageNotFullOnFactor";
    case ErrorKind::NotGeneralizedCentral: return "NotGeneralizedCentral";
    case ErrorKind::NotSemisimpleType: return "NotSemisimpleType";
    case ErrorKind::NotCharacteristicallySimple: return "NotCharacteristicallySimple";
    case ErrorKind::ExtensionCheckFailed: return "ExtensionCheckFailed";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadAction: return "BadAction";
    case ErrorKind::SectionMissing: return "SectionMissing";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace chief
