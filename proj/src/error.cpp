#include "shiftlab/error.hpp"

namespace shiftlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::EmptyAfterEssentialization: return "EmptyAfterEssentialization";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::InfiniteToOne: return "InfiniteToOne";
    case ErrorKind::WordNotInImage: return "WordNotInImage";
    case ErrorKind::CoordinateNotInterior: return "CoordinateNotInterior";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::LanguageNotContained: return "LanguageNotContained";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::BridgeNotInImage: return "BridgeNotInImage";
    case ErrorKind::NonPermutation: return "NonPermutation";
    case ErrorKind::NotMagic: return "NotMagic";
    case ErrorKind::InconsistentContexts: return "InconsistentContexts";
    case ErrorKind::ImageNotEqual: return "ImageNotEqual";
    case ErrorKind::NotProperSubshift: return "NotProperSubshift";
    case ErrorKind::WordInSubshift: return "WordInSubshift";
    case ErrorKind::MonoidCapped: return "MonoidCapped";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::UnknownLabel:
    case ErrorKind::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace shiftlab
