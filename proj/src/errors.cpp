#include "sfs/errors.hpp"

namespace sfs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IVarNotAscend: return "IVarNotAscend";
    case Errc::SeqSizeMismatch: return "SeqSizeMismatch";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::FrozenContour: return "FrozenContour";
    case Errc::FsOutOfRange: return "FsOutOfRange";
    case Errc::NoCrossing: return "NoCrossing";
    case Errc::NonFiniteData: return "NonFiniteData";
    case Errc::NonFiniteRhs: return "NonFiniteRhs";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace sfs
