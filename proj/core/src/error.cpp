#include "pcli/error.hpp"

namespace pcli {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotConvergent: return "NotConvergent";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotTriangularizable: return "NotTriangularizable";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::AllBelowFloor: return "AllBelowFloor";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BadName: return "BadName";
    case ErrorKind::MissingMatrix: return "MissingMatrix";
    case ErrorKind::NuOutOfRange: return "NuOutOfRange";
    case ErrorKind::SingularFit: return "SingularFit";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace pcli
