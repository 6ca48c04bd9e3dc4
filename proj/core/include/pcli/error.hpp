#ifndef PCLI_ERROR_HPP
#define PCLI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcli {

enum class ErrorKind {
    ZeroPolynomial,
    DidNotConverge,
    NotSymmetric,
    NotSquare,
    DimensionMismatch,
    NotConvergent,
    SingularSystem,
    NotTriangularizable,
    InsufficientData,
    AllBelowFloor,
    DomainError,
    BadName,
    MissingMatrix,
    NuOutOfRange,
    SingularFit,
    NotLinear,
    NotMonic,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pcli

#endif
