#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cxorder {

enum class ErrorKind {
    NegativeWeight,
    MassMismatch,
    NotLattice,
    BadParameter,
    LengthMismatch,
    NotMajorized,
    NonPositiveInput,
    NotSStep,
    ArityMismatch,
    NotNonneg,
    DecompositionMismatch,
    NonConvexTestFn,
    ModeArity,
    Inconclusive,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed textual input. `position` is the 0-based offset into the
/// offending string.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::Parse, "at column " + std::to_string(position + 1) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace cxorder
