#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partalg {

// Stable error identifiers; the CLI prints these names verbatim.
enum class ErrorCode {
    DivisionByZero,
    PoleAtPoint,
    ParseError,
    NotAPartition,
    SizeMismatch,
    IndexOutOfRange,
    BoundExceeded,
    ShapeNotAtLevel,
    NotOneBoxApart,
    CoordinateOutOfRange,
    NotACoveringChain,
    ReductiveUnsupported,
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotAPartition: return "NotAPartition";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::ShapeNotAtLevel: return "ShapeNotAtLevel";
        case ErrorCode::NotOneBoxApart: return "NotOneBoxApart";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::NotACoveringChain: return "NotACoveringChain";
        case ErrorCode::ReductiveUnsupported: return "ReductiveUnsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace partalg
