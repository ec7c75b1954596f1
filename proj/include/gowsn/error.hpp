#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gowsn {

enum class ErrorCode {
    NonPositivePitch,
    PitchExceedsField,
    AlreadyOccupied,
    NotAnIntersection,
    IndexOutOfRange,
    InvalidParams,
    NonSquareField,
    DiscExceedsField,
    NOutOfRange,
    NegativeMass,
    NoSolutionWithinBound,
    BoardExhausted,
    IterationCapExceeded,
    InvalidConfig,
    InvalidRange,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gowsn
