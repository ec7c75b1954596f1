#include "gowsn/error.hpp"

namespace gowsn {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonPositivePitch: return "NonPositivePitch";
    case ErrorCode::PitchExceedsField: return "PitchExceedsField";
    case ErrorCode::AlreadyOccupied: return "AlreadyOccupied";
    case ErrorCode::NotAnIntersection: return "NotAnIntersection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonSquareField: return "NonSquareField";
    case ErrorCode::DiscExceedsField: return "DiscExceedsField";
    case ErrorCode::NOutOfRange: return "NOutOfRange";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NoSolutionWithinBound: return "NoSolutionWithinBound";
    case ErrorCode::BoardExhausted: return "BoardExhausted";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidRange: return "InvalidRange";
    }
    return "Unknown";
}

}  // namespace gowsn
