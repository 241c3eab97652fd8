#pragma once

#include <stdexcept>
#include <string>

namespace stree {

// Failure taxonomy shared by validation, grafting, translation and envelope
// construction. Operations that can fail report one of these codes.
enum class ErrorCode {
    EmptySet,
    NotRooted,
    LevelMismatch,
    BranchingViolation,
    NodeOutsideUniverse,
    LevelSetMismatch,
    RootCollision,
    RoutingViolation,
    NotInitialSegment,
    NoSibling,
    OutsideUniverse,
    SameRoot,
    ConstraintViolation,
    EmptyInput,
    NoRoom,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotRooted: return "NotRooted";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::BranchingViolation: return "BranchingViolation";
        case ErrorCode::NodeOutsideUniverse: return "NodeOutsideUniverse";
        case ErrorCode::LevelSetMismatch: return "LevelSetMismatch";
        case ErrorCode::RootCollision: return "RootCollision";
        case ErrorCode::RoutingViolation: return "RoutingViolation";
        case ErrorCode::NotInitialSegment: return "NotInitialSegment";
        case ErrorCode::NoSibling: return "NoSibling";
        case ErrorCode::OutsideUniverse: return "OutsideUniverse";
        case ErrorCode::SameRoot: return "SameRoot";
        case ErrorCode::ConstraintViolation: return "ConstraintViolation";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NoRoom: return "NoRoom";
    }
    return "UnknownError";
}

// Thrown by operations whose contract declares a failure mode.
class TreeError : public std::runtime_error {
  public:
    TreeError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace stree
