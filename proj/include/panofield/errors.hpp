#pragma once

#include <stdexcept>
#include <string>

namespace panofield {

enum class ErrorCode {
    InvalidInput,
    MissingFile,
    DimensionMismatch,
    InvalidPose,
    EmptyCloud,
    FreeSpaceSearchFailed,
    NumericFault,
    CapacityExceeded,
    NonManifoldMesh,
    IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

    // Exit status for the CLI: 2 for bad inputs/config, 1 for runtime failures.
    int exit_code() const {
        switch (code_) {
            case ErrorCode::InvalidInput:
            case ErrorCode::MissingFile:
            case ErrorCode::DimensionMismatch:
            case ErrorCode::InvalidPose:
                return 2;
            default:
                return 1;
        }
    }

  private:
    ErrorCode code_;
};

}  // namespace panofield
