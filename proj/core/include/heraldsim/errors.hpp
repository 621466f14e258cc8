#pragma once

#include <stdexcept>
#include <string>

namespace heraldsim {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegistryMismatch : SimError {
    using SimError::SimError;
};

struct TruncationExceeded : SimError {
    using SimError::SimError;
};

struct BadAngle : SimError {
    using SimError::SimError;
};

struct DuplicateMode : SimError {
    using SimError::SimError;
};

struct BadEfficiency : SimError {
    using SimError::SimError;
};

struct ZeroTrace : SimError {
    using SimError::SimError;
};

struct NoRoot : SimError {
    using SimError::SimError;
};

struct CheckFailed : SimError {
    using SimError::SimError;
};

struct IoError : SimError {
    using SimError::SimError;
};

}  // namespace heraldsim
