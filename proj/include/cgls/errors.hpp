#pragma once

#include <stdexcept>
#include <string>

namespace cgls {

// Error taxonomy. Every failure mode surfaces as one of these so callers
// (and the CLI exit-code mapping) can tell configuration mistakes apart
// from runtime faults.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error("input error: " + msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error("numeric error: " + msg) {}
};

struct GrowthError : std::runtime_error {
    explicit GrowthError(const std::string& msg) : std::runtime_error("growth error: " + msg) {}
};

struct MaskError : std::runtime_error {
    explicit MaskError(const std::string& msg) : std::runtime_error("mask error: " + msg) {}
};

struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& msg) : std::runtime_error("sampling error: " + msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error("domain error: " + msg) {}
};

struct AllocationError : std::runtime_error {
    explicit AllocationError(const std::string& msg) : std::runtime_error("allocation error: " + msg) {}
};

struct ScheduleError : std::runtime_error {
    explicit ScheduleError(const std::string& msg) : std::runtime_error("schedule error: " + msg) {}
};

struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error("state error: " + msg) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& msg) : std::runtime_error("truncation error: " + msg) {}
};

struct StratifyError : std::runtime_error {
    explicit StratifyError(const std::string& msg) : std::runtime_error("stratification error: " + msg) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error("training error: " + msg) {}
};

// Checkpoint loading distinguishes how a file is broken.
enum class CheckpointFault { bad_magic, bad_version, corrupt_header, truncated_blob, io };

struct CheckpointError : std::runtime_error {
    CheckpointFault fault;
    CheckpointError(CheckpointFault f, const std::string& msg)
        : std::runtime_error("checkpoint error: " + msg), fault(f) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error("io error: " + msg) {}
};

}  // namespace cgls
