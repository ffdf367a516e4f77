#pragma once

#include <stdexcept>
#include <string>

namespace lomni {

// Error taxonomy shared by every module. Each maps to a CLI exit code:
// usage/contract/shape/capacity -> 1, data/format -> 2, numeric -> 3.

// Dimension disagreement between tensors.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape error: " + msg) {}
};

// Caller violated an operation precondition.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error("contract error: " + msg) {}
};

// Malformed or inconsistent input data (dataset lines, segment refs, token ids).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error("data error: " + msg) {}
};

// NaN or infinity where a finite value is required.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error("numeric failure: " + msg) {}
};

// Sequence would exceed the model's maximum length.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error("capacity error: " + msg) {}
};

// Corrupt or mismatched binary file (checkpoints).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error("format error: " + msg) {}
};

}  // namespace lomni
