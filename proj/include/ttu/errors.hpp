#pragma once

#include <stdexcept>
#include <string>

namespace ttu {

// Caller violated a documented precondition (non-square det, label mismatch, ...).
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed external input (unknown label, bad JSON, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds an exhaustive-enumeration cap.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ttu
