#pragma once

#include <stdexcept>
#include <string>

namespace pdlab {

// Error taxonomy used across the library. The CLI maps ConfigError to exit
// code 2 and BudgetError to exit code 3; everything else is exit code 1.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error("invalid-parameter: " + msg) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error("degenerate-input: " + msg) {}
};

struct EmptyConfiguration : Error {
    explicit EmptyConfiguration(const std::string& msg) : Error("empty-configuration: " + msg) {}
};

struct DuplicatePoint : Error {
    explicit DuplicatePoint(const std::string& msg) : Error("duplicate-point: " + msg) {}
};

struct OutOfWindow : Error {
    explicit OutOfWindow(const std::string& msg) : Error("out-of-window: " + msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error("budget-exceeded: " + msg) {}
};

struct BracketTooSmall : Error {
    explicit BracketTooSmall(const std::string& msg) : Error("bracket-too-small: " + msg) {}
};

struct CalibrationFailed : Error {
    explicit CalibrationFailed(const std::string& msg) : Error("calibration-failed: " + msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal-error: " + msg) {}
};

} // namespace pdlab
