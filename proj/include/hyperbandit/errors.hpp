#pragma once

#include <stdexcept>
#include <string>

namespace hyperbandit {

/// Invalid or inconsistent experiment configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File ingestion / output failure (CLI exit code 2).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical breakdown: failed factorization, non-SPD uncertainty matrix,
/// undefined metric (CLI exit code 3).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hyperbandit
