#pragma once

#include <stdexcept>
#include <string>

namespace satrep {

// Invalid scenario/config input: CLI exits with code 2 on this.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (quadrature not converged, overlap violation, safety cap):
// CLI exits with code 3 on this.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class QuadratureError : public NumericError {
public:
    explicit QuadratureError(const std::string& msg) : NumericError(msg) {}
};

} // namespace satrep
