#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ot {

/// Base class for numerical-solver failures.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Root finder called without a sign change on the bracket.
class NoBracket : public SolverError {
public:
    explicit NoBracket(const std::string& what) : SolverError(what) {}
};

/// Iteration limit reached; carries the last iterate and its residual.
class MaxIterExceeded : public SolverError {
public:
    MaxIterExceeded(const std::string& what, std::vector<double> last, double res)
        : SolverError(what), last_iterate(std::move(last)), residual(res) {}
    std::vector<double> last_iterate;
    double residual = 0.0;
};

class SingularPivot : public SolverError {
public:
    explicit SingularPivot(const std::string& what) : SolverError(what) {}
};

class GridMismatch : public std::invalid_argument {
public:
    explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class NotConstantIntensity : public std::invalid_argument {
public:
    explicit NotConstantIntensity(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidPolicy : public std::invalid_argument {
public:
    explicit InvalidPolicy(const std::string& what) : std::invalid_argument(what) {}
};

class WindowEmpty : public std::invalid_argument {
public:
    explicit WindowEmpty(const std::string& what) : std::invalid_argument(what) {}
};

/// Configuration document failed to parse or validate; carries the field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field_path, const std::string& what)
        : std::runtime_error(field_path.empty() ? what : field_path + ": " + what),
          field(field_path) {}
    std::string field;
};

}  // namespace ot
