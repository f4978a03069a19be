#ifndef BOSELAT_ERRORS_HPP
#define BOSELAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boselat {

/// Requested basis would exceed the configured dimension cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Gate synthesis cannot produce a schedule for the requested parameters
/// (infeasible quantization integers, violated degeneracy condition, ...).
class SynthesisError : public std::runtime_error {
public:
    explicit SynthesisError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric guarantee was violated (unitarity drift, oracle mismatch).
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boselat

#endif
