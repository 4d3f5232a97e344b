#ifndef STEEPFRONT_ERROR_HPP
#define STEEPFRONT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace steepfront {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid numeric input: arguments outside the admissible domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A constitutive law violates its structural requirements
/// (e.g. a user-supplied diffusivity returning a non-positive value).
class InvalidLawError : public Error {
public:
    explicit InvalidLawError(const std::string& msg) : Error(msg) {}
};

/// Run configuration rejected during validation.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// An implicit step failed to converge at the requested tolerance.
class StepFailure : public Error {
public:
    explicit StepFailure(const std::string& msg) : Error(msg) {}
};

/// A solver internal invariant was violated beyond tolerance.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

/// The requested analysis does not apply to the given data.
class NotApplicableError : public Error {
public:
    explicit NotApplicableError(const std::string& msg) : Error(msg) {}
};

/// Too few samples for the requested fit.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

} // namespace steepfront

#endif
