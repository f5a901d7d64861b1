#ifndef KSENDO_ERRORS_HPP
#define KSENDO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ksendo {

// Error taxonomy used across the library.  Each class corresponds to one
// failure mode of the pipeline contracts; the CLI maps them to exit codes.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistentTower : std::runtime_error {
    explicit InconsistentTower(const std::string& msg) : std::runtime_error(msg) {}
};

struct AccountingError : std::runtime_error {
    explicit AccountingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonIntegralMultiplicity : std::runtime_error {
    explicit NonIntegralMultiplicity(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistentScalars : std::runtime_error {
    explicit InconsistentScalars(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonScalarProduct : std::runtime_error {
    explicit NonScalarProduct(const std::string& msg) : std::runtime_error(msg) {}
};

struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeLimit : std::runtime_error {
    explicit SizeLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedCenter : std::runtime_error {
    explicit UnsupportedCenter(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ksendo

#endif
