#ifndef MAGSPEC_ERRORS_HPP
#define MAGSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magspec {

/// Bad input: configuration, scenario conditions, contract violations.
/// CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical guard tripped: resolution, flux, size caps, convergence.
/// CLI exit code 3.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace magspec

#endif
