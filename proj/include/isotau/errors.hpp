#ifndef ISOTAU_ERRORS_HPP
#define ISOTAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isotau {

// Base class for everything thrown by the library.
struct IsotauError : std::runtime_error {
    explicit IsotauError(const std::string& msg) : std::runtime_error(msg) {}
};

// Special-function domain errors
struct PoleError : IsotauError {
    explicit PoleError(const std::string& msg) : IsotauError(msg) {}
};
struct BranchCutError : IsotauError {
    explicit BranchCutError(const std::string& msg) : IsotauError(msg) {}
};
struct ParameterError : IsotauError {
    explicit ParameterError(const std::string& msg) : IsotauError(msg) {}
};
struct NonConvergenceError : IsotauError {
    explicit NonConvergenceError(const std::string& msg) : IsotauError(msg) {}
};

// Monodromy / parametrix degeneracies
struct DegenerateError : IsotauError {
    explicit DegenerateError(const std::string& msg) : IsotauError(msg) {}
};
struct ResonanceError : IsotauError {
    explicit ResonanceError(const std::string& msg) : IsotauError(msg) {}
};
struct SingularError : IsotauError {
    explicit SingularError(const std::string& msg) : IsotauError(msg) {}
};
struct GenericityError : IsotauError {
    explicit GenericityError(const std::string& msg) : IsotauError(msg) {}
};
struct ValidityError : IsotauError {
    explicit ValidityError(const std::string& msg) : IsotauError(msg) {}
};

// Integration failures
struct PoleEncountered : IsotauError {
    double location;
    PoleEncountered(const std::string& msg, double where)
        : IsotauError(msg), location(where) {}
};
struct ToleranceError : IsotauError {
    explicit ToleranceError(const std::string& msg) : IsotauError(msg) {}
};

} // namespace isotau

#endif
