#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace galrec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition or argument-domain violation.
struct DomainError : Error {
    using Error::Error;
};

// Quadrature or step-doubling failed to reach the requested tolerance.
// Carries the best estimate obtained and the residual against which it failed.
struct ConvergenceError : Error {
    double best_estimate;
    double residual;
    ConvergenceError(const std::string& what, double best, double resid)
        : Error(what), best_estimate(best), residual(resid) {}
};

// find_root was handed a bracket without a sign change.
struct BracketError : Error {
    using Error::Error;
};

// The integrator ran into a non-finite state; last valid state is preserved.
struct SingularityError : Error {
    double t_last;
    std::vector<double> last_state;
    SingularityError(const std::string& what, double t, std::vector<double> state)
        : Error(what), t_last(t), last_state(std::move(state)) {}
};

// A matching rule is undefined for the given profile pair.
struct MatchingError : Error {
    using Error::Error;
};

// A requested curve cannot be constructed through the given endpoints.
struct GeometryError : Error {
    using Error::Error;
};

// Descent cannot start: the path is flat over an initial stretch.
struct NonStartingError : Error {
    using Error::Error;
};

// Floating body rests on the container bottom; carries the minimum water
// volume that would float it.
struct GroundedError : Error {
    double required_volume;
    GroundedError(const std::string& what, double req)
        : Error(what), required_volume(req) {}
};

struct NonPhysicalError : Error {
    using Error::Error;
};

// Pisan-drop altitude does not exist (orbital speed at or above escape speed).
struct UnreachableAltitudeError : Error {
    using Error::Error;
};

// Sunspot never rotates onto the earth-facing hemisphere.
struct VisibilityError : Error {
    using Error::Error;
};

// A phase threshold is not crossed inside the scanned branch.
struct WindowError : Error {
    using Error::Error;
};

// Claim has no series to emit.
struct NoDataError : Error {
    using Error::Error;
};

// Unknown claim id; carries near matches.
struct NotFoundError : Error {
    std::vector<std::string> suggestions;
    NotFoundError(const std::string& what, std::vector<std::string> sugg)
        : Error(what), suggestions(std::move(sugg)) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace galrec
