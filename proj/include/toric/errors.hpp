#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
    DimensionMismatch,
    NotSimplicial,
    NotPointed,
    IncompleteFan,
    NotAmple,
    SingularCone,
    UnboundedPolytope,
    EmptyPolytope,
    BadInput,
    ParseError,
    NoConvergence,
    RadiusTooSmall,
    Unsupported,
};

/**
 * Single exception type for the whole library. The code distinguishes the
 * error classes that callers are expected to branch on (e.g. an incomplete
 * fan vs. a non-ample divisor); the message carries context for humans.
 */
class ToricError : public std::runtime_error {
public:
    ToricError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw ToricError(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace toric

#endif
