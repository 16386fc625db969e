#pragma once

#include <stdexcept>
#include <string>

namespace gyrokit {

// Base class for all invariant violations. The what() string starts with the
// error name so CLI error messages name the violated invariant.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail) {}
};

#define GYROKIT_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& detail = {})               \
            : Error(#Name, detail) {}                               \
    }

GYROKIT_DEFINE_ERROR(SingularMatrix);
GYROKIT_DEFINE_ERROR(NotPositiveDefinite);
GYROKIT_DEFINE_ERROR(NotHermitian);
GYROKIT_DEFINE_ERROR(NotTraceless);
GYROKIT_DEFINE_ERROR(NotUnitary);
GYROKIT_DEFINE_ERROR(NotRotation);
GYROKIT_DEFINE_ERROR(OutOfBall);
GYROKIT_DEFINE_ERROR(StructureMismatch);
GYROKIT_DEFINE_ERROR(ProbeOutOfBall);
GYROKIT_DEFINE_ERROR(ParseError);

#undef GYROKIT_DEFINE_ERROR

} // namespace gyrokit
