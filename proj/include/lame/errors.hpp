#pragma once

#include <stdexcept>
#include <string>

namespace lame {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LAME_DECLARE_ERROR(Name)                                              \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

LAME_DECLARE_ERROR(NonDivisible);
LAME_DECLARE_ERROR(DegreeTooSmall);
LAME_DECLARE_ERROR(NotSymmetric);
LAME_DECLARE_ERROR(ParseError);
LAME_DECLARE_ERROR(ParityMismatch);
LAME_DECLARE_ERROR(UnsupportedKind);
LAME_DECLARE_ERROR(ComponentAbsent);
LAME_DECLARE_ERROR(IdentityFailed);
LAME_DECLARE_ERROR(StructureViolation);
LAME_DECLARE_ERROR(ShapeViolation);
LAME_DECLARE_ERROR(NonPositiveCoefficient);
LAME_DECLARE_ERROR(RootIsolationFailed);
LAME_DECLARE_ERROR(ImTooSmall);
LAME_DECLARE_ERROR(InvalidArgument);

#undef LAME_DECLARE_ERROR

}  // namespace lame
