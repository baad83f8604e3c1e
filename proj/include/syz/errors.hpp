#ifndef SYZ_ERRORS_HPP
#define SYZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syz {

/// Base class for all domain errors raised by the library.  The CLI maps
/// these to exit code 1; anything else escaping to main is exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SYZ_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& what = #NAME) : Error(what) {}   \
    }

SYZ_DEFINE_ERROR(OriginNotInterior);
SYZ_DEFINE_ERROR(Unbounded);
SYZ_DEFINE_ERROR(NotProperFace);
SYZ_DEFINE_ERROR(Degenerate);
SYZ_DEFINE_ERROR(EmptyOrLowerDim);
SYZ_DEFINE_ERROR(NotGenericHeights);
SYZ_DEFINE_ERROR(NotCentral);
SYZ_DEFINE_ERROR(NotInRelativeInterior);
SYZ_DEFINE_ERROR(NotOrderPreserving);
SYZ_DEFINE_ERROR(NotSummand);
SYZ_DEFINE_ERROR(EpsTooLarge);
SYZ_DEFINE_ERROR(ExhaustedAttempts);
SYZ_DEFINE_ERROR(NotDualPair);
SYZ_DEFINE_ERROR(NotDiscriminantVertex);
SYZ_DEFINE_ERROR(NotAdjacent);
SYZ_DEFINE_ERROR(InvalidLoop);
SYZ_DEFINE_ERROR(PairingViolation);
SYZ_DEFINE_ERROR(NonPrimitive);
SYZ_DEFINE_ERROR(EmptySample);
SYZ_DEFINE_ERROR(SchemaError);

#undef SYZ_DEFINE_ERROR

} // namespace syz

#endif
