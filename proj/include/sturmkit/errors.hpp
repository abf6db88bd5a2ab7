#pragma once

#include <stdexcept>
#include <string>

namespace sturmkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define STURMKIT_ERROR(Name)                                        \
    struct Name : Error {                                           \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

STURMKIT_ERROR(BasisMismatch);
STURMKIT_ERROR(RankMismatch);
STURMKIT_ERROR(PrecisionExhausted);
STURMKIT_ERROR(RationalInput);
STURMKIT_ERROR(FormalBasisUnsupported);
STURMKIT_ERROR(PoleHit);
STURMKIT_ERROR(NotCoprime);
STURMKIT_ERROR(SingularMatrix);
STURMKIT_ERROR(SingularResult);
STURMKIT_ERROR(NotAFactor);
STURMKIT_ERROR(NotBijection);
STURMKIT_ERROR(NonPositiveLength);
STURMKIT_ERROR(OutOfDomain);
STURMKIT_ERROR(KeaneViolation);
STURMKIT_ERROR(EmptyCylinder);
STURMKIT_ERROR(IterationCapExceeded);
STURMKIT_ERROR(ParseError);

#undef STURMKIT_ERROR

}  // namespace sturmkit
