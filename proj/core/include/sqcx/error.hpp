#pragma once

#include <stdexcept>
#include <string>

namespace sqcx {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SQCX_DEFINE_ERROR(Name)                   \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

SQCX_DEFINE_ERROR(RankMismatch);
SQCX_DEFINE_ERROR(ParseError);
SQCX_DEFINE_ERROR(NotCyclicallyReduced);
SQCX_DEFINE_ERROR(FiniteOrder);
SQCX_DEFINE_ERROR(NoStep);
SQCX_DEFINE_ERROR(NotCollapsible);
SQCX_DEFINE_ERROR(NotATree);
SQCX_DEFINE_ERROR(Disconnected);
SQCX_DEFINE_ERROR(RankNotTwo);
SQCX_DEFINE_ERROR(InvalidInput);

// Invariant violations: these indicate a bug or an input the constructions
// cannot handle, never a user mistake.
SQCX_DEFINE_ERROR(InternalError);
SQCX_DEFINE_ERROR(DegenerateCylinder);

#undef SQCX_DEFINE_ERROR

}  // namespace sqcx
