#pragma once

#include <stdexcept>
#include <string>

namespace qinfo {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QINFO_DEFINE_ERROR(Name)          \
    struct Name : Error {                 \
        using Error::Error;               \
    };

QINFO_DEFINE_ERROR(DimensionMismatch)
QINFO_DEFINE_ERROR(NotFinite)
QINFO_DEFINE_ERROR(NotHermitian)
QINFO_DEFINE_ERROR(TraceNotOne)
QINFO_DEFINE_ERROR(NegativeEigenvalue)
QINFO_DEFINE_ERROR(NotUnitary)
QINFO_DEFINE_ERROR(ZeroVector)
QINFO_DEFINE_ERROR(NotNormalized)
QINFO_DEFINE_ERROR(NegativeProbability)
QINFO_DEFINE_ERROR(OutOfRange)
QINFO_DEFINE_ERROR(EmptyPhaseList)
QINFO_DEFINE_ERROR(AllAmplitudesExcluded)
QINFO_DEFINE_ERROR(UnknownScenario)
QINFO_DEFINE_ERROR(BadParameter)
QINFO_DEFINE_ERROR(ParseError)

#undef QINFO_DEFINE_ERROR

}  // namespace qinfo
