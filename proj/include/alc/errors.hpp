#ifndef ALC_ERRORS_HPP
#define ALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alc {

// Base class for all domain errors raised by the library. CLI maps these to
// structured messages; the concrete type name is part of the interface.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ALC_ERROR_TYPE(Name)            \
  struct Name : Error {                 \
    using Error::Error;                 \
  };

ALC_ERROR_TYPE(NotFiniteType)
ALC_ERROR_TYPE(BadPairing)
ALC_ERROR_TYPE(NotDominant)
ALC_ERROR_TYPE(BadGeneratorIndex)
ALC_ERROR_TYPE(NotInClosure)
ALC_ERROR_TYPE(InfiniteParabolic)
ALC_ERROR_TYPE(NotParametrizing)
ALC_ERROR_TYPE(NotMinimalInCoset)
ALC_ERROR_TYPE(OutsideFrontier)
ALC_ERROR_TYPE(ParseError)
ALC_ERROR_TYPE(NotSelfDual)
ALC_ERROR_TYPE(NegativeKLCoefficient)
ALC_ERROR_TYPE(NotUnitriangular)
ALC_ERROR_TYPE(PTooSmall)
ALC_ERROR_TYPE(NoXi)
ALC_ERROR_TYPE(WeylTooLarge)
ALC_ERROR_TYPE(UnsupportedDatum)

#undef ALC_ERROR_TYPE

}  // namespace alc

#endif
