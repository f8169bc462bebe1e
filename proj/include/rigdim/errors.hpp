#pragma once

#include <stdexcept>
#include <string>

namespace rigdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RIGDIM_ERROR(Name)                 \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

RIGDIM_ERROR(DimensionMismatch)
RIGDIM_ERROR(FieldMismatch)
RIGDIM_ERROR(AlgebraMismatch)
RIGDIM_ERROR(NotFiniteDimensional)
RIGDIM_ERROR(NotHomogeneous)
RIGDIM_ERROR(NotAdmissible)
RIGDIM_ERROR(InvalidRepresentation)
RIGDIM_ERROR(UnsupportedCharacteristic)
RIGDIM_ERROR(SplitnessError)
RIGDIM_ERROR(NonBasicInput)
RIGDIM_ERROR(NotGenerator)
RIGDIM_ERROR(NotGeneratorCogenerator)
RIGDIM_ERROR(NotSelfInjective)
RIGDIM_ERROR(SelfInjectiveInput)
RIGDIM_ERROR(IncompleteList)
RIGDIM_ERROR(Inconclusive)
RIGDIM_ERROR(ParseError)

#undef RIGDIM_ERROR

}  // namespace rigdim
