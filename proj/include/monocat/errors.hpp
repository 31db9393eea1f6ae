#pragma once

#include <stdexcept>
#include <string>

namespace monocat {

  // Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define MONOCAT_DEFINE_ERROR(Name)             \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  };

  MONOCAT_DEFINE_ERROR(DimensionMismatch)
  MONOCAT_DEFINE_ERROR(FieldMismatch)
  MONOCAT_DEFINE_ERROR(DivisionByZero)
  MONOCAT_DEFINE_ERROR(UnsupportedField)
  MONOCAT_DEFINE_ERROR(NotInvertible)
  MONOCAT_DEFINE_ERROR(AlgebraMismatch)
  MONOCAT_DEFINE_ERROR(InvalidStructure)
  MONOCAT_DEFINE_ERROR(ParseError)
  MONOCAT_DEFINE_ERROR(MalformedTensor)
  MONOCAT_DEFINE_ERROR(ActionClash)
  MONOCAT_DEFINE_ERROR(NotNatural)
  MONOCAT_DEFINE_ERROR(NotBalanced)
  MONOCAT_DEFINE_ERROR(UnknownSimple)
  MONOCAT_DEFINE_ERROR(DivisibilityError)
  MONOCAT_DEFINE_ERROR(ZeroObject)
  MONOCAT_DEFINE_ERROR(InternalMismatch)
  MONOCAT_DEFINE_ERROR(Overflow)

#undef MONOCAT_DEFINE_ERROR

}  // namespace monocat
