#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HECKE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

HECKE_DEFINE_ERROR(DivisionByZero);
HECKE_DEFINE_ERROR(ParseError);
HECKE_DEFINE_ERROR(SingularBasis);
HECKE_DEFINE_ERROR(NotSublattice);
HECKE_DEFINE_ERROR(NotPrime);
HECKE_DEFINE_ERROR(BadDiscriminant);
HECKE_DEFINE_ERROR(DescriptorMismatch);
HECKE_DEFINE_ERROR(NotInQ);
HECKE_DEFINE_ERROR(NotInN);
HECKE_DEFINE_ERROR(ConductorOverflow);
HECKE_DEFINE_ERROR(EnumerationBound);
HECKE_DEFINE_ERROR(FamilyConditionViolated);
HECKE_DEFINE_ERROR(ActionNotWellDefined);
HECKE_DEFINE_ERROR(NotComparable);
HECKE_DEFINE_ERROR(StageTooLarge);
HECKE_DEFINE_ERROR(DetNotAllowed);
HECKE_DEFINE_ERROR(SizeCap);
HECKE_DEFINE_ERROR(InsufficientData);
HECKE_DEFINE_ERROR(ConfigInvalid);

#undef HECKE_DEFINE_ERROR

}  // namespace hecke
