#pragma once

#include <stdexcept>
#include <string>

namespace coxring {

/// Base class of every domain error raised by the library. `kind()` is a
/// stable identifier (e.g. "NonPointedCone") used by the CLI in messages and
/// JSON error documents.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COXRING_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

COXRING_DEFINE_ERROR(DimensionMismatch);
COXRING_DEFINE_ERROR(InvalidInput);
COXRING_DEFINE_ERROR(NonPointedCone);
COXRING_DEFINE_ERROR(UnsaturatedInput);
COXRING_DEFINE_ERROR(PreimageMissing);
COXRING_DEFINE_ERROR(ChoiceMismatch);
COXRING_DEFINE_ERROR(NotInjective);
COXRING_DEFINE_ERROR(NotHomogeneous);
COXRING_DEFINE_ERROR(GradingObstruction);
COXRING_DEFINE_ERROR(NonPositiveDegree);
COXRING_DEFINE_ERROR(PointOffVariety);
COXRING_DEFINE_ERROR(NotEffective);
COXRING_DEFINE_ERROR(NonSurjectiveProjection);
COXRING_DEFINE_ERROR(OrbitNotClosed);
COXRING_DEFINE_ERROR(ParseError);

#undef COXRING_DEFINE_ERROR

}  // namespace coxring
