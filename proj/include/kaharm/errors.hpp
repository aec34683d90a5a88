#pragma once

#include <stdexcept>
#include <string>

namespace kaharm {

/// Base of every error the library raises. `kind()` is the stable name used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define KAHARM_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

// root systems
KAHARM_DEFINE_ERROR(ZeroRoot);
KAHARM_DEFINE_ERROR(ReflectionClosureViolation);
KAHARM_DEFINE_ERROR(ProportionalRootViolation);
KAHARM_DEFINE_ERROR(GroupTooLarge);
KAHARM_DEFINE_ERROR(NotOrbitConstant);
KAHARM_DEFINE_ERROR(NotExact);
// polynomial calculus
KAHARM_DEFINE_ERROR(InexactDivision);
KAHARM_DEFINE_ERROR(DimensionMismatch);
// radial functions and quadrature
KAHARM_DEFINE_ERROR(GammaPole);
KAHARM_DEFINE_ERROR(BranchHypothesisViolated);
KAHARM_DEFINE_ERROR(DivergentIntegrand);
KAHARM_DEFINE_ERROR(NotInClass);
// operators and transforms
KAHARM_DEFINE_ERROR(NotKHarmonic);
KAHARM_DEFINE_ERROR(InputNotPolarForm);
KAHARM_DEFINE_ERROR(UnboundedRegime);
KAHARM_DEFINE_ERROR(MixedConfiguration);
// configuration and IO
KAHARM_DEFINE_ERROR(ParseError);
KAHARM_DEFINE_ERROR(ConfigError);

#undef KAHARM_DEFINE_ERROR

}  // namespace kaharm
