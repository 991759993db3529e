#pragma once

#include <stdexcept>

namespace invgeo {

/// Base class of all invgeo errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDomain : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct NonpositiveOmega : Error { using Error::Error; };
struct SingularOrbit : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct SlantRegionViolation : Error { using Error::Error; };
struct BranchDomainError : Error { using Error::Error; };
struct IntegratorStall : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };

} // namespace invgeo
