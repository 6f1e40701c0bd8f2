#pragma once

#include <stdexcept>
#include <string>

namespace jtlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainMismatch : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotATripotent : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct NotInV2 : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct DomainOfValidity : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct SamplingExhausted : Error { using Error::Error; };
struct StepLeavesDomain : Error { using Error::Error; };

} // namespace jtlab
