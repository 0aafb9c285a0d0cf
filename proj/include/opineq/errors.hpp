#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSymmetric : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct NonPositiveArgument : Error { using Error::Error; };
struct ArgumentOutOfRange : Error { using Error::Error; };
struct BadInterval : Error { using Error::Error; };
struct GeneratorExhausted : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UnknownFunction : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct ZeroDivision : Error { using Error::Error; };

}  // namespace opineq
