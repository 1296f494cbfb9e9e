#pragma once

#include <stdexcept>
#include <string>

namespace skewcc {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Field construction and arithmetic.
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus       : Error { using Error::Error; };
struct DegreeMismatch         : Error { using Error::Error; };
struct ZeroInverse            : Error { using Error::Error; };
struct FieldMismatch          : Error { using Error::Error; };
struct ExponentOutOfRange     : Error { using Error::Error; };
struct ZeroArgument           : Error { using Error::Error; };
struct IndexTooLarge          : Error { using Error::Error; };

// Skew polynomial arithmetic.
struct AutomorphismMismatch   : Error { using Error::Error; };
struct DivisionByZero         : Error { using Error::Error; };

// Equivalence classification.
struct ZeroConstant           : Error { using Error::Error; };

// Code construction and enumeration.
struct NotARightDivisor       : Error { using Error::Error; };
struct ZeroGenerator          : Error { using Error::Error; };
struct LengthMismatch         : Error { using Error::Error; };
struct ZeroDimensional        : Error { using Error::Error; };
struct EnumerationBudgetExceeded : Error { using Error::Error; };
struct WitnessConditionViolated  : Error { using Error::Error; };

// CLI input validation.
struct InvalidArgument        : Error { using Error::Error; };

}  // namespace skewcc
