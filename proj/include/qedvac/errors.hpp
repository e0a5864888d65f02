#ifndef QEDVAC_ERRORS_HPP
#define QEDVAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qedvac {

// Base of all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: malformed files, invalid argument values. CLI exit code 2.
class InputError : public Error {
  public:
    using Error::Error;
};

// A required field is missing or a file does not follow its documented layout.
class SchemaError : public InputError {
  public:
    using InputError::InputError;
};

// A row or field parses but violates its stated constraints.
class ValidationError : public InputError {
  public:
    using InputError::InputError;
};

// Loaded values contradict each other beyond tolerance.
class IntegrityError : public InputError {
  public:
    using InputError::InputError;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public InputError {
  public:
    using InputError::InputError;
};

// Numeric conditions reached during evaluation. CLI exit code 3.
class NumericError : public Error {
  public:
    using Error::Error;
};

// Momentum scale past the point where the result stops being real-valued.
class ThresholdError : public NumericError {
  public:
    using NumericError::NumericError;
};

// A quantity that is formally infinite (or its reciprocal zero) was requested.
class DivergenceError : public NumericError {
  public:
    using NumericError::NumericError;
};

}  // namespace qedvac

#endif  // QEDVAC_ERRORS_HPP
