#ifndef LIEGEO_ERRORS_HPP
#define LIEGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liegeo {

// Structural input problems throw; mathematical check failures are reported
// through ValidationReport instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct AsymmetricMetricInput : Error {
  using Error::Error;
};

struct NonPositiveParameter : Error {
  using Error::Error;
};

struct AsymmetricHessian : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct EvenDimension : Error {
  using Error::Error;
};

}  // namespace liegeo

#endif
