#pragma once

#include <stdexcept>
#include <string>

namespace rirformer {

// Base of every error raised by the toolkit. The CLI maps subclasses onto
// exit codes (see tools/rirformer.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class MaskError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Interpolation input that no spline can fit (too few or repeated knots).
class FitError : public Error {
 public:
  using Error::Error;
};

class MetricError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf encountered in a tensor or a diverging loss.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace rirformer
