#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace frkt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Selects the OpenMP kernel or its serial reference.
enum class Exec { Serial, Parallel };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class SmoothnessError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class SingularFactorError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, cplx last_iterate, double residual)
      : Error(what), last_(last_iterate), residual_(residual) {}

  cplx last_iterate() const { return last_; }
  double residual() const { return residual_; }

 private:
  cplx last_;
  double residual_;
};

}  // namespace frkt
