#pragma once

#include <stdexcept>
#include <string>

namespace qhj {

/// Base class for numerical failures raised by the library. Each error carries
/// the name of the pipeline stage that produced it so front ends can report it.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& message)
      : std::runtime_error(message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Coordinate outside the natural domain of a potential family.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("potentials", message) {}
};

/// Classical momentum requested at a point where E < V(x).
class ForbiddenRegionError : public Error {
 public:
  explicit ForbiddenRegionError(const std::string& message) : Error("potentials", message) {}
};

/// No bound classical region exists at the requested energy.
class NoTurningPointsError : public Error {
 public:
  explicit NoTurningPointsError(const std::string& message) : Error("potentials", message) {}
};

/// The potential has no bound state with the requested node count.
class NoSuchLevelError : public Error {
 public:
  NoSuchLevelError(std::string stage, const std::string& message)
      : Error(std::move(stage), message) {}
};

/// An energy scan or root bracket could not be established.
class ScanExhaustedError : public Error {
 public:
  ScanExhaustedError(std::string stage, const std::string& message)
      : Error(std::move(stage), message) {}
};

/// Adaptive ODE integration could not make progress above the step floor.
class StepUnderflowError : public Error {
 public:
  explicit StepUnderflowError(const std::string& message) : Error("qhje", message) {}
};

/// 1 + F <= 0 at an interior abscissa, so G = sqrt(1+F) - 1 is undefined there.
class UndefinedCorrectionError : public Error {
 public:
  UndefinedCorrectionError(double abscissa, const std::string& message)
      : Error("qhje", message), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// The phase-amplitude representation with the turning-point phase conventions
/// does not exist at this energy (far from an eigenvalue).
class RepresentationError : public Error {
 public:
  explicit RepresentationError(const std::string& message) : Error("qhje", message) {}
};

}  // namespace qhj
