#pragma once

#include <stdexcept>
#include <string>

namespace bernlab {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An integrand or series term produced NaN.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// An iterative method stopped before reaching its tolerance.
///
/// `achieved` carries the best error level reached, so the caller can decide
/// whether the partial answer is still usable.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// A computed quantity broke an inequality it must satisfy, which points at
/// an accuracy problem upstream.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bernlab
