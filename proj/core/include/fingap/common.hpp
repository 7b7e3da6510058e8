#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace fingap {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

inline double sq(double x) { return x * x; }

// Wrap a phase into (-pi, pi].
inline double wrap_phase(double phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi > kPi) phi -= 2.0 * kPi;
  if (phi <= -kPi) phi += 2.0 * kPi;
  return phi;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares y ~ slope*x + intercept.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// An extended real that can carry the -inf sentinel of divergent
// logarithmic integrals. Never encodes -inf as a float.
struct ExtendedReal {
  bool finite = true;
  double value = 0.0;

  static ExtendedReal minus_infinity() { return {false, 0.0}; }
  static ExtendedReal of(double v) { return {true, v}; }
};

} // namespace fingap
