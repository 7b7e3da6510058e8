#pragma once

#include <vector>

#include "fingap/common.hpp"

namespace fingap {

// Dense real polynomial in the monomial basis, coefficient k multiplies x^k.
// Degrees stay small here (gap polynomials, discriminants, lifted
// m-functions), so no attempt is made at a stable high-degree basis.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(double v) { return Poly({v}); }
  static Poly monomial(int degree, double coeff = 1.0);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }

  double operator()(double x) const;
  Complex operator()(Complex x) const;

  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(double s) const;

  // All real roots in [lo, hi], ascending. Assumes simple roots up to
  // the tolerance of the recursive critical-point subdivision.
  std::vector<double> real_roots(double lo, double hi) const;

private:
  void trim();
  std::vector<double> c_;
};

} // namespace fingap
