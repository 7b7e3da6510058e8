#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fingap/common.hpp"
#include "fingap/polynomial.hpp"

namespace fingap {

// A finite gap set: l+1 disjoint closed bands [a_1,b_1], ..., [a_{l+1},b_{l+1}]
// described by 2(l+1) strictly increasing endpoints.
class GapSet {
public:
  GapSet() = default;
  explicit GapSet(std::vector<double> endpoints);

  int gap_count() const { return static_cast<int>(endpoints_.size()) / 2 - 1; }
  int band_count() const { return gap_count() + 1; }
  const std::vector<double>& endpoints() const { return endpoints_; }

  double band_lo(int j) const { return endpoints_[2 * j]; }      // j in [0, l]
  double band_hi(int j) const { return endpoints_[2 * j + 1]; }
  double gap_lo(int k) const { return endpoints_[2 * k + 1]; }   // k in [0, l)
  double gap_hi(int k) const { return endpoints_[2 * k + 2]; }

  double lo() const { return endpoints_.front(); }
  double hi() const { return endpoints_.back(); }
  double diameter() const { return hi() - lo(); }

  bool contains(double x, double tol = 0.0) const;
  int band_of(double x) const;  // -1 when x is not in the set

  // Distance to the set and to its complement; each vanishes exactly
  // on the closure of the respective region.
  double dist_to_set(double x) const;
  double dist_to_complement(double x) const;

private:
  std::vector<double> endpoints_;
};

GapSet make_gapset(std::vector<double> endpoints);

// Value of the complex Green's function along the canonical path
// (through the upper half plane from the rightmost endpoint), plus the
// number of bands the path passed over, which callers doing their own
// continuation can use to reconcile branches of the imaginary part.
struct GreenValue {
  Complex value;
  int bands_crossed = 0;
};

// Equilibrium data of a gap set: the gap polynomial P (monic, degree l,
// one zero in each gap), the capacity, the complex Green's function
// G + i*Gtilde, the equilibrium density and the per-band masses.
class EquilibriumData {
public:
  const GapSet& set() const { return set_; }
  const Poly& gap_polynomial() const { return gap_poly_; }
  double capacity() const { return capacity_; }
  const std::vector<double>& band_masses() const { return band_masses_; }

  // sqrt(R) with R(z) = prod (z - a_j)(z - b_j), branch cut exactly on
  // the set, positive for real z right of the last band, ~ z^{l+1} at infinity.
  Complex sqrtR(Complex z) const;

  // d/dz of the complex Green's function: P(z)/sqrt(R(z)).
  Complex green_deriv(Complex z) const;

  // Complex Green's function along the canonical path. Re is the
  // potential-theoretic Green's function (single valued); Im depends on
  // the path and is reported for the canonical one.
  GreenValue green(Complex z) const;
  double green_re(Complex z) const { return green(z).value.real(); }

  // Equilibrium density on band interiors, |P(x)| / (pi sqrt|R(x)|).
  double density(double x) const;

  int quadrature_order() const { return quad_order_; }

private:
  friend EquilibriumData equilibrium(const GapSet&, int);
  GapSet set_;
  Poly gap_poly_;
  double capacity_ = 0.0;
  std::vector<double> band_masses_;
  int quad_order_ = 0;
};

EquilibriumData equilibrium(const GapSet& set, int quad_order = 64);

// Tracks the analytic continuation of the complex Green's function
// along a user-driven path in C \ set. Used by the covering map to keep
// a consistent branch of Im G without global monodromy bookkeeping.
class GreenTracker {
public:
  GreenTracker(const EquilibriumData& eq, Complex x0);
  GreenTracker(const EquilibriumData& eq, Complex x0, Complex g0);

  Complex x() const { return x_; }
  Complex value() const { return g_; }

  // Continue along the straight segment to x1. Throws GeometryError if
  // the segment crosses a band.
  void move_to(Complex x1);

private:
  const EquilibriumData* eq_;
  Complex x_;
  Complex g_;
};

// Integral over the set of q_j(x)^exponent * log w(x), where on band j
// q_j(x) = (x - a_j)(b_j - x) is the product of the distances to the
// band's own endpoints. The cosine substitution absorbs the endpoint
// singularity of the exponent -1/2 case exactly. Divergence of the
// negative part is reported as the -inf sentinel, never as a float.
ExtendedReal szego_integral(const GapSet& set, const EquilibriumData& eq,
                            const std::function<double(double)>& w,
                            double exponent, int start_order = 64);

struct EigenvalueFunctionals {
  double half_sum = 0.0;        // sum of dist(E_j, set)^{1/2}
  double three_half_sum = 0.0;  // sum of dist(E_j, set)^{3/2}
  double green_product = 1.0;   // prod exp(-G(E_j)), in (0, 1]
};

EigenvalueFunctionals eigenvalue_functionals(const GapSet& set, const EquilibriumData& eq,
                                             std::span<const double> eigenvalues);

} // namespace fingap
