#include "fingap/gapset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fingap/errors.hpp"
#include "fingap/quadrature.hpp"

namespace fingap {

GapSet::GapSet(std::vector<double> endpoints) : endpoints_(std::move(endpoints)) {}

bool GapSet::contains(double x, double tol) const {
  for (int j = 0; j < band_count(); ++j)
    if (x >= band_lo(j) - tol && x <= band_hi(j) + tol) return true;
  return false;
}

int GapSet::band_of(double x) const {
  for (int j = 0; j < band_count(); ++j)
    if (x >= band_lo(j) && x <= band_hi(j)) return j;
  return -1;
}

double GapSet::dist_to_set(double x) const {
  double d = std::numeric_limits<double>::infinity();
  for (int j = 0; j < band_count(); ++j) {
    if (x >= band_lo(j) && x <= band_hi(j)) return 0.0;
    d = std::min(d, std::min(std::abs(x - band_lo(j)), std::abs(x - band_hi(j))));
  }
  return d;
}

double GapSet::dist_to_complement(double x) const {
  int j = band_of(x);
  if (j < 0) return 0.0;
  return std::min(x - band_lo(j), band_hi(j) - x);
}

GapSet make_gapset(std::vector<double> endpoints) {
  if (endpoints.size() < 2 || endpoints.size() % 2 != 0)
    throw ValidationError("make_gapset: need an even number (>= 2) of endpoints, got " +
                          std::to_string(endpoints.size()));
  for (std::size_t i = 0; i + 1 < endpoints.size(); ++i)
    if (!(endpoints[i] < endpoints[i + 1]))
      throw ValidationError("make_gapset: endpoints not strictly increasing at index " +
                            std::to_string(i + 1));
  const double diam = endpoints.back() - endpoints.front();
  for (std::size_t k = 1; k + 1 < endpoints.size(); k += 2)
    if (endpoints[k + 1] - endpoints[k] < 1e-8 * diam)
      throw ValidationError("make_gapset: gap starting at index " + std::to_string(k) +
                            " is narrower than 1e-8 * diameter");
  return GapSet(std::move(endpoints));
}

// ---------------------------------------------------------------------------
// Equilibrium data

Complex EquilibriumData::sqrtR(Complex z) const {
  // Per-band factor sqrt(z-a)*sqrt(z-b) (principal branches) has its cut
  // exactly on [a, b] and is positive right of b; the product therefore
  // has its cut exactly on the set and behaves like z^{l+1} at infinity.
  Complex prod = 1.0;
  for (int j = 0; j < set_.band_count(); ++j)
    prod *= std::sqrt(z - set_.band_lo(j)) * std::sqrt(z - set_.band_hi(j));
  return prod;
}

Complex EquilibriumData::green_deriv(Complex z) const {
  return gap_poly_(z) / sqrtR(z);
}

double EquilibriumData::density(double x) const {
  int j = set_.band_of(x);
  if (j < 0 || x <= set_.band_lo(j) || x >= set_.band_hi(j))
    throw DomainError("density: point not in a band interior");
  double absR = 1.0;
  for (double e : set_.endpoints()) absR *= std::abs(x - e);
  return std::abs(gap_poly_(x)) / (kPi * std::sqrt(absR));
}

namespace {

// |R(t)| with the two factors from the endpoints `skip1`, `skip2` removed.
double abs_R_without(const GapSet& set, double t, double skip1, double skip2) {
  double prod = 1.0;
  for (double e : set.endpoints()) {
    if (e == skip1 || e == skip2) continue;
    prod *= std::abs(t - e);
  }
  return prod;
}

// G(x) for real x to the right of the last band: cosine-free path along
// the real axis with the s^2 substitution absorbing the 1/sqrt start.
double green_right_real(const EquilibriumData& eq, double x) {
  const double beta = eq.set().hi();
  const double smax = std::sqrt(x - beta);
  auto integrand = [&](double s) {
    double t = beta + s * s;
    double under = abs_R_without(eq.set(), t, beta, beta);
    return 2.0 * eq.gap_polynomial()(t) / std::sqrt(under);
  };
  return quad::adaptive(integrand, 0.0, smax, 1e-13);
}

} // namespace

GreenValue EquilibriumData::green(Complex z) const {
  const double scale = set_.diameter();
  if (std::abs(z.imag()) < 1e-14 * scale && set_.contains(z.real(), 1e-13 * scale))
    throw DomainError("green: evaluation point lies on the set");

  if (z.imag() < 0.0) {
    GreenValue gv = green(std::conj(z));
    gv.value = std::conj(gv.value);
    return gv;
  }

  const double beta = set_.hi();
  if (z.imag() == 0.0 && z.real() > beta)
    return {Complex(green_right_real(*this, z.real()), 0.0), 0};

  const double H = std::max(0.6 * scale, 1.5 * z.imag());
  auto f = [this](Complex t) { return green_deriv(t); };

  // Singular start: t = beta + i s^2 lifts from the endpoint.
  Complex g = quad::adaptive(
      [&](double s) -> Complex {
        Complex t(beta, s * s);
        Complex under = 1.0;
        for (double e : set_.endpoints())
          if (e != beta) under *= std::sqrt(t - e);
        // sqrt(t - beta) = s * sqrt(i); the 2s ds from the substitution cancels it.
        return 2.0 * gap_poly_(t) / (std::sqrt(Complex(0.0, 1.0)) * under);
      },
      0.0, std::sqrt(H), 1e-13);

  Complex corner1(beta, H), corner2(z.real(), H);
  g += quad::segment(f, corner1, corner2, 1e-13);
  g += quad::segment(f, corner2, z, 1e-13);

  int crossed = 0;
  double x0 = std::min(z.real(), beta), x1 = std::max(z.real(), beta);
  for (int j = 0; j < set_.band_count(); ++j)
    if (set_.band_hi(j) > x0 && set_.band_lo(j) < x1) ++crossed;
  return {g, crossed};
}

EquilibriumData equilibrium(const GapSet& set, int quad_order) {
  if (set.endpoints().empty()) throw ValidationError("equilibrium: empty gap set");
  if (quad_order < 16) throw ValidationError("equilibrium: quad_order must be >= 16");

  EquilibriumData eq;
  eq.set_ = set;
  eq.quad_order_ = quad_order;

  const int ell = set.gap_count();
  const double c = 0.5 * (set.lo() + set.hi());
  const double s = 0.5 * set.diameter();
  const int cap = 1 << 14;

  // Gap polynomial: monic degree l, fixed by vanishing gap integrals of
  // P / sqrt|R|. Solved in the scaled variable tau = (t - c)/s.
  if (ell == 0) {
    eq.gap_poly_ = Poly::constant(1.0);
  } else {
    // moments m[k][i] = int_{gap k} tau^i / sqrt|R| dt via t = mid + h cos(theta)
    std::vector<std::vector<double>> m(ell, std::vector<double>(ell + 1));
    for (int k = 0; k < ell; ++k) {
      const double lo = set.gap_lo(k), hi = set.gap_hi(k);
      const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
      for (int i = 0; i <= ell; ++i) {
        auto f = [&](double theta) {
          double t = mid + h * std::cos(theta);
          double tau = (t - c) / s;
          return std::pow(tau, i) / std::sqrt(abs_R_without(set, t, lo, hi));
        };
        auto res = quad::doubling(f, 0.0, kPi, quad_order, 1e-13, cap);
        if (!res.converged)
          throw NumericalError("equilibrium: gap moment quadrature did not converge, residual " +
                               std::to_string(res.last_change));
        m[k][i] = res.value;
      }
    }
    // Gaussian elimination with partial pivoting on the l x l system.
    std::vector<std::vector<double>> A(ell, std::vector<double>(ell + 1));
    for (int k = 0; k < ell; ++k) {
      for (int i = 0; i < ell; ++i) A[k][i] = m[k][i];
      A[k][ell] = -m[k][ell];
    }
    for (int col = 0; col < ell; ++col) {
      int piv = col;
      for (int r = col + 1; r < ell; ++r)
        if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
      if (std::abs(A[piv][col]) < 1e-300)
        throw NumericalError("equilibrium: degenerate gap polynomial system");
      std::swap(A[piv], A[col]);
      for (int r = 0; r < ell; ++r) {
        if (r == col) continue;
        double fac = A[r][col] / A[col][col];
        for (int cc = col; cc <= ell; ++cc) A[r][cc] -= fac * A[col][cc];
      }
    }
    Poly tau_shift({-c / s, 1.0 / s});  // tau(t)
    Poly P = Poly::constant(0.0);
    Poly tau_pow = Poly::constant(1.0);
    for (int i = 0; i < ell; ++i) {
      P = P + tau_pow * (A[i][ell] / A[i][i] * std::pow(s, ell));
      tau_pow = tau_pow * tau_shift;
    }
    P = P + tau_pow * std::pow(s, ell);  // monic top term
    eq.gap_poly_ = P;
  }

  // Capacity from the log asymptotics of G. With s0 the hull center and
  // T0 beyond the set, -log C = G(T0) - log(T0 - s0) + tail, where the
  // tail integral is mapped to u in (0, 1] by t = s0 + (T0 - s0)/u.
  {
    const double s0 = c;
    const double T0 = set.hi() + 2.0 * set.diameter();
    const double gT0 = green_right_real(eq, T0);
    auto tail_f = [&](double u) {
      double t = s0 + (T0 - s0) / u;
      double pr = eq.gap_poly_(t) / eq.sqrtR(Complex(t, 0.0)).real();
      return (pr - 1.0 / (t - s0)) * (T0 - s0) / (u * u);
    };
    double tail = quad::adaptive(tail_f, 0.0, 1.0, 1e-14);
    eq.capacity_ = std::exp(-(gT0 - std::log(T0 - s0) + tail));
  }

  // Band masses: cosine substitution makes the integrand analytic.
  eq.band_masses_.resize(set.band_count());
  for (int j = 0; j < set.band_count(); ++j) {
    const double lo = set.band_lo(j), hi = set.band_hi(j);
    const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    auto f = [&](double theta) {
      double t = mid + h * std::cos(theta);
      return std::abs(eq.gap_poly_(t)) / (kPi * std::sqrt(abs_R_without(set, t, lo, hi)));
    };
    auto res = quad::doubling(f, 0.0, kPi, quad_order, 1e-13, cap);
    if (!res.converged)
      throw NumericalError("equilibrium: band mass quadrature did not converge, residual " +
                           std::to_string(res.last_change));
    eq.band_masses_[j] = res.value;
  }
  return eq;
}

// ---------------------------------------------------------------------------
// Green tracker

GreenTracker::GreenTracker(const EquilibriumData& eq, Complex x0)
    : eq_(&eq), x_(x0), g_(eq.green(x0).value) {}

GreenTracker::GreenTracker(const EquilibriumData& eq, Complex x0, Complex g0)
    : eq_(&eq), x_(x0), g_(g0) {}

void GreenTracker::move_to(Complex x1) {
  const GapSet& set = eq_->set();
  const double scale = set.diameter();
  const Complex x0 = x_;
  // Refuse segments through a band: the integrand's cut lives there.
  if ((x0.imag() > 0) != (x1.imag() > 0) && x0.imag() != x1.imag()) {
    double t = -x0.imag() / (x1.imag() - x0.imag());
    if (t >= 0.0 && t <= 1.0) {
      double xc = x0.real() + t * (x1.real() - x0.real());
      if (set.contains(xc, 1e-13 * scale))
        throw GeometryError("GreenTracker: segment crosses a band");
    }
  } else if (std::abs(x0.imag()) < 1e-14 * scale && std::abs(x1.imag()) < 1e-14 * scale) {
    double a = std::min(x0.real(), x1.real()), b = std::max(x0.real(), x1.real());
    for (int j = 0; j < set.band_count(); ++j)
      if (set.band_hi(j) > a + 1e-15 * scale && set.band_lo(j) < b - 1e-15 * scale)
        throw GeometryError("GreenTracker: real segment overlaps a band");
  }
  g_ += quad::segment([this](Complex t) { return eq_->green_deriv(t); }, x0, x1, 1e-13);
  x_ = x1;
}

// ---------------------------------------------------------------------------
// Szego integral and eigenvalue functionals

ExtendedReal szego_integral(const GapSet& set, const EquilibriumData& eq,
                            const std::function<double(double)>& w,
                            double exponent, int start_order) {
  (void)eq;
  if (exponent != -0.5 && exponent != 0.5)
    throw ValidationError("szego_integral: weight exponent must be -1/2 or +1/2");

  // One pass at a given order, summed over bands. The cosine substitution
  // turns q^{-1/2} dx into dtheta and q^{+1/2} dx into h^2 sin^2(theta) dtheta.
  auto pass = [&](int order) {
    double total = 0.0;
    for (int j = 0; j < set.band_count(); ++j) {
      const double lo = set.band_lo(j), hi = set.band_hi(j);
      const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
      total += quad::integrate(
          [&](double theta) {
            double x = mid + h * std::cos(theta);
            double wx = w(x);
            if (wx < 0.0) throw DomainError("szego_integral: weight negative at x = " +
                                            std::to_string(x));
            double lg = wx == 0.0 ? -1e300 : std::log(wx);
            if (exponent == 0.5) lg *= sq(h * std::sin(theta));
            return lg;
          },
          0.0, kPi, order);
    }
    return total;
  };

  const int cap = 1 << 14;
  std::vector<double> hist;
  int order = std::max(start_order, 16);
  hist.push_back(pass(order));
  while (true) {
    order *= 2;
    if (order > cap) break;
    hist.push_back(pass(order));
    std::size_t n = hist.size();
    double change = std::abs(hist[n - 1] - hist[n - 2]);
    if (change <= 1e-10 * std::max(1.0, std::abs(hist[n - 1])))
      return ExtendedReal::of(hist[n - 1]);
    // Divergence: three successive refinements, each decreasing, with the
    // value more than doubling downward across them.
    if (n >= 4) {
      bool decreasing = hist[n - 1] < hist[n - 2] && hist[n - 2] < hist[n - 3] &&
                        hist[n - 3] < hist[n - 4];
      if (decreasing && hist[n - 1] < 2.0 * hist[n - 4] && hist[n - 4] < 0.0)
        return ExtendedReal::minus_infinity();
    }
  }
  // Cap hit: a strongly decreasing trend still counts as divergence.
  if (hist.size() >= 2 && hist.back() < hist.front() - 10.0 * std::abs(hist.front()))
    return ExtendedReal::minus_infinity();
  return ExtendedReal::of(hist.back());
}

EigenvalueFunctionals eigenvalue_functionals(const GapSet& set, const EquilibriumData& eq,
                                             std::span<const double> eigenvalues) {
  EigenvalueFunctionals out;
  double green_sum = 0.0;
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    double d = set.dist_to_set(eigenvalues[j]);
    if (d <= 1e-14 * set.diameter())
      throw DomainError("eigenvalue_functionals: eigenvalue " + std::to_string(j) +
                        " lies inside the set");
    out.half_sum += std::sqrt(d);
    out.three_half_sum += d * std::sqrt(d);
    green_sum += eq.green_re(Complex(eigenvalues[j], 0.0));
  }
  out.green_product = std::exp(-green_sum);
  return out;
}

} // namespace fingap
