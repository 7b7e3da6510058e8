#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fingap/common.hpp"

namespace fingap::quad {

struct Rule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n, cached per order.
const Rule& gauss_legendre(int n);

double integrate(const std::function<double(double)>& f, double a, double b, int order);
Complex integrate(const std::function<Complex(double)>& f, double a, double b, int order);

// Order-doubling on a fixed interval: evaluate at order, 2*order, ...
// until the relative change drops below rel_tol or the node cap is hit.
struct DoublingResult {
  double value = 0.0;
  double last_change = 0.0;     // |I_k - I_{k-1}|
  int nodes = 0;
  bool converged = false;
  std::vector<double> history;  // successive estimates, for divergence detection
};
DoublingResult doubling(const std::function<double(double)>& f, double a, double b,
                        int start_order, double rel_tol, int max_nodes);

// Adaptive bisection with a GL(16)/GL(32) error estimate. Throws
// NumericalError when the tolerance is unreachable at max depth.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int max_depth = 48);
Complex adaptive(const std::function<Complex(double)>& f, double a, double b,
                 double tol, int max_depth = 48);

// Integral of a complex function along the straight segment [z0, z1].
Complex segment(const std::function<Complex(Complex)>& f, Complex z0, Complex z1,
                double tol, int max_depth = 48);

} // namespace fingap::quad
