#include "fingap/quadrature.hpp"

#include <map>
#include <mutex>

#include "fingap/errors.hpp"

namespace fingap::quad {

namespace {

Rule compute_gauss_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  // Newton iteration on P_n, initial guesses from the Chebyshev angles.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

} // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

template <typename T>
static T integrate_impl(const std::function<T(double)>& f, double a, double b, int order) {
  const Rule& r = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T sum{};
  for (int i = 0; i < order; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
  return half * sum;
}

double integrate(const std::function<double(double)>& f, double a, double b, int order) {
  return integrate_impl<double>(f, a, b, order);
}

Complex integrate(const std::function<Complex(double)>& f, double a, double b, int order) {
  return integrate_impl<Complex>(f, a, b, order);
}

DoublingResult doubling(const std::function<double(double)>& f, double a, double b,
                        int start_order, double rel_tol, int max_nodes) {
  DoublingResult res;
  int order = std::max(start_order, 4);
  double prev = integrate(f, a, b, order);
  res.history.push_back(prev);
  while (true) {
    order *= 2;
    if (order > max_nodes) {
      res.value = prev;
      res.nodes = order / 2;
      res.converged = false;
      return res;
    }
    double cur = integrate(f, a, b, order);
    res.history.push_back(cur);
    res.last_change = std::abs(cur - prev);
    if (res.last_change <= rel_tol * std::max(1.0, std::abs(cur))) {
      res.value = cur;
      res.nodes = order;
      res.converged = true;
      return res;
    }
    prev = cur;
  }
}

namespace {

template <typename T>
struct AdaptiveState {
  const std::function<T(double)>* f;
  double tol;
  double total_len;
  int max_depth;
};

template <typename T>
T adaptive_rec(const AdaptiveState<T>& st, double a, double b, int depth) {
  T coarse = integrate_impl<T>(*st.f, a, b, 16);
  T fine = integrate_impl<T>(*st.f, a, b, 32);
  double err = std::abs(fine - coarse);
  double budget = st.tol * std::max(0.25, (b - a) / st.total_len);
  if (err <= budget || depth >= st.max_depth) {
    if (err > budget && depth >= st.max_depth && err > 64 * st.tol)
      throw NumericalError("adaptive quadrature: tolerance unreachable, residual " +
                           std::to_string(err));
    return fine;
  }
  double mid = 0.5 * (a + b);
  return adaptive_rec(st, a, mid, depth + 1) + adaptive_rec(st, mid, b, depth + 1);
}

} // namespace

double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int max_depth) {
  AdaptiveState<double> st{&f, tol, std::max(b - a, 1e-300), max_depth};
  return adaptive_rec(st, a, b, 0);
}

Complex adaptive(const std::function<Complex(double)>& f, double a, double b,
                 double tol, int max_depth) {
  AdaptiveState<Complex> st{&f, tol, std::max(b - a, 1e-300), max_depth};
  return adaptive_rec(st, a, b, 0);
}

Complex segment(const std::function<Complex(Complex)>& f, Complex z0, Complex z1,
                double tol, int max_depth) {
  const Complex dir = z1 - z0;
  return adaptive([&](double t) { return f(z0 + t * dir) * dir; }, 0.0, 1.0, tol, max_depth);
}

} // namespace fingap::quad
