#include "fingap/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fingap/errors.hpp"

namespace fingap::tridiag {

int count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const std::size_t n = d.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1] / q;
    q = d[i] - x - off;
    if (q == 0.0) q = -1e-300;  // nudge off the exact pivot
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

std::pair<double, double> gershgorin(const std::vector<double>& d, const std::vector<double>& e) {
  double lo = d[0], hi = d[0];
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  return {lo - 1e-12 * (std::abs(lo) + 1.0), hi + 1e-12 * (std::abs(hi) + 1.0)};
}

// k-th smallest eigenvalue (0-based) by bisection, given an enclosing interval.
double kth_eigenvalue(const std::vector<double>& d, const std::vector<double>& e,
                      int k, double lo, double hi) {
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (count_below(d, e, mid) <= k) lo = mid; else hi = mid;
    if (hi - lo < 1e-15 * (std::abs(lo) + std::abs(hi) + 1.0)) break;
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
  auto [lo, hi] = gershgorin(d, e);
  return eigenvalues_in(d, e, lo, hi);
}

std::vector<double> eigenvalues_in(const std::vector<double>& d, const std::vector<double>& e,
                                   double lo, double hi) {
  int k0 = count_below(d, e, lo);
  int k1 = count_below(d, e, hi);
  std::vector<double> out;
  out.reserve(k1 - k0);
  for (int k = k0; k < k1; ++k) out.push_back(kth_eigenvalue(d, e, k, lo, hi));
  return out;
}

std::vector<double> eigenvector(const std::vector<double>& d, const std::vector<double>& e,
                                double lambda) {
  const std::size_t n = d.size();
  // Tridiagonal LU with partial pivoting of (T - lambda I); the factor has
  // two superdiagonals once rows are swapped.
  std::vector<double> du(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
  std::vector<int> perm(n, 0);
  for (std::size_t i = 0; i < n; ++i) du[i] = d[i] - lambda;
  std::vector<double> a(du), b(n, 0.0), c(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) { b[i] = e[i]; c[i] = e[i]; }

  // factorize in place: a = diag, b = super, c = sub (of the working matrix)
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(c[i]) > std::abs(a[i])) {
      perm[i] = 1;
      std::swap(a[i], c[i]);
      double t = b[i];
      b[i] = a[i + 1];
      a[i + 1] = t;
      u2[i] = b[i + 1];
      b[i + 1] = 0.0;
    } else {
      perm[i] = 0;
      u2[i] = 0.0;
    }
    if (a[i] == 0.0) a[i] = 1e-300;
    double m = c[i] / a[i];
    l[i] = m;
    a[i + 1] -= m * b[i];
    if (u2[i] != 0.0) b[i + 1] -= m * u2[i];
  }
  if (a[n - 1] == 0.0) a[n - 1] = 1e-300;

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = unif(rng);

  auto solve = [&](std::vector<double>& rhs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (perm[i]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= l[i] * rhs[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = rhs[ii];
      if (ii + 1 < n) s -= b[ii] * rhs[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * rhs[ii + 2];
      rhs[ii] = s / a[ii];
    }
  };

  for (int iter = 0; iter < 4; ++iter) {
    solve(v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalError("inverse iteration produced a zero vector");
    for (auto& x : v) x /= norm;
  }
  return v;
}

GaussRule gauss_rule(const std::vector<double>& d, const std::vector<double>& e) {
  GaussRule rule;
  rule.nodes = eigenvalues(d, e);
  rule.weights.resize(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    auto v = eigenvector(d, e, rule.nodes[k]);
    rule.weights[k] = v[0] * v[0];
  }
  return rule;
}

} // namespace fingap::tridiag
