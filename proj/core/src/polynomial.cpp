#include "fingap/polynomial.hpp"

#include <algorithm>

#include "fingap/errors.hpp"

namespace fingap {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Poly Poly::monomial(int degree, double coeff) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = coeff;
  return Poly(std::move(c));
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Poly::operator()(Complex x) const {
  Complex acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = k * c_[k];
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * (-1.0); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(double s) const {
  std::vector<double> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

namespace {

// Bisection + Newton polish on a bracketing interval with a sign change.
double refine_root(const Poly& p, const Poly& dp, double lo, double hi) {
  double flo = p(lo);
  if (flo == 0.0) return lo;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    double fx = p(x);
    if (fx == 0.0) break;
    if ((fx > 0) == (flo > 0)) lo = x; else hi = x;
    double d = dp(x);
    double xn = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) < 1e-16 * (1.0 + std::abs(xn))) { x = xn; break; }
    x = xn;
  }
  return x;
}

} // namespace

std::vector<double> Poly::real_roots(double lo, double hi) const {
  if (degree() < 1) return {};
  if (degree() == 1) {
    double r = -c_[0] / c_[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  // Critical points of p split [lo, hi] into monotone pieces.
  std::vector<double> knots = derivative().real_roots(lo, hi);
  knots.insert(knots.begin(), lo);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());

  Poly dp = derivative();
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double a = knots[i], b = knots[i + 1];
    if (b - a < 1e-15 * (1.0 + std::abs(a))) continue;
    double fa = (*this)(a), fb = (*this)(b);
    if (fa == 0.0 && (roots.empty() || std::abs(roots.back() - a) > 1e-13)) roots.push_back(a);
    if (fa * fb < 0.0) roots.push_back(refine_root(*this, dp, a, b));
  }
  double fhi = (*this)(hi);
  if (fhi == 0.0 && (roots.empty() || std::abs(roots.back() - hi) > 1e-13)) roots.push_back(hi);
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace fingap
