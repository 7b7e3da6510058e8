#pragma once

#include <vector>

namespace fingap::tridiag {

// Symmetric tridiagonal matrices: diagonal d[0..n), off-diagonal e[0..n-1)
// coupling entries i and i+1. Positive off-diagonals make all eigenvalues
// simple, which the inverse iteration below relies on.

// Number of eigenvalues strictly below x (Sturm sequence count).
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x);

// All eigenvalues, ascending, via bisection on the Sturm count.
std::vector<double> eigenvalues(const std::vector<double>& d, const std::vector<double>& e);

// Eigenvalues in (lo, hi], ascending.
std::vector<double> eigenvalues_in(const std::vector<double>& d, const std::vector<double>& e,
                                   double lo, double hi);

// Normalized eigenvector for an isolated eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const std::vector<double>& d, const std::vector<double>& e,
                                double lambda);

struct GaussRule {
  std::vector<double> nodes;    // eigenvalues, ascending
  std::vector<double> weights;  // squared first eigenvector components
};

// Spectral decomposition data of the truncation: nodes and the squared
// first components of the normalized eigenvectors (they sum to one).
GaussRule gauss_rule(const std::vector<double>& d, const std::vector<double>& e);

} // namespace fingap::tridiag
