#ifndef QBS_QUADRATURE_HPP
#define QBS_QUADRATURE_HPP

#include <vector>

#include "qbs/core.hpp"

namespace qbs {

/// N equispaced angles on [0, 2pi) with uniform weight 2pi/N. Satisfies the
/// discrete orthogonality sum_k w e^{i j theta_k} = 2pi for j = 0 (mod N),
/// 0 otherwise.
struct CircleRule {
  int node_count = 0;
  std::vector<double> angles;
  double weight = 0.0;
};

CircleRule circle_rule(int N);

/// Gauss-Hermite rule for weight e^{-x^2}: exact for polynomials of degree
/// <= 2N - 1. Nodes and weights are symmetrized so they come in exact +/-
/// pairs (odd N includes 0).
struct HermiteRule {
  int node_count = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: nodes as eigenvalues of the symmetric tridiagonal recurrence
/// matrix, weights from the first eigenvector components.
HermiteRule hermite_rule(int N);

/// Nodes x_k/gamma and weights w_k/gamma: integrates polynomials of degree
/// <= 2N - 1 against e^{-gamma^2 x^2} exactly.
struct ScaledHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

ScaledHermite scaled_hermite(const HermiteRule& rule, double gamma);

}  // namespace qbs

#endif
