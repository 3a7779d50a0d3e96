#include "qbs/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace qbs {

namespace {

// Orthonormal Hermite polynomials p_0..p_{N} at x (weight e^{-x^2});
// p' follows from p_n' = sqrt(2n) p_{n-1}. Returns {p_N, p_N', sum p_k^2 for
// k < N}; the inverse of that sum is the Gauss weight at a node.
struct HermiteEval {
  double p, dp, weight_sum;
};

HermiteEval orthonormal_hermite(int N, double x) {
  double prev = 0.0;
  double cur = 1.0 / std::pow(std::numbers::pi, 0.25);
  double sum = cur * cur;
  for (int k = 0; k < N; ++k) {
    const double next = x * cur * std::sqrt(2.0 / (k + 1)) - prev * std::sqrt(double(k) / (k + 1));
    prev = cur;
    cur = next;
    if (k + 1 < N) sum += cur * cur;
  }
  return {cur, std::sqrt(2.0 * N) * prev, sum};
}

}  // namespace

CircleRule circle_rule(int N) {
  if (N < 1) throw std::invalid_argument("circle_rule: N must be >= 1");
  CircleRule rule;
  rule.node_count = N;
  rule.weight = 2.0 * std::numbers::pi / N;
  rule.angles.resize(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k)
    rule.angles[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / N;
  return rule;
}

HermiteRule hermite_rule(int N) {
  if (N < 1 || N > 200) throw std::invalid_argument("hermite_rule: N must be in [1, 200]");
  HermiteRule rule;
  rule.node_count = N;
  rule.nodes.resize(static_cast<std::size_t>(N));
  rule.weights.resize(static_cast<std::size_t>(N));

  if (N == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = std::sqrt(std::numbers::pi);
    return rule;
  }

  // Hermite three-term recurrence (physicists' weight e^{-x^2}): the Jacobi
  // matrix has zero diagonal and off-diagonals sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd sub(N - 1);
  for (int k = 1; k < N; ++k) sub(k - 1) = std::sqrt(0.5 * k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("hermite_rule: tridiagonal eigen-solve failed");

  // Polish the eigenvalue nodes with Newton steps on the orthonormal Hermite
  // polynomial, then take weights from the Christoffel sum: eigenvalues alone
  // carry O(1e-10) relative error in the highest exact moments.
  for (int i = 0; i < N; ++i) {
    double x = es.eigenvalues()(i);
    for (int iter = 0; iter < 3; ++iter) {
      const HermiteEval e = orthonormal_hermite(N, x);
      const double step = e.p / e.dp;
      x -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 1.0 / orthonormal_hermite(N, x).weight_sum;
  }

  // Enforce exact +/- symmetry; node parity later cancels odd integrands
  // bit-for-bit.
  for (int i = 0; i < N / 2; ++i) {
    const int j = N - 1 - i;
    const double x = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                            rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(j)] = x;
    const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                            rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(j)] = w;
  }
  if (N % 2 == 1) rule.nodes[static_cast<std::size_t>(N / 2)] = 0.0;
  return rule;
}

ScaledHermite scaled_hermite(const HermiteRule& rule, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("scaled_hermite: gamma must be > 0");
  if (gamma < 1e-8)
    throw DegenerateGammaError("scaled_hermite: gamma below 1e-8, superposition width diverges");
  ScaledHermite out;
  out.nodes.resize(rule.nodes.size());
  out.weights.resize(rule.weights.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    out.nodes[k] = rule.nodes[k] / gamma;
    out.weights[k] = rule.weights[k] / gamma;
  }
  return out;
}

}  // namespace qbs
