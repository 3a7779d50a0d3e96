// Test-only oracles, independent of the library's computation paths.
#ifndef QBS_TESTS_ORACLES_HPP
#define QBS_TESTS_ORACLES_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qbs/core.hpp"
#include "qbs/quadrature.hpp"

namespace qbs::testing {

/// Random lossless splitter: |t| = cos(tau), |r| = sin(tau), phases differing
/// by +/- pi/2 so t r* + r t* = 0.
inline BeamSplitter random_splitter(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tau = 0.5 * std::numbers::pi * u(rng);
  const double d1 = 2.0 * std::numbers::pi * u(rng);
  const double d2 = d1 + (u(rng) < 0.5 ? 0.5 : -0.5) * std::numbers::pi;
  return BeamSplitter(std::polar(std::cos(tau), d1), std::polar(std::sin(tau), d2));
}

/// Brute-force beam-splitter output for |m>|n>: expands the creation-operator
/// polynomial by repeated convolution, no binomial coefficients involved.
inline TwoModeFock polynomial_bs_oracle(int m, int n, const BeamSplitter& bs) {
  const int total = m + n;
  // coeff[j][k] multiplies a_out†^j b_out†^k
  std::vector<std::vector<cplx>> coeff(
      static_cast<std::size_t>(total) + 1,
      std::vector<cplx>(static_cast<std::size_t>(total) + 1, cplx(0.0, 0.0)));
  coeff[0][0] = 1.0;
  auto multiply = [&](cplx ca, cplx cb) {  // times (ca a† + cb b†)
    std::vector<std::vector<cplx>> next(
        static_cast<std::size_t>(total) + 1,
        std::vector<cplx>(static_cast<std::size_t>(total) + 1, cplx(0.0, 0.0)));
    for (int j = 0; j < total; ++j)
      for (int k = 0; k < total; ++k) {
        const cplx c = coeff[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (c == cplx(0.0, 0.0)) continue;
        next[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k)] += c * ca;
        next[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + 1)] += c * cb;
      }
    coeff = std::move(next);
  };
  for (int i = 0; i < m; ++i) multiply(bs.t(), bs.r());
  for (int i = 0; i < n; ++i) multiply(bs.r(), bs.t());

  auto factorial = [](int v) {
    double f = 1.0;
    for (int i = 2; i <= v; ++i) f *= i;
    return f;
  };
  TwoModeFock out(total);
  for (int p = 0; p <= total; ++p)
    for (int q = 0; q <= total - p; ++q)
      out(p, q) = coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] *
                  std::sqrt(factorial(p) * factorial(q)) /
                  std::sqrt(factorial(m) * factorial(n));
  return out;
}

/// Closed-form Gaussian moment: integral of x^d e^{-x^2} dx over the real
/// line = (d-1)!! sqrt(pi) / 2^{d/2} for even d, 0 for odd d.
inline double gaussian_moment(int d) {
  if (d % 2 == 1) return 0.0;
  double v = std::sqrt(std::numbers::pi);
  for (int k = 1; k < d; k += 2) v *= 0.5 * k;  // (d-1)!! / 2^{d/2}
  return v;
}

/// Applies a Hermite rule to x^d, summing mirror-node pairs first so that odd
/// integrands cancel exactly.
inline double apply_hermite_monomial(const HermiteRule& rule, int d) {
  const int N = rule.node_count;
  double sum = 0.0;
  for (int i = 0; i < N / 2; ++i) {
    const int j = N - 1 - i;
    sum += rule.weights[static_cast<std::size_t>(i)] *
               std::pow(rule.nodes[static_cast<std::size_t>(i)], d) +
           rule.weights[static_cast<std::size_t>(j)] *
               std::pow(rule.nodes[static_cast<std::size_t>(j)], d);
  }
  if (N % 2 == 1 && d == 0) sum += rule.weights[static_cast<std::size_t>(N / 2)];
  return sum;
}

}  // namespace qbs::testing

#endif
