#include "qbs/fock_engine.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace qbs {

namespace {

constexpr int kMaxTotalPhotons = 170;  // factorials overflow doubles at 171!

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void check_tail(double norm2, double tail_tol, const char* what) {
  if (1.0 - norm2 > tail_tol)
    throw TruncationError(std::string(what) + ": norm deficit " +
                          std::to_string(1.0 - norm2) + " exceeds tail tolerance");
}

Eigen::MatrixXcd to_matrix(const TwoModeFock& state) {
  const int d = state.dim();
  Eigen::MatrixXcd mat(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) mat(m, n) = state(m, n);
  return mat;
}

}  // namespace

SqueezeParams SqueezeParams::from_strength(double s, double phi) {
  if (s < 0.0) throw std::invalid_argument("SqueezeParams: s must be >= 0");
  SqueezeParams p;
  p.s = s;
  p.phi = phi;
  p.gamma = s > 0.0 ? 1.0 / std::sqrt(std::expm1(2.0 * s))
                    : std::numeric_limits<double>::infinity();
  return p;
}

FockVector coherent_fock(cplx alpha, int n_max, double tail_tol) {
  FockVector out(n_max);
  const double a2 = std::norm(alpha);
  if (a2 == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double log_abs = 0.5 * std::log(a2);
  const double arg = std::arg(alpha);
  for (int n = 0; n <= n_max; ++n) {
    const double mag = std::exp(-0.5 * a2 + n * log_abs - 0.5 * log_factorial(n));
    out[n] = std::polar(mag, n * arg);
  }
  check_tail(out.norm2(), tail_tol, "coherent_fock");
  return out;
}

FockVector squeezed_vacuum_fock(const SqueezeParams& p, int n_max, double tail_tol) {
  FockVector out(n_max);
  if (p.s == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double th = std::tanh(p.s);
  const double log_sech = -std::log(std::cosh(p.s));
  for (int n = 0; 2 * n <= n_max; ++n) {
    const double mag = std::exp(0.5 * log_sech + 0.5 * log_factorial(2 * n) -
                                log_factorial(n) + n * std::log(th / 2.0));
    // (-e^{i phi})^n
    out[2 * n] = std::polar(mag, n * (p.phi + std::numbers::pi));
  }
  check_tail(out.norm2(), tail_tol, "squeezed_vacuum_fock");
  return out;
}

FockVector squeezed_vacuum_fock(double s, double phi, int n_max, double tail_tol) {
  return squeezed_vacuum_fock(SqueezeParams::from_strength(s, phi), n_max, tail_tol);
}

TwoModeFock bs_output_of_basis(int m, int n, const BeamSplitter& bs) {
  if (m < 0 || n < 0) throw std::invalid_argument("bs_output_of_basis: negative index");
  if (m + n > kMaxTotalPhotons)
    throw std::invalid_argument("bs_output_of_basis: m + n exceeds 170");
  const int total = m + n;
  TwoModeFock out(total);

  std::vector<cplx> t_pow(static_cast<std::size_t>(total) + 1);
  std::vector<cplx> r_pow(static_cast<std::size_t>(total) + 1);
  t_pow[0] = r_pow[0] = 1.0;
  for (int k = 1; k <= total; ++k) {
    t_pow[static_cast<std::size_t>(k)] = t_pow[static_cast<std::size_t>(k - 1)] * bs.t();
    r_pow[static_cast<std::size_t>(k)] = r_pow[static_cast<std::size_t>(k - 1)] * bs.r();
  }

  const double log_norm = 0.5 * (log_factorial(m) + log_factorial(n));
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= n; ++k) {
      const int p = j + (n - k);  // a† power
      const int q = (m - j) + k;  // b† power
      const double log_coeff = log_factorial(m) - log_factorial(j) - log_factorial(m - j) +
                               log_factorial(n) - log_factorial(k) - log_factorial(n - k) +
                               0.5 * (log_factorial(p) + log_factorial(q)) - log_norm;
      out(p, q) += std::exp(log_coeff) * t_pow[static_cast<std::size_t>(j + k)] *
                   r_pow[static_cast<std::size_t>(m - j + n - k)];
    }
  }
  return out;
}

TwoModeFock bs_transform(const TwoModeFock& state, const BeamSplitter& bs,
                         double tail_tol) {
  const int n_max = state.n_max();
  TwoModeFock out(n_max);
  double dropped = 0.0;
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const cplx amp = state(m, n);
      if (amp == cplx(0.0, 0.0)) continue;
      if (m + n > n_max) {
        dropped += std::norm(amp);
        continue;
      }
      const TwoModeFock basis = bs_output_of_basis(m, n, bs);
      for (int p = 0; p <= m + n; ++p) out(p, m + n - p) += amp * basis(p, m + n - p);
    }
  }
  if (dropped > tail_tol)
    throw TruncationError("bs_transform: dropped photon-number mass " +
                          std::to_string(dropped) + " exceeds tail tolerance");
  return out;
}

TwoModeFock tensor_product(const FockVector& a, const FockVector& b) {
  if (a.n_max() != b.n_max())
    throw std::invalid_argument("tensor_product: mismatched n_max");
  TwoModeFock out(a.n_max());
  for (int m = 0; m <= a.n_max(); ++m)
    for (int n = 0; n <= b.n_max(); ++n) out(m, n) = a[m] * b[n];
  return out;
}

TwoModeFock two_mode_squeezed_fock(double s, double phase, int n_max, double tail_tol) {
  if (s < 0.0) throw std::invalid_argument("two_mode_squeezed_fock: s must be >= 0");
  TwoModeFock out(n_max);
  if (s == 0.0) {
    out(0, 0) = 1.0;
    return out;
  }
  const double sech = 1.0 / std::cosh(s);
  const double th = std::tanh(s);
  for (int n = 0; n <= n_max; ++n)
    out(n, n) = sech * std::polar(std::pow(th, n), n * (phase + std::numbers::pi));
  check_tail(out.norm2(), tail_tol, "two_mode_squeezed_fock");
  return out;
}

double hom_coincidence_probability(const BeamSplitter& bs) {
  return std::norm(bs.t() * bs.t() + bs.r() * bs.r());
}

TwoModeFock squeezed_inputs_output(double s, double rel_phase, const BeamSplitter& bs,
                                   int n_max, double tail_tol) {
  // Work at twice the requested cutoff so that every entry of the returned
  // n_max box receives all of its photon-number-block contributions, then
  // project. The result is the box projection of the exact output, matching
  // the Janszky synthesis support. Photon-number conservation keeps the
  // internal truncation out of the box, so only the box deficit is guarded.
  const int n_work = std::min(2 * n_max, 170);
  const FockVector in_a = squeezed_vacuum_fock(s, 0.0, n_work, 1.0);
  const FockVector in_b = squeezed_vacuum_fock(s, rel_phase, n_work, 1.0);
  const TwoModeFock full = bs_transform(tensor_product(in_a, in_b), bs, 1.0);
  TwoModeFock out(n_max);
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n) out(m, n) = full(m, n);
  const double deficit = 1.0 - out.norm2();
  if (deficit > tail_tol) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "squeezed_inputs_output: %.3e of the output norm lies beyond n_max = %d",
                  deficit, n_max);
    throw TruncationError(msg);
  }
  return out;
}

std::vector<double> schmidt_singular_values(const TwoModeFock& state) {
  const double n2 = state.norm2();
  if (n2 < 1e-28) throw ZeroStateError("schmidt_singular_values: zero state");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_matrix(state));
  Eigen::VectorXd sv = svd.singularValues() / std::sqrt(n2);
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::pair<FockVector, FockVector> dominant_schmidt_vectors(const TwoModeFock& state) {
  const double n2 = state.norm2();
  if (n2 < 1e-28) throw ZeroStateError("dominant_schmidt_vectors: zero state");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_matrix(state),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int d = state.dim();
  FockVector a(state.n_max()), b(state.n_max());
  // M = U S V*, so M_{mn} = sigma U_{m0} conj(V_{n0}) for a rank-1 state.
  for (int i = 0; i < d; ++i) {
    a[i] = svd.matrixU()(i, 0);
    b[i] = std::conj(svd.matrixV()(i, 0));
  }
  return {a, b};
}

double fidelity(const TwoModeFock& a, const TwoModeFock& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("fidelity: mismatched n_max");
  const double na = a.norm2(), nb = b.norm2();
  if (na < 1e-28 || nb < 1e-28) throw ZeroStateError("fidelity: zero state");
  cplx overlap = 0.0;
  for (int m = 0; m <= a.n_max(); ++m)
    for (int n = 0; n <= a.n_max(); ++n) overlap += std::conj(a(m, n)) * b(m, n);
  return std::norm(overlap) / (na * nb);
}

double fidelity(const FockVector& a, const FockVector& b) {
  if (a.n_max() != b.n_max()) throw std::invalid_argument("fidelity: mismatched n_max");
  const double na = a.norm2(), nb = b.norm2();
  if (na < 1e-28 || nb < 1e-28) throw ZeroStateError("fidelity: zero state");
  cplx overlap = 0.0;
  for (int n = 0; n <= a.n_max(); ++n) overlap += std::conj(a[n]) * b[n];
  return std::norm(overlap) / (na * nb);
}

}  // namespace qbs
