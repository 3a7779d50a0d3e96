#include "qbs/core.hpp"

#include <cmath>

namespace qbs {

namespace {

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

BeamSplitter::BeamSplitter(cplx t, cplx r, double tol) : t_(t), r_(r), tol_(tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("BeamSplitter: tol must be > 0");
  if (!is_finite(t) || !is_finite(r))
    throw std::invalid_argument("BeamSplitter: non-finite coefficient");
  const double energy = std::norm(t) + std::norm(r) - 1.0;
  const double phase = std::abs(t * std::conj(r) + r * std::conj(t));
  if (std::abs(energy) > tol)
    throw NonUnitaryError("BeamSplitter: |t|^2 + |r|^2 deviates from 1 by " +
                          std::to_string(std::abs(energy)));
  if (phase > tol)
    throw NonUnitaryError("BeamSplitter: |t r* + r t*| = " + std::to_string(phase));
}

BeamSplitter BeamSplitter::inverse() const {
  return BeamSplitter(std::conj(t_), std::conj(r_), tol_);
}

BeamSplitter BeamSplitter::balanced(double tol) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return BeamSplitter(cplx(inv_sqrt2, 0.0), cplx(0.0, inv_sqrt2), tol);
}

FockVector::FockVector(int n_max) {
  if (n_max < 0) throw std::invalid_argument("FockVector: n_max must be >= 0");
  amps_.assign(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
}

FockVector::FockVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw std::invalid_argument("FockVector: empty amplitude list");
  for (cplx z : amps_)
    if (!is_finite(z)) throw std::invalid_argument("FockVector: non-finite amplitude");
}

double FockVector::norm2() const {
  double s = 0.0;
  for (cplx z : amps_) s += std::norm(z);
  return s;
}

FockVector FockVector::renormalized() const {
  const double n2 = norm2();
  if (n2 < 1e-28) throw ZeroStateError("FockVector: norm too small to renormalize");
  FockVector out = *this;
  const double scale = 1.0 / std::sqrt(n2);
  for (int n = 0; n < out.size(); ++n) out[n] *= scale;
  return out;
}

TwoModeFock::TwoModeFock(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("TwoModeFock: n_max must be >= 0");
  amps_.assign(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 1),
               cplx(0.0, 0.0));
}

double TwoModeFock::norm2() const {
  double s = 0.0;
  for (cplx z : amps_) s += std::norm(z);
  return s;
}

TwoModeFock TwoModeFock::renormalized() const {
  const double n2 = norm2();
  if (n2 < 1e-28) throw ZeroStateError("TwoModeFock: norm too small to renormalize");
  TwoModeFock out = *this;
  const double scale = 1.0 / std::sqrt(n2);
  for (cplx& z : out.amps_) z *= scale;
  return out;
}

TwoModeFock TwoModeFock::transposed() const {
  TwoModeFock out(n_max_);
  for (int m = 0; m <= n_max_; ++m)
    for (int n = 0; n <= n_max_; ++n) out(n, m) = (*this)(m, n);
  return out;
}

double max_abs_diff(const TwoModeFock& a, const TwoModeFock& b) {
  if (a.n_max() != b.n_max())
    throw std::invalid_argument("max_abs_diff: mismatched n_max");
  double d = 0.0;
  for (int m = 0; m <= a.n_max(); ++m)
    for (int n = 0; n <= a.n_max(); ++n) d = std::max(d, std::abs(a(m, n) - b(m, n)));
  return d;
}

}  // namespace qbs
