#ifndef QBS_CORE_HPP
#define QBS_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbs {

using cplx = std::complex<double>;

// Error taxonomy. Everything derives from std::runtime_error so callers can
// catch broadly; the CLI maps these onto exit codes.
struct NonUnitaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateGammaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AliasingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AtomBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultUnitarityTol = 1e-12;
inline constexpr double kDefaultTailTol = 1e-10;

/// Lossless symmetric beam splitter with transmission t and reflection r.
/// Construction validates |t|^2 + |r|^2 = 1 and t r* + r t* = 0 within tol.
class BeamSplitter {
 public:
  BeamSplitter(cplx t, cplx r, double tol = kDefaultUnitarityTol);

  cplx t() const { return t_; }
  cplx r() const { return r_; }
  double tol() const { return tol_; }

  /// Inverse splitter (conj(t), conj(r)); an involution.
  BeamSplitter inverse() const;

  /// t = 1/sqrt(2), r = i/sqrt(2).
  static BeamSplitter balanced(double tol = kDefaultUnitarityTol);

 private:
  cplx t_, r_;
  double tol_;
};

/// Single-mode state amplitudes over the truncated number basis 0..n_max.
/// Raw amplitudes: no normalization on construction, so truncation loss
/// stays observable.
class FockVector {
 public:
  explicit FockVector(int n_max);
  explicit FockVector(std::vector<cplx> amps);

  int n_max() const { return static_cast<int>(amps_.size()) - 1; }
  int size() const { return static_cast<int>(amps_.size()); }
  cplx& operator[](int n) { return amps_[static_cast<std::size_t>(n)]; }
  const cplx& operator[](int n) const { return amps_[static_cast<std::size_t>(n)]; }

  double norm2() const;
  FockVector renormalized() const;

 private:
  std::vector<cplx> amps_;
};

/// Two-mode amplitudes, (m, n) indexing |m>_a |n>_b, both modes truncated
/// at the same n_max.
class TwoModeFock {
 public:
  explicit TwoModeFock(int n_max);

  int n_max() const { return n_max_; }
  int dim() const { return n_max_ + 1; }
  cplx& operator()(int m, int n) { return amps_[idx(m, n)]; }
  const cplx& operator()(int m, int n) const { return amps_[idx(m, n)]; }

  double norm2() const;
  TwoModeFock renormalized() const;
  TwoModeFock transposed() const;

  const std::vector<cplx>& flat() const { return amps_; }

 private:
  std::size_t idx(int m, int n) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(n_max_ + 1) +
           static_cast<std::size_t>(n);
  }
  int n_max_;
  std::vector<cplx> amps_;
};

/// Largest |difference| between matching amplitudes.
double max_abs_diff(const TwoModeFock& a, const TwoModeFock& b);

}  // namespace qbs

#endif
