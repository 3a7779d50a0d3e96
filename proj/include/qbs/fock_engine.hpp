#ifndef QBS_FOCK_ENGINE_HPP
#define QBS_FOCK_ENGINE_HPP

#include <utility>
#include <vector>

#include "qbs/core.hpp"

namespace qbs {

/// Squeezing parameters for zeta = s * exp(i phi), together with the width
/// gamma of the equivalent Gaussian line superposition:
///   gamma^2 = 1 / (e^{2s} - 1),   tanh s = 1 / (2 (gamma^2 + 1/2)).
struct SqueezeParams {
  double s = 0.0;
  double phi = 0.0;
  double gamma = 0.0;

  static SqueezeParams from_strength(double s, double phi);
};

/// Coherent-state amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
/// Throws TruncationError if the norm deficit exceeds tail_tol.
FockVector coherent_fock(cplx alpha, int n_max, double tail_tol = kDefaultTailTol);

/// Squeezed vacuum: amps[2n] = sqrt(sech s) sqrt((2n)!)/n! (-e^{i phi} tanh(s)/2)^n,
/// odd amplitudes exactly zero.
FockVector squeezed_vacuum_fock(const SqueezeParams& p, int n_max,
                                double tail_tol = kDefaultTailTol);
FockVector squeezed_vacuum_fock(double s, double phi, int n_max,
                                double tail_tol = kDefaultTailTol);

/// Output of |m>_a |n>_b through the splitter, by double binomial expansion of
/// (t a† + r b†)^m (t b† + r a†)^n / sqrt(m! n!). Output n_max = m + n.
TwoModeFock bs_output_of_basis(int m, int n, const BeamSplitter& bs);

/// Linear extension of bs_output_of_basis over all basis amplitudes of state.
/// Photon-number blocks with m + n > n_max are dropped; throws TruncationError
/// if the dropped mass exceeds tail_tol.
TwoModeFock bs_transform(const TwoModeFock& state, const BeamSplitter& bs,
                         double tail_tol = kDefaultTailTol);

/// |psi>_a x |chi>_b as a TwoModeFock (requires equal n_max).
TwoModeFock tensor_product(const FockVector& a, const FockVector& b);

/// Two-mode squeezed vacuum: amps[(n,n)] = sech(s) (-e^{i phase} tanh s)^n.
TwoModeFock two_mode_squeezed_fock(double s, double phase, int n_max,
                                   double tail_tol = kDefaultTailTol);

/// |t^2 + r^2|^2 = (|t|^2 - |r|^2)^2 for a unitary splitter.
double hom_coincidence_probability(const BeamSplitter& bs);

/// Two equal-strength squeezed vacuum inputs, zeta_a = s and
/// zeta_b = s e^{i rel_phase}, scattered through bs. Built from
/// squeezed_vacuum_fock products and bs_transform at an internal cutoff of
/// 2 n_max, then projected, so every returned amplitude is exact; throws
/// TruncationError if more than tail_tol of the output norm falls outside the
/// n_max box. At a balanced splitter rel_phase = 0 gives the two-mode
/// squeezed state and rel_phase = pi a product of two single-mode squeezed
/// states.
TwoModeFock squeezed_inputs_output(double s, double rel_phase, const BeamSplitter& bs,
                                   int n_max, double tail_tol = kDefaultTailTol);

/// Nonincreasing Schmidt singular values of the normalized amplitude matrix.
std::vector<double> schmidt_singular_values(const TwoModeFock& state);

/// Schmidt vectors of the dominant singular value: the marginal states of a
/// (near-)product state. Returns {marginal_a, marginal_b}.
std::pair<FockVector, FockVector> dominant_schmidt_vectors(const TwoModeFock& state);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const TwoModeFock& a, const TwoModeFock& b);
double fidelity(const FockVector& a, const FockVector& b);

}  // namespace qbs

#endif
