#ifndef QBS_JANSZKY_HPP
#define QBS_JANSZKY_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "qbs/core.hpp"
#include "qbs/fock_engine.hpp"

namespace qbs {

/// One quadrature node of a coherent-state path integral: the weight carries
/// all prefactors and the quadrature weight, the label is the coherent
/// amplitude.
struct CoherentAtom {
  cplx weight;
  cplx label;
};

struct CirclePath {
  double radius = 0.0;
  int n = 0;
};
struct LinePath {
  double gamma = 0.0;
  double half_angle = 0.0;
};
using PathMeta = std::variant<std::monostate, CirclePath, LinePath>;

struct LineSuperposition {
  std::vector<CoherentAtom> atoms;
  PathMeta path;
};

struct TwoModeAtom {
  cplx weight;
  cplx label_a;
  cplx label_b;
};

struct TwoModeSuperposition {
  std::vector<TwoModeAtom> atoms;
};

inline constexpr std::size_t kDefaultAtomBudget = 65536;
inline constexpr double kDefaultAliasTol = 1e-12;

/// Radius sqrt(max(n,1)) minimizes the dominant weight magnitude
/// e^{r^2/2} sqrt(n!) / r^n.
double default_circle_radius(int n);

/// Number state |n> as N uniformly weighted coherent atoms on a circle.
/// The first aliased component appears at photon number n + N with amplitude
/// sqrt(n!) radius^N / sqrt((n+N)!); throws AliasingError if that bound
/// exceeds alias_tol.
LineSuperposition circle_number_superposition(int n, double radius, int N,
                                              double alias_tol = kDefaultAliasTol);

/// Squeezed vacuum (zeta = s e^{i phi}) as Gauss-Hermite atoms on the straight
/// line i x e^{i phi/2}. The combined Gaussian e^{-(gamma^2 + 1/2) x^2} of the
/// path weight and the coherent states' own normalization is absorbed by the
/// quadrature, leaving an exactly polynomial integrand: amplitudes up to
/// photon number 2N - 1 are quadrature-exact. Atoms are emitted in adjacent
/// +/- pairs so odd synthesized amplitudes cancel exactly.
LineSuperposition line_squeezed_superposition(const SqueezeParams& p, int N);

/// amps[n] = sum_atoms weight * <n|label>, pairwise-reduced over atoms.
FockVector synthesize(const LineSuperposition& sup, int n_max);

/// All weight/label pairs of the two factors.
TwoModeSuperposition tensor(const LineSuperposition& a, const LineSuperposition& b,
                            std::size_t atom_budget = kDefaultAtomBudget);

/// Classical label transform (w, alpha, beta) -> (w, t alpha + r beta,
/// t beta + r alpha); weights and atom count unchanged.
TwoModeSuperposition bs_transform_atoms(const TwoModeSuperposition& sup,
                                        const BeamSplitter& bs);

/// amps[(m,n)] = sum_atoms weight * <m|label_a> <n|label_b>.
TwoModeFock synthesize_two_mode(const TwoModeSuperposition& sup, int n_max);

/// Full pipeline for two equal-strength squeezed inputs, zeta_a = s and
/// zeta_b = s e^{i rel_phase}: tensor the two line superpositions, transform
/// the labels, synthesize. Mirrors squeezed_inputs_output in the Fock engine.
TwoModeFock interfere_squeezed(double s, double rel_phase, const BeamSplitter& bs,
                               int N, int n_max);

}  // namespace qbs

#endif
