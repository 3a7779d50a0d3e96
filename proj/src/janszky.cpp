#include "qbs/janszky.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qbs/quadrature.hpp"

namespace qbs {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Streaming pairwise (balanced-tree) reduction over equal-length complex
// vectors. Adjacent inputs combine at the first level, so contributions that
// are exact negations of each other cancel to exactly zero.
class PairwiseAccumulator {
 public:
  void add(std::vector<cplx> v) {
    int level = 0;
    while (!stack_.empty() && stack_.back().first == level) {
      const std::vector<cplx>& top = stack_.back().second;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += top[i];
      stack_.pop_back();
      ++level;
    }
    stack_.emplace_back(level, std::move(v));
  }

  std::vector<cplx> result(std::size_t size) {
    std::vector<cplx> out(size, cplx(0.0, 0.0));
    for (const auto& [level, v] : stack_)
      for (std::size_t i = 0; i < size; ++i) out[i] += v[i];
    return out;
  }

 private:
  std::vector<std::pair<int, std::vector<cplx>>> stack_;
};

// <n|alpha> for n = 0..n_max via the recurrence c_n = c_{n-1} alpha / sqrt(n).
// Sign-symmetric in alpha at the bit level, which the parity cancellation
// relies on.
void coherent_column(cplx alpha, int n_max, std::vector<cplx>& out) {
  out.resize(static_cast<std::size_t>(n_max) + 1);
  cplx c = std::exp(cplx(-0.5 * std::norm(alpha), 0.0));
  out[0] = c;
  for (int n = 1; n <= n_max; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    out[static_cast<std::size_t>(n)] = c;
  }
}

}  // namespace

double default_circle_radius(int n) { return std::sqrt(static_cast<double>(std::max(n, 1))); }

LineSuperposition circle_number_superposition(int n, double radius, int N,
                                              double alias_tol) {
  if (n < 0) throw std::invalid_argument("circle_number_superposition: n must be >= 0");
  if (!(radius > 0.0))
    throw std::invalid_argument("circle_number_superposition: radius must be > 0");
  const CircleRule rule = circle_rule(N);

  // Amplitude of the first aliased component |n + N>.
  const double alias = std::exp(0.5 * log_factorial(n) + N * std::log(radius) -
                                0.5 * log_factorial(n + N));
  if (alias > alias_tol) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "circle_number_superposition: alias amplitude %.3e at photon number %d; "
                  "increase N or shrink radius",
                  alias, n + N);
    throw AliasingError(msg);
  }

  // (2pi/N) e^{r^2/2} sqrt(n!) / (2pi r^n) collapses to e^{r^2/2} sqrt(n!) / (N r^n).
  const double log_pref = 0.5 * radius * radius + 0.5 * log_factorial(n) -
                          n * std::log(radius) - std::log(static_cast<double>(N));
  const double pref = std::exp(log_pref);

  LineSuperposition sup;
  sup.path = CirclePath{radius, n};
  sup.atoms.reserve(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    const double theta = rule.angles[static_cast<std::size_t>(k)];
    sup.atoms.push_back({std::polar(pref, -n * theta), std::polar(radius, theta)});
  }
  return sup;
}

LineSuperposition line_squeezed_superposition(const SqueezeParams& p, int N) {
  if (!(p.s > 0.0))
    throw std::invalid_argument(
        "line_squeezed_superposition: s must be > 0 (use an explicit vacuum otherwise)");
  const HermiteRule rule = hermite_rule(N);

  // The integrand carries the path Gaussian e^{-gamma^2 x^2} and the coherent
  // states' own e^{-x^2/2}. Absorb the combined Gaussian into the quadrature
  // (width gamma_t) and put e^{+x^2/2} into the atom weights to cancel the
  // factor re-introduced by the Fock expansion: what remains is a polynomial
  // in x, integrated exactly for photon numbers <= 2N - 1.
  const double g2 = p.gamma * p.gamma;
  const double gamma_t = std::sqrt(g2 + 0.5);
  const ScaledHermite scaled = scaled_hermite(rule, gamma_t);

  const double pref = std::pow(std::numbers::pi, -0.5) * std::sqrt(p.gamma) *
                      std::pow(g2 + 1.0, 0.25);
  const cplx direction = cplx(0.0, 1.0) * std::polar(1.0, 0.5 * p.phi);

  LineSuperposition sup;
  sup.path = LinePath{p.gamma, 0.5 * p.phi};
  sup.atoms.reserve(static_cast<std::size_t>(N));
  // Emit +/- node pairs adjacently (largest magnitude first, center node
  // last) so the pairwise reduction cancels odd amplitudes exactly.
  for (int i = 0; i < N / 2; ++i) {
    const double x = scaled.nodes[static_cast<std::size_t>(N - 1 - i)];
    const double w = pref * scaled.weights[static_cast<std::size_t>(N - 1 - i)] *
                     std::exp(0.5 * x * x);
    const cplx label = x * direction;
    sup.atoms.push_back({cplx(w, 0.0), label});
    sup.atoms.push_back({cplx(w, 0.0), -label});
  }
  if (N % 2 == 1)
    sup.atoms.push_back(
        {cplx(pref * scaled.weights[static_cast<std::size_t>(N / 2)], 0.0), cplx(0.0, 0.0)});
  return sup;
}

FockVector synthesize(const LineSuperposition& sup, int n_max) {
  if (n_max < 0) throw std::invalid_argument("synthesize: n_max must be >= 0");
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  PairwiseAccumulator acc;
  std::vector<cplx> column;
  for (const CoherentAtom& atom : sup.atoms) {
    coherent_column(atom.label, n_max, column);
    std::vector<cplx> contrib(dim);
    for (std::size_t i = 0; i < dim; ++i) contrib[i] = atom.weight * column[i];
    acc.add(std::move(contrib));
  }
  std::vector<cplx> amps = acc.result(dim);
  FockVector out(n_max);
  for (int i = 0; i <= n_max; ++i) out[i] = amps[static_cast<std::size_t>(i)];
  return out;
}

TwoModeSuperposition tensor(const LineSuperposition& a, const LineSuperposition& b,
                            std::size_t atom_budget) {
  const std::size_t count = a.atoms.size() * b.atoms.size();
  if (count > atom_budget)
    throw AtomBudgetError("tensor: " + std::to_string(count) + " atoms exceed budget " +
                          std::to_string(atom_budget));
  TwoModeSuperposition out;
  out.atoms.reserve(count);
  for (const CoherentAtom& pa : a.atoms)
    for (const CoherentAtom& pb : b.atoms)
      out.atoms.push_back({pa.weight * pb.weight, pa.label, pb.label});
  return out;
}

TwoModeSuperposition bs_transform_atoms(const TwoModeSuperposition& sup,
                                        const BeamSplitter& bs) {
  TwoModeSuperposition out;
  out.atoms.reserve(sup.atoms.size());
  for (const TwoModeAtom& atom : sup.atoms)
    out.atoms.push_back({atom.weight, bs.t() * atom.label_a + bs.r() * atom.label_b,
                         bs.t() * atom.label_b + bs.r() * atom.label_a});
  return out;
}

TwoModeFock synthesize_two_mode(const TwoModeSuperposition& sup, int n_max) {
  if (n_max < 0) throw std::invalid_argument("synthesize_two_mode: n_max must be >= 0");
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  PairwiseAccumulator acc;
  std::vector<cplx> col_a, col_b;
  for (const TwoModeAtom& atom : sup.atoms) {
    coherent_column(atom.label_a, n_max, col_a);
    coherent_column(atom.label_b, n_max, col_b);
    std::vector<cplx> contrib(dim * dim);
    for (std::size_t m = 0; m < dim; ++m) {
      const cplx wa = atom.weight * col_a[m];
      for (std::size_t n = 0; n < dim; ++n) contrib[m * dim + n] = wa * col_b[n];
    }
    acc.add(std::move(contrib));
  }
  std::vector<cplx> amps = acc.result(dim * dim);
  TwoModeFock out(n_max);
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      out(m, n) = amps[static_cast<std::size_t>(m) * dim + static_cast<std::size_t>(n)];
  return out;
}

TwoModeFock interfere_squeezed(double s, double rel_phase, const BeamSplitter& bs,
                               int N, int n_max) {
  if (s == 0.0) {
    TwoModeFock out(n_max);
    out(0, 0) = 1.0;
    return out;
  }
  const LineSuperposition line_a =
      line_squeezed_superposition(SqueezeParams::from_strength(s, 0.0), N);
  const LineSuperposition line_b =
      line_squeezed_superposition(SqueezeParams::from_strength(s, rel_phase), N);
  return synthesize_two_mode(bs_transform_atoms(tensor(line_a, line_b), bs), n_max);
}

}  // namespace qbs
