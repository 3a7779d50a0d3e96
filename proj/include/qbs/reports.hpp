#ifndef QBS_REPORTS_HPP
#define QBS_REPORTS_HPP

#include <array>
#include <string>
#include <vector>

#include "qbs/core.hpp"
#include "qbs/fock_engine.hpp"
#include "qbs/janszky.hpp"

namespace qbs::reports {

inline constexpr double kEngineAgreementTol = 1e-8;

/// One row per |t|^2 grid point; probabilities from both engines plus the
/// largest per-row engine discrepancy.
struct HomScanResult {
  struct Row {
    double t2;
    double p_coincidence_fock, p_bunch_a_fock, p_bunch_b_fock;
    double p_coincidence_janszky, p_bunch_a_janszky, p_bunch_b_janszky;
    double engine_diff;
  };
  std::vector<Row> rows;
  double max_engine_diff = 0.0;
  bool ok() const { return max_engine_diff <= kEngineAgreementTol; }
};

/// Scan |t|^2 over [0, 1] inclusive with r = i sqrt(1 - |t|^2).
HomScanResult hom_scan(int points, int circle_nodes);

struct SqueezeInterfereResult {
  struct Row {
    double phi;
    double largest_sv;
    double entropy;  // -sum sigma^2 ln sigma^2
    double engine_fidelity;
  };
  std::vector<Row> rows;
  double min_fidelity = 1.0;
  bool ok() const { return min_fidelity >= 1.0 - kEngineAgreementTol; }
};

/// phi grid over [0, 2pi] inclusive.
SqueezeInterfereResult squeeze_interfere(double s, int points, const BeamSplitter& bs,
                                         int hermite_nodes, int n_max,
                                         double tail_tol = kDefaultTailTol);

struct CompareResult {
  TwoModeFock fock;
  TwoModeFock janszky;
  double max_diff = 0.0;
  double tolerance = kEngineAgreementTol;
  bool ok() const { return max_diff <= tolerance; }
};

CompareResult compare_number(int m, int n, const BeamSplitter& bs, int circle_nodes);
CompareResult compare_coherent(cplx alpha, cplx beta, const BeamSplitter& bs, int n_max);
CompareResult compare_squeezed(double s, double rel_phase, const BeamSplitter& bs,
                               int hermite_nodes, int n_max,
                               double tail_tol = kDefaultTailTol);

struct SynthCheckResult {
  struct Row {
    std::string kind;      // "number" or "squeezed"
    double param;          // n or s
    double path_param;     // circle radius or line phase
    double max_abs_error;  // vs the exact Fock expansion
  };
  std::vector<Row> rows;
  double worst = 0.0;
  double tolerance = 1e-8;
  bool ok() const { return worst <= tolerance; }
};

/// Fixed battery: number states n = 0..6 at radii {0.5, sqrt(max(n,1)), 2}
/// and squeezed lines s in {0.1, 0.5, 1.0, 1.5} at the given phase.
SynthCheckResult synth_check(int circle_nodes, int hermite_nodes, int n_max, double phi);

// Serialization. JSON documents follow schemas/qbs-output.schema.json; CSV
// uses ',' delimiter, '.' decimal point, LF line endings, 17 significant
// digits.
std::string to_json(const HomScanResult&, int points, int circle_nodes);
std::string to_csv(const HomScanResult&);
std::string to_json(const SqueezeInterfereResult&, double s, int points, int hermite_nodes,
                    int n_max);
std::string to_csv(const SqueezeInterfereResult&);
std::string to_json(const CompareResult&, const std::string& input_desc);
std::string to_csv(const CompareResult&);
std::string to_json(const SynthCheckResult&);
std::string to_csv(const SynthCheckResult&);

}  // namespace qbs::reports

#endif
