#include "qbs/reports.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qbs::reports {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json amplitude_table(const TwoModeFock& state) {
  json rows = json::array();
  for (int m = 0; m <= state.n_max(); ++m) {
    json row = json::array();
    for (int n = 0; n <= state.n_max(); ++n)
      row.push_back({state(m, n).real(), state(m, n).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

TwoModeFock janszky_number_output(int m, int n, const BeamSplitter& bs, int circle_nodes) {
  const LineSuperposition sup_a =
      circle_number_superposition(m, default_circle_radius(m), circle_nodes);
  const LineSuperposition sup_b =
      circle_number_superposition(n, default_circle_radius(n), circle_nodes);
  return synthesize_two_mode(bs_transform_atoms(tensor(sup_a, sup_b), bs), m + n);
}

}  // namespace

HomScanResult hom_scan(int points, int circle_nodes) {
  if (points < 2) throw std::invalid_argument("hom_scan: need at least 2 grid points");
  HomScanResult result;
  result.rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t2 = static_cast<double>(i) / (points - 1);
    const BeamSplitter bs(cplx(std::sqrt(t2), 0.0), cplx(0.0, std::sqrt(1.0 - t2)));

    const TwoModeFock fock = bs_output_of_basis(1, 1, bs);
    const TwoModeFock jans = janszky_number_output(1, 1, bs, circle_nodes);

    HomScanResult::Row row;
    row.t2 = t2;
    row.p_coincidence_fock = std::norm(fock(1, 1));
    row.p_bunch_a_fock = std::norm(fock(2, 0));
    row.p_bunch_b_fock = std::norm(fock(0, 2));
    row.p_coincidence_janszky = std::norm(jans(1, 1));
    row.p_bunch_a_janszky = std::norm(jans(2, 0));
    row.p_bunch_b_janszky = std::norm(jans(0, 2));
    row.engine_diff = std::max({std::abs(row.p_coincidence_fock - row.p_coincidence_janszky),
                                std::abs(row.p_bunch_a_fock - row.p_bunch_a_janszky),
                                std::abs(row.p_bunch_b_fock - row.p_bunch_b_janszky)});
    result.max_engine_diff = std::max(result.max_engine_diff, row.engine_diff);
    result.rows.push_back(row);
  }
  return result;
}

SqueezeInterfereResult squeeze_interfere(double s, int points, const BeamSplitter& bs,
                                         int hermite_nodes, int n_max, double tail_tol) {
  if (points < 2)
    throw std::invalid_argument("squeeze_interfere: need at least 2 grid points");
  SqueezeInterfereResult result;
  result.rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / (points - 1);
    const TwoModeFock fock = squeezed_inputs_output(s, phi, bs, n_max, tail_tol);
    const TwoModeFock jans = interfere_squeezed(s, phi, bs, hermite_nodes, n_max);
    const std::vector<double> sv = schmidt_singular_values(jans);

    SqueezeInterfereResult::Row row;
    row.phi = phi;
    row.largest_sv = sv.empty() ? 0.0 : sv.front();
    row.entropy = 0.0;
    for (double sigma : sv) {
      const double p = sigma * sigma;
      if (p > 1e-300) row.entropy -= p * std::log(p);
    }
    row.engine_fidelity = fidelity(fock, jans);
    result.min_fidelity = std::min(result.min_fidelity, row.engine_fidelity);
    result.rows.push_back(row);
  }
  return result;
}

CompareResult compare_number(int m, int n, const BeamSplitter& bs, int circle_nodes) {
  CompareResult result{bs_output_of_basis(m, n, bs),
                       janszky_number_output(m, n, bs, circle_nodes), 0.0};
  result.max_diff = max_abs_diff(result.fock, result.janszky);
  return result;
}

CompareResult compare_coherent(cplx alpha, cplx beta, const BeamSplitter& bs, int n_max) {
  const TwoModeFock input = tensor_product(coherent_fock(alpha, n_max),
                                           coherent_fock(beta, n_max));
  TwoModeSuperposition sup;
  sup.atoms.push_back({cplx(1.0, 0.0), alpha, beta});
  CompareResult result{bs_transform(input, bs),
                       synthesize_two_mode(bs_transform_atoms(sup, bs), n_max), 0.0};
  result.max_diff = max_abs_diff(result.fock, result.janszky);
  return result;
}

CompareResult compare_squeezed(double s, double rel_phase, const BeamSplitter& bs,
                               int hermite_nodes, int n_max, double tail_tol) {
  CompareResult result{squeezed_inputs_output(s, rel_phase, bs, n_max, tail_tol),
                       interfere_squeezed(s, rel_phase, bs, hermite_nodes, n_max), 0.0};
  result.max_diff = max_abs_diff(result.fock, result.janszky);
  return result;
}

SynthCheckResult synth_check(int circle_nodes, int hermite_nodes, int n_max, double phi) {
  SynthCheckResult result;
  for (int n = 0; n <= 6; ++n) {
    for (double radius : {0.5, default_circle_radius(n), 2.0}) {
      const FockVector synth =
          synthesize(circle_number_superposition(n, radius, circle_nodes), n_max);
      double err = 0.0;
      for (int k = 0; k <= n_max; ++k)
        err = std::max(err, std::abs(synth[k] - (k == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0))));
      result.rows.push_back({"number", static_cast<double>(n), radius, err});
      result.worst = std::max(result.worst, err);
    }
  }
  for (double s : {0.1, 0.5, 1.0, 1.5}) {
    const SqueezeParams p = SqueezeParams::from_strength(s, phi);
    const FockVector synth = synthesize(line_squeezed_superposition(p, hermite_nodes), n_max);
    // amplitude comparison only: the norm deficit of the truncated expansion
    // is irrelevant here
    const FockVector exact = squeezed_vacuum_fock(p, n_max, 1.0);
    double err = 0.0;
    for (int k = 0; k <= n_max; ++k) err = std::max(err, std::abs(synth[k] - exact[k]));
    result.rows.push_back({"squeezed", s, phi, err});
    result.worst = std::max(result.worst, err);
  }
  return result;
}

std::string to_json(const HomScanResult& r, int points, int circle_nodes) {
  json doc;
  doc["command"] = "hom-scan";
  doc["params"] = {{"points", points}, {"nodes", circle_nodes}};
  doc["columns"] = {"t2",
                    "p_coincidence_fock",
                    "p_bunch_a_fock",
                    "p_bunch_b_fock",
                    "p_coincidence_janszky",
                    "p_bunch_a_janszky",
                    "p_bunch_b_janszky",
                    "engine_diff"};
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({row.t2, row.p_coincidence_fock, row.p_bunch_a_fock, row.p_bunch_b_fock,
                    row.p_coincidence_janszky, row.p_bunch_a_janszky, row.p_bunch_b_janszky,
                    row.engine_diff});
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"max_engine_diff", r.max_engine_diff},
                    {"tolerance", kEngineAgreementTol},
                    {"ok", r.ok()}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const HomScanResult& r) {
  std::ostringstream out;
  out << "t2,p_coincidence_fock,p_bunch_a_fock,p_bunch_b_fock,"
         "p_coincidence_janszky,p_bunch_a_janszky,p_bunch_b_janszky,engine_diff\n";
  for (const auto& row : r.rows)
    out << fmt17(row.t2) << ',' << fmt17(row.p_coincidence_fock) << ','
        << fmt17(row.p_bunch_a_fock) << ',' << fmt17(row.p_bunch_b_fock) << ','
        << fmt17(row.p_coincidence_janszky) << ',' << fmt17(row.p_bunch_a_janszky) << ','
        << fmt17(row.p_bunch_b_janszky) << ',' << fmt17(row.engine_diff) << '\n';
  return out.str();
}

std::string to_json(const SqueezeInterfereResult& r, double s, int points,
                    int hermite_nodes, int n_max) {
  json doc;
  doc["command"] = "squeeze-interfere";
  doc["params"] = {{"s", s}, {"points", points}, {"nodes", hermite_nodes}, {"n_max", n_max}};
  doc["columns"] = {"phi", "largest_sv", "entropy", "engine_fidelity"};
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({row.phi, row.largest_sv, row.entropy, row.engine_fidelity});
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"min_fidelity", r.min_fidelity},
                    {"tolerance", kEngineAgreementTol},
                    {"ok", r.ok()}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const SqueezeInterfereResult& r) {
  std::ostringstream out;
  out << "phi,largest_sv,entropy,engine_fidelity\n";
  for (const auto& row : r.rows)
    out << fmt17(row.phi) << ',' << fmt17(row.largest_sv) << ',' << fmt17(row.entropy)
        << ',' << fmt17(row.engine_fidelity) << '\n';
  return out.str();
}

std::string to_json(const CompareResult& r, const std::string& input_desc) {
  json doc;
  doc["command"] = "compare";
  doc["params"] = {{"input", input_desc}};
  doc["n_max"] = r.fock.n_max();
  doc["fock"] = amplitude_table(r.fock);
  doc["janszky"] = amplitude_table(r.janszky);
  doc["summary"] = {{"max_abs_diff", r.max_diff}, {"tolerance", r.tolerance}, {"ok", r.ok()}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const CompareResult& r) {
  std::ostringstream out;
  out << "m,n,fock_re,fock_im,janszky_re,janszky_im,abs_diff\n";
  for (int m = 0; m <= r.fock.n_max(); ++m)
    for (int n = 0; n <= r.fock.n_max(); ++n)
      out << m << ',' << n << ',' << fmt17(r.fock(m, n).real()) << ','
          << fmt17(r.fock(m, n).imag()) << ',' << fmt17(r.janszky(m, n).real()) << ','
          << fmt17(r.janszky(m, n).imag()) << ','
          << fmt17(std::abs(r.fock(m, n) - r.janszky(m, n))) << '\n';
  return out.str();
}

std::string to_json(const SynthCheckResult& r) {
  json doc;
  doc["command"] = "synth-check";
  doc["columns"] = {"kind", "param", "path_param", "max_abs_error"};
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({row.kind, row.param, row.path_param, row.max_abs_error});
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"worst", r.worst}, {"tolerance", r.tolerance}, {"ok", r.ok()}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const SynthCheckResult& r) {
  std::ostringstream out;
  out << "kind,param,path_param,max_abs_error\n";
  for (const auto& row : r.rows)
    out << row.kind << ',' << fmt17(row.param) << ',' << fmt17(row.path_param) << ','
        << fmt17(row.max_abs_error) << '\n';
  return out.str();
}

}  // namespace qbs::reports
