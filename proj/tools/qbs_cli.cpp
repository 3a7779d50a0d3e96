// Command-line front end: engine-comparison scans and synthesis checks.
// Exit codes: 0 success, 1 tolerance failure, 2 usage/configuration error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qbs/reports.hpp"

namespace {

using namespace qbs;

struct BsSpec {
  bool balanced = false;
  double t_re = 0.0, t_im = 0.0, r_re = 0.0, r_im = 0.0;
  bool explicit_tr = false;

  BeamSplitter make() const {
    if (balanced) return BeamSplitter::balanced();
    if (!explicit_tr)
      throw std::invalid_argument("no beam splitter given: use --balanced or --t-re/--r-re");
    return BeamSplitter(cplx(t_re, t_im), cplx(r_re, r_im));
  }
};

void add_bs_options(CLI::App* cmd, BsSpec& spec) {
  cmd->add_flag("--balanced", spec.balanced, "use t = 1/sqrt(2), r = i/sqrt(2)");
  cmd->add_option("--t-re", spec.t_re, "Re t")->each([&spec](const std::string&) {
    spec.explicit_tr = true;
  });
  cmd->add_option("--t-im", spec.t_im, "Im t");
  cmd->add_option("--r-re", spec.r_re, "Re r")->each([&spec](const std::string&) {
    spec.explicit_tr = true;
  });
  cmd->add_option("--r-im", spec.r_im, "Im r");
}

// Resolves relative output paths against QBS_OUTPUT_DIR when set.
void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(output_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("QBS_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + path.string());
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode beam-splitter simulator: truncated-Fock and Janszky "
               "coherent-superposition engines"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "json";
  std::string output_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output_path,
                 "output file (default stdout; relative paths resolve against QBS_OUTPUT_DIR)");

  // hom-scan
  auto* hom = app.add_subcommand("hom-scan", "Hong-Ou-Mandel coincidence scan over |t|^2");
  int hom_points = 51, hom_nodes = 32;
  hom->add_option("--points", hom_points, "grid points (endpoints inclusive)")
      ->check(CLI::Range(2, 100000));
  hom->add_option("--nodes", hom_nodes, "circle quadrature nodes")->check(CLI::Range(1, 4096));

  // squeeze-interfere
  auto* sq = app.add_subcommand("squeeze-interfere",
                                "scan the relative squeeze phase of two squeezed inputs");
  double sq_s = 0.4, sq_tail = kDefaultTailTol;
  int sq_points = 51, sq_nodes = 40, sq_nmax = 32;
  BsSpec sq_bs;
  sq->add_option("--s", sq_s, "squeezing strength")->check(CLI::PositiveNumber);
  sq->add_option("--points", sq_points, "phi grid points over [0, 2pi]")
      ->check(CLI::Range(2, 100000));
  sq->add_option("--nodes", sq_nodes, "Gauss-Hermite nodes per line")->check(CLI::Range(1, 200));
  sq->add_option("--n-max", sq_nmax, "Fock truncation")->check(CLI::Range(0, 170));
  sq->add_option("--tail-tol", sq_tail, "allowed output norm outside the n_max box")
      ->check(CLI::PositiveNumber);
  add_bs_options(sq, sq_bs);

  // compare
  auto* cmp = app.add_subcommand("compare", "run one input through both engines");
  std::vector<int> cmp_fock;
  std::vector<double> cmp_coherent, cmp_squeezed;
  int cmp_nodes = 32, cmp_nmax = 20;
  double cmp_tail = kDefaultTailTol;
  BsSpec cmp_bs;
  cmp->add_option("--fock", cmp_fock, "number-state input: m n")->expected(2);
  cmp->add_option("--coherent", cmp_coherent, "coherent input: a_re a_im b_re b_im")
      ->expected(4);
  cmp->add_option("--squeezed", cmp_squeezed, "squeezed input: s rel_phase")->expected(2);
  cmp->add_option("--nodes", cmp_nodes, "quadrature nodes")->check(CLI::Range(1, 4096));
  cmp->add_option("--n-max", cmp_nmax, "Fock truncation (coherent/squeezed inputs)")
      ->check(CLI::Range(0, 170));
  cmp->add_option("--tail-tol", cmp_tail,
                  "allowed output norm outside the n_max box (squeezed inputs)")
      ->check(CLI::PositiveNumber);
  add_bs_options(cmp, cmp_bs);

  // synth-check
  auto* synth = app.add_subcommand("synth-check", "Janszky synthesis accuracy battery");
  int synth_circle = 64, synth_hermite = 40, synth_nmax = 32;
  double synth_phi = 0.0;
  synth->add_option("--nodes", synth_circle, "circle quadrature nodes")
      ->check(CLI::Range(1, 4096));
  synth->add_option("--hermite-nodes", synth_hermite, "Gauss-Hermite nodes")
      ->check(CLI::Range(1, 200));
  synth->add_option("--n-max", synth_nmax, "Fock truncation")->check(CLI::Range(0, 170));
  synth->add_option("--phi", synth_phi, "squeeze phase for the line battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    bool ok = true;
    std::string text;
    if (hom->parsed()) {
      const auto result = reports::hom_scan(hom_points, hom_nodes);
      ok = result.ok();
      text = format == "json" ? reports::to_json(result, hom_points, hom_nodes)
                              : reports::to_csv(result);
    } else if (sq->parsed()) {
      const auto result =
          reports::squeeze_interfere(sq_s, sq_points, sq_bs.make(), sq_nodes, sq_nmax, sq_tail);
      ok = result.ok();
      text = format == "json" ? reports::to_json(result, sq_s, sq_points, sq_nodes, sq_nmax)
                              : reports::to_csv(result);
    } else if (cmp->parsed()) {
      const int given = (cmp_fock.empty() ? 0 : 1) + (cmp_coherent.empty() ? 0 : 1) +
                        (cmp_squeezed.empty() ? 0 : 1);
      if (given != 1)
        throw std::invalid_argument(
            "compare: give exactly one of --fock, --coherent, --squeezed");
      reports::CompareResult result = [&] {
        if (!cmp_fock.empty())
          return reports::compare_number(cmp_fock[0], cmp_fock[1], cmp_bs.make(), cmp_nodes);
        if (!cmp_coherent.empty())
          return reports::compare_coherent(cplx(cmp_coherent[0], cmp_coherent[1]),
                                           cplx(cmp_coherent[2], cmp_coherent[3]),
                                           cmp_bs.make(), cmp_nmax);
        return reports::compare_squeezed(cmp_squeezed[0], cmp_squeezed[1], cmp_bs.make(),
                                         cmp_nodes, cmp_nmax, cmp_tail);
      }();
      ok = result.ok();
      std::ostringstream desc;
      if (!cmp_fock.empty())
        desc << "fock(" << cmp_fock[0] << "," << cmp_fock[1] << ")";
      else if (!cmp_coherent.empty())
        desc << "coherent(" << cmp_coherent[0] << "+" << cmp_coherent[1] << "i, "
             << cmp_coherent[2] << "+" << cmp_coherent[3] << "i)";
      else
        desc << "squeezed(s=" << cmp_squeezed[0] << ", phi=" << cmp_squeezed[1] << ")";
      text = format == "json" ? reports::to_json(result, desc.str())
                              : reports::to_csv(result);
    } else if (synth->parsed()) {
      const auto result =
          reports::synth_check(synth_circle, synth_hermite, synth_nmax, synth_phi);
      ok = result.ok();
      text = format == "json" ? reports::to_json(result) : reports::to_csv(result);
    }
    emit(text, output_path);
    return ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonUnitaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
