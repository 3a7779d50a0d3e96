#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "qbs/reports.hpp"

using namespace qbs;
using nlohmann::json;
constexpr double pi = std::numbers::pi;

TEST_CASE("hom scan rows and agreement") {
  const auto result = reports::hom_scan(5, 32);
  REQUIRE(result.rows.size() == 5);
  CHECK(result.ok());

  // |t|^2 = 0.5 row: coincidence null, bunching 1/2 each way
  const auto& mid = result.rows[2];
  CHECK(mid.t2 == doctest::Approx(0.5));
  CHECK(mid.p_coincidence_fock < 1e-12);
  CHECK(mid.p_coincidence_janszky < 1e-10);
  CHECK(mid.p_bunch_a_fock == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mid.p_bunch_b_fock == doctest::Approx(0.5).epsilon(1e-10));

  // |t|^2 = 1: all coincidence
  CHECK(result.rows[4].p_coincidence_fock == doctest::Approx(1.0));
  CHECK_THROWS(reports::hom_scan(1, 32));
}

TEST_CASE("squeeze interfere scan") {
  const auto result = reports::squeeze_interfere(0.4, 5, BeamSplitter::balanced(), 40, 32);
  REQUIRE(result.rows.size() == 5);
  CHECK(result.ok());

  // phi = pi row (index 2): product output
  CHECK(result.rows[2].phi == doctest::Approx(pi));
  CHECK(result.rows[2].largest_sv > 1.0 - 1e-6);
  CHECK(result.rows[2].entropy < 1e-5);

  // phi = 0 row: entangled output with the sech tanh^n singular profile
  const double expected_sv0 = 1.0 / std::cosh(0.4) /
                              std::sqrt((1.0 - std::pow(std::tanh(0.4), 66.0)) /
                                        (1.0 - std::pow(std::tanh(0.4), 2.0)) /
                                        std::pow(std::cosh(0.4), 2.0));
  CHECK(result.rows[0].largest_sv == doctest::Approx(expected_sv0).epsilon(1e-6));
  CHECK(result.rows[0].entropy > 0.1);

  // near-zero squeezing: entropy of order -p ln p with p ~ tanh(s)^2
  const auto weak = reports::squeeze_interfere(1e-3, 3, BeamSplitter::balanced(), 20, 8);
  for (const auto& row : weak.rows) CHECK(row.entropy < 1e-4);
}

TEST_CASE("compare number input") {
  const auto result = reports::compare_number(1, 1, BeamSplitter::balanced(), 32);
  CHECK(result.max_diff < 1e-10);
  CHECK(result.ok());
}

TEST_CASE("compare coherent input equals the coherent product expansion") {
  const BeamSplitter bal = BeamSplitter::balanced();
  const cplx alpha(1.0, 0.0), beta(0.0, 1.0);
  const auto result = reports::compare_coherent(alpha, beta, bal, 20);
  CHECK(result.ok());

  const cplx alpha_out = bal.t() * alpha + bal.r() * beta;
  const cplx beta_out = bal.t() * beta + bal.r() * alpha;
  const TwoModeFock expected =
      tensor_product(coherent_fock(alpha_out, 20), coherent_fock(beta_out, 20));
  CHECK(max_abs_diff(result.fock, expected) < 1e-8);
  CHECK(max_abs_diff(result.janszky, expected) < 1e-8);
}

TEST_CASE("compare squeezed input") {
  const auto result = reports::compare_squeezed(0.4, 0.0, BeamSplitter::balanced(), 40, 32);
  CHECK(result.ok());
}

TEST_CASE("synth check battery") {
  const auto result = reports::synth_check(64, 40, 32, pi);
  CHECK(result.rows.size() == 21 + 4);
  CHECK(result.worst < 1e-8);
  CHECK(result.ok());
}

TEST_CASE("json documents are structurally valid") {
  const auto hom = reports::hom_scan(3, 32);
  const json hom_doc = json::parse(reports::to_json(hom, 3, 32));
  CHECK(hom_doc["command"] == "hom-scan");
  REQUIRE(hom_doc["columns"].is_array());
  REQUIRE(hom_doc["rows"].is_array());
  CHECK(hom_doc["rows"].size() == 3);
  for (const auto& row : hom_doc["rows"]) CHECK(row.size() == hom_doc["columns"].size());
  CHECK(hom_doc["summary"]["ok"].is_boolean());
  CHECK(hom_doc["summary"]["max_engine_diff"].is_number());

  const auto cmp = reports::compare_number(1, 1, BeamSplitter::balanced(), 32);
  const json cmp_doc = json::parse(reports::to_json(cmp, "fock(1,1)"));
  CHECK(cmp_doc["command"] == "compare");
  REQUIRE(cmp_doc["fock"].is_array());
  CHECK(cmp_doc["fock"].size() == static_cast<std::size_t>(cmp.fock.n_max() + 1));
  // amplitudes as [re, im]
  CHECK(cmp_doc["fock"][0][0].size() == 2);
  CHECK(cmp_doc["summary"]["max_abs_diff"].is_number());

  const auto synth = reports::synth_check(64, 40, 16, pi);
  const json synth_doc = json::parse(reports::to_json(synth));
  CHECK(synth_doc["command"] == "synth-check");
  CHECK(synth_doc["rows"].size() == synth.rows.size());
}

TEST_CASE("csv documents have headers, LF endings, stable column order") {
  const auto hom = reports::hom_scan(3, 32);
  const std::string csv = reports::to_csv(hom);
  CHECK(csv.rfind("t2,p_coincidence_fock,", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows

  const auto cmp = reports::compare_number(1, 1, BeamSplitter::balanced(), 32);
  const std::string cmp_csv = reports::to_csv(cmp);
  CHECK(cmp_csv.rfind("m,n,fock_re,fock_im,janszky_re,janszky_im,abs_diff\n", 0) == 0);
}
