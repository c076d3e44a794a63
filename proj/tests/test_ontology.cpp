#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qfound/hilbert.hpp"
#include "qfound/model_io.hpp"
#include "qfound/ontology.hpp"

using namespace qfound;
using namespace qfound::ontology;
using hilbert::BlochVector;

namespace {

constexpr double kPi = std::numbers::pi;

BlochVector random_bloch(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

FiniteOntologicalModel two_point_model() {
  FiniteOntologicalModel::PrepMap preps;
  preps["half"] = (Eigen::VectorXd(2) << 0.5, 0.5).finished();
  FiniteOntologicalModel::ResponseMap resps;
  resps["m"] = (Eigen::MatrixXd(2, 2) << 1.0, 0.0, 0.0, 1.0).finished();
  return FiniteOntologicalModel(2, std::move(preps), std::move(resps));
}

}  // namespace

TEST_CASE("model validation") {
  FiniteOntologicalModel::PrepMap bad_sum;
  bad_sum["p"] = (Eigen::VectorXd(2) << 0.5, 0.4).finished();
  CHECK_THROWS_WITH_AS(FiniteOntologicalModel(2, bad_sum, {}),
                       doctest::Contains("sums to"), std::invalid_argument);

  FiniteOntologicalModel::PrepMap negative;
  negative["p"] = (Eigen::VectorXd(2) << 1.5, -0.5).finished();
  CHECK_THROWS_WITH_AS(FiniteOntologicalModel(2, negative, {}),
                       doctest::Contains("negative"), std::invalid_argument);

  FiniteOntologicalModel::ResponseMap bad_rows;
  bad_rows["m"] = (Eigen::MatrixXd(2, 2) << 0.9, 0.0, 0.5, 0.5).finished();
  CHECK_THROWS_WITH_AS(FiniteOntologicalModel(2, {}, bad_rows),
                       doctest::Contains("lambda 0"), std::invalid_argument);

  CHECK_THROWS_AS(FiniteOntologicalModel(0, {}, {}), std::invalid_argument);
}

TEST_CASE("predicted probability") {
  const auto model = two_point_model();
  CHECK(predicted_probability(model, "half", "m", 0) == doctest::Approx(0.5));
  CHECK(predicted_probability(model, "half", "m", 0) +
            predicted_probability(model, "half", "m", 1) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(predicted_probability(model, "nope", "m", 0), std::invalid_argument);
  CHECK_THROWS_AS(predicted_probability(model, "half", "m", 7), std::invalid_argument);
}

TEST_CASE("predicted probability is linear in the preparation") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.index(5));
    Eigen::VectorXd p1(n), p2(n);
    for (int i = 0; i < n; ++i) {
      p1(i) = rng.uniform() + 1e-9;
      p2(i) = rng.uniform() + 1e-9;
    }
    p1 /= p1.sum();
    p2 /= p2.sum();
    const double w = rng.uniform();
    Eigen::MatrixXd table(n, 2);
    for (int i = 0; i < n; ++i) {
      table(i, 0) = rng.uniform();
      table(i, 1) = 1.0 - table(i, 0);
    }
    FiniteOntologicalModel::PrepMap preps;
    preps["p1"] = p1;
    preps["p2"] = p2;
    preps["mix"] = w * p1 + (1.0 - w) * p2;
    FiniteOntologicalModel::ResponseMap resps;
    resps["m"] = table;
    const FiniteOntologicalModel model(n, std::move(preps), std::move(resps));
    const double lhs = predicted_probability(model, "mix", "m", 0);
    const double rhs = w * predicted_probability(model, "p1", "m", 0) +
                       (1.0 - w) * predicted_probability(model, "p2", "m", 0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("orthodox model reproduces the Born rule exactly") {
  const auto orthodox = orthodox_model(
      {{"zero", hilbert::ket0()}, {"plus", hilbert::ket_plus()}},
      {{"z", hilbert::pauli_eigenbasis(3)}, {"x", hilbert::pauli_eigenbasis(1)}});
  CHECK(orthodox.model.lambda_count() == 2);

  const auto report = reproduces_quantum(orthodox.model, orthodox.assignment, 1e-12);
  CHECK(report.pass);

  // Point-mass preparations with disjoint singleton supports.
  CHECK(support(orthodox.model, "zero").size() == 1);
  CHECK(support(orthodox.model, "plus").size() == 1);
  CHECK(support(orthodox.model, "zero") != support(orthodox.model, "plus"));
  const auto ov = overlap(orthodox.model, "zero", "plus");
  CHECK(ov.variational_overlap == 0.0);
  CHECK(ov.common_support_mass == 0.0);

  // Phase-equivalent duplicates collapse onto one microstate.
  const hilbert::StateVector rotated(
      std::exp(std::complex<double>(0, 1.2)) * hilbert::ket0().amplitudes());
  const auto collapsed = orthodox_model({{"s1", hilbert::ket0()}, {"s2", rotated}},
                                        {{"z", hilbert::pauli_eigenbasis(3)}});
  CHECK(collapsed.model.lambda_count() == 1);
}

TEST_CASE("a wrong response table is reported with the offending triple") {
  auto orthodox = orthodox_model({{"zero", hilbert::ket0()}},
                                 {{"z", hilbert::pauli_eigenbasis(3)}});
  // Flip the response row.
  FiniteOntologicalModel::ResponseMap resps = orthodox.model.responses();
  resps["z"] = (Eigen::MatrixXd(1, 2) << 0.0, 1.0).finished();
  const FiniteOntologicalModel broken(1, orthodox.model.preparations(), std::move(resps));
  const auto report = reproduces_quantum(broken, orthodox.assignment, 1e-9);
  CHECK_FALSE(report.pass);
  CHECK(report.max_deviation == doctest::Approx(1.0));
  CHECK(report.worst_prep == "zero");
  CHECK(report.worst_meas == "z");
}

TEST_CASE("support and overlap") {
  FiniteOntologicalModel::PrepMap preps;
  preps["spread"] = (Eigen::VectorXd(4) << 0.5, 0.5, 0.0, 0.0).finished();
  preps["other"] = (Eigen::VectorXd(4) << 0.5, 0.0, 0.5, 0.0).finished();
  preps["uniform"] = Eigen::VectorXd::Constant(4, 0.25);
  const FiniteOntologicalModel model(4, std::move(preps), {});

  CHECK(support(model, "spread") == std::vector<int>{0, 1});
  CHECK(support(model, "uniform").size() == 4);

  // The four-cell embedding of the two overlapping extremal macrostates.
  const auto ov = overlap(model, "spread", "other");
  CHECK(ov.variational_overlap == doctest::Approx(0.5));
  CHECK(ov.common_support_mass == doctest::Approx(0.5));
  const auto sym = overlap(model, "other", "spread");
  CHECK(sym.variational_overlap == ov.variational_overlap);
  CHECK(overlap(model, "spread", "spread").variational_overlap == doctest::Approx(1.0));
}

TEST_CASE("sphere-model density") {
  const BlochVector up{0, 0, 1};
  CHECK(ks_density(SpherePoint(Eigen::Vector3d(0, 0, 1)), up) == doctest::Approx(1.0 / kPi));
  CHECK(ks_density(SpherePoint(Eigen::Vector3d(0, 0, -1)), up) == 0.0);
  CHECK(ks_density(SpherePoint(Eigen::Vector3d(1, 0, 0)), up) == 0.0);

  // Normalization, checked against an independent cos(theta)-grid rule.
  Rng rng(3);
  const BlochVector psi = random_bloch(rng);
  const double integral = oracles::sphere_integral_ugrid(
      [&psi](const Eigen::Vector3d& lam) { return ks_density(SpherePoint(lam.normalized()), psi); });
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("sphere-model response") {
  const BlochVector up{0, 0, 1};
  CHECK(ks_response(up, SpherePoint(Eigen::Vector3d(0, 0, 1))) == 1);
  CHECK(ks_response(up, SpherePoint(Eigen::Vector3d(0, 0, -1))) == 0);
  // Tie resolved toward the measured outcome.
  CHECK(ks_response(up, SpherePoint(Eigen::Vector3d(1, 0, 0))) == 1);
}

TEST_CASE("sphere-model quadrature reproduces the Born rule") {
  const SphereResolution res{400, 800};
  const BlochVector up{0, 0, 1};
  const BlochVector side{1, 0, 0};

  CHECK(ks_predicted(up, up, res) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(ks_predicted(side, up, res) == doctest::Approx(0.5).epsilon(1e-3));

  Rng rng(7);
  double max_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BlochVector psi = random_bloch(rng), phi = random_bloch(rng);
    max_err = std::max(max_err,
                       std::abs(ks_predicted(phi, psi, res) - hilbert::born_bloch(phi, psi)));
  }
  CHECK(max_err < 1e-3);

  CHECK_THROWS_AS(ks_predicted(up, up, SphereResolution{8, 16}), std::invalid_argument);
}

TEST_CASE("quadrature error shrinks as the grid doubles") {
  Rng rng(17);
  std::vector<std::pair<BlochVector, BlochVector>> pairs;
  for (int i = 0; i < 20; ++i) pairs.push_back({random_bloch(rng), random_bloch(rng)});

  // The response discontinuity makes the per-pair maximum fluctuate at the
  // cell scale, so convergence is asserted on the panel mean.
  std::vector<double> mean_errs;
  for (const SphereResolution res : {SphereResolution{50, 100}, SphereResolution{100, 200},
                                     SphereResolution{200, 400}, SphereResolution{400, 800}}) {
    double total = 0.0;
    for (const auto& [psi, phi] : pairs)
      total += std::abs(ks_predicted(phi, psi, res) - hilbert::born_bloch(phi, psi));
    mean_errs.push_back(total / static_cast<double>(pairs.size()));
  }
  for (std::size_t i = 1; i < mean_errs.size(); ++i) CHECK(mean_errs[i] < mean_errs[i - 1]);
  CHECK(mean_errs.back() < 1e-3);
  CHECK(mean_errs.back() < 0.25 * mean_errs.front());
}

TEST_CASE("sphere-model overlap") {
  const SphereResolution res{400, 800};
  const BlochVector up{0, 0, 1};
  const BlochVector side{1, 0, 0};

  CHECK(ks_overlap(up, up.negated(), res) == 0.0);  // disjoint hemispheres, exactly
  CHECK(ks_overlap(up, up, res) == doctest::Approx(1.0).epsilon(1e-3));

  // Orthogonal Bloch axes (the |0> vs |+> pair): pinned against the
  // independent u-grid oracle and the 1 - sin(pi/4) value it converges to.
  const double overlap_zx = ks_overlap(up, side, res);
  CHECK(overlap_zx == doctest::Approx(1.0 - std::sin(kPi / 4.0)).epsilon(2e-4));
  const double oracle = oracles::sphere_integral_ugrid([&](const Eigen::Vector3d& lam) {
    const SpherePoint p(lam.normalized());
    return std::min(ks_density(p, up), ks_density(p, side));
  });
  CHECK(overlap_zx == doctest::Approx(oracle).epsilon(2e-4));
}

TEST_CASE("exact sampler statistics") {
  Rng rng(1234);
  const BlochVector psi = random_bloch(rng);
  const int samples = 100000;

  // Mean of lambda.Psi is 2/3 with variance 1/18 under the cap density.
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) sum += sample_ks(psi, rng).dot(psi);
  const double mean = sum / samples;
  const double sigma = std::sqrt((0.5 - 4.0 / 9.0) / samples);
  CHECK(std::abs(mean - 2.0 / 3.0) < 3.0 * sigma);

  // Response frequencies agree with the quadrature prediction.
  const BlochVector phi = random_bloch(rng);
  long long hits = 0;
  for (int i = 0; i < samples; ++i) hits += ks_response(phi, sample_ks(psi, rng));
  const double freq = static_cast<double>(hits) / samples;
  const double predicted = ks_predicted(phi, psi, SphereResolution{400, 800});
  const double binom = std::sqrt(predicted * (1.0 - predicted) / samples);
  CHECK(std::abs(freq - predicted) < 3.0 * binom + 1e-3);
}

TEST_CASE("discretized sphere model reproduces the Born rule") {
  const SphereResolution res{400, 800};
  const std::vector<std::pair<std::string, BlochVector>> preps = {
      {"up", {0, 0, 1}}, {"side", {1, 0, 0}}, {"tilt", {0.6, 0.0, 0.8}}};
  const std::vector<std::pair<std::string, BlochVector>> axes = {
      {"z", {0, 0, 1}}, {"x", {1, 0, 0}}, {"diag", {0.0, 0.8, 0.6}}};

  const auto model = discretize_ks(res, preps, axes);
  CHECK(model.lambda_count() == 400 * 800);
  const auto qa = ks_assignment(preps, axes);
  const auto report = reproduces_quantum(model, qa, 1e-3);
  CHECK(report.pass);
  CHECK(report.max_deviation < 1e-3);
}

TEST_CASE("model json round trip and loader errors") {
  const auto model = two_point_model();
  const io::Json j = io::model_to_json(model);
  const auto back = io::model_from_json(j);
  CHECK(back.lambda_count() == 2);
  CHECK(back.preparation("half")(0) == doctest::Approx(0.5));
  CHECK(back.response("m")(1, 1) == doctest::Approx(1.0));

  io::Json bad = j;
  bad["preparations"]["half"] = {0.5, 0.4};
  CHECK_THROWS_WITH_AS(io::model_from_json(bad), doctest::Contains("half"),
                       std::invalid_argument);

  io::Json wrong_len = j;
  wrong_len["preparations"]["half"] = {0.5, 0.25, 0.25};
  CHECK_THROWS_WITH_AS(io::model_from_json(wrong_len), doctest::Contains("length"),
                       std::invalid_argument);

  CHECK_THROWS_AS(io::load_model("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("named quantum objects") {
  CHECK(hilbert::equal_up_to_phase(io::parse_state_name("|0>"), hilbert::ket0()));
  CHECK(hilbert::equal_up_to_phase(io::parse_state_name("|+>"), hilbert::ket_plus()));
  CHECK(hilbert::equal_up_to_phase(io::parse_state_name("hardy:4:0"), hilbert::ket0()));
  CHECK_THROWS_AS(io::parse_state_name("|2>"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_state_name("hardy:4:9"), std::invalid_argument);
  CHECK(io::parse_basis_name("z").size() == 2);
  CHECK(io::parse_basis_name("hardy:4:1").size() == 2);
}
