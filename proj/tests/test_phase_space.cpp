#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qfound/model_io.hpp"
#include "qfound/phase_space.hpp"

using namespace qfound;
using namespace qfound::phase;

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd diag2(double a, double b) {
  return (Eigen::MatrixXd(2, 2) << a, 0.0, 0.0, b).finished();
}
}  // namespace

TEST_CASE("resolution condition on simple covariances") {
  const RRScale half(0.5);

  const auto sat = rr_satisfied(diag2(0.5, 0.5), half);
  CHECK(sat.satisfied);
  CHECK(sat.margin == doctest::Approx(0.0).epsilon(1e-12));  // eigenvalues {0, 1}

  const auto tight = rr_satisfied(diag2(0.25, 0.25), half);
  CHECK_FALSE(tight.satisfied);
  CHECK(tight.margin == doctest::Approx(-0.25).epsilon(1e-12));

  // Switching the constraint off admits any positive-semidefinite matrix.
  CHECK(rr_satisfied(diag2(0.01, 0.01), RRScale(0.0)).satisfied);

  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.3, -0.3, 1.0;
  CHECK_THROWS_AS(rr_satisfied(asym, half), std::invalid_argument);
  CHECK_THROWS_AS(RRScale(-1.0), std::invalid_argument);
}

TEST_CASE("uncertainty products") {
  const auto prods = uncertainty_product(diag2(0.5, 0.5));
  REQUIRE(prods.size() == 1);
  CHECK(prods[0] == doctest::Approx(0.5).epsilon(1e-12));

  // Squeezed saturation: broad x, narrow p, product still 1/2 and valid.
  const auto squeezed = uncertainty_product(diag2(2.0, 0.125));
  CHECK(squeezed[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rr_satisfied(diag2(2.0, 0.125), RRScale(0.5)).satisfied);

  // Scaling the covariance by 4 quadruples the product.
  CHECK(uncertainty_product(4.0 * diag2(0.5, 0.5))[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("symplectic matrices") {
  CHECK_NOTHROW(SymplecticMatrix::rotation(0.7));
  CHECK_NOTHROW(SymplecticMatrix::squeeze(2.5));
  CHECK_NOTHROW(SymplecticMatrix::beamsplitter_mix(1.1));
  CHECK_THROWS_AS(SymplecticMatrix(2.0 * Eigen::MatrixXd::Identity(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymplecticMatrix::squeeze(0.0), std::invalid_argument);

  Rng rng(8);
  for (int i = 0; i < 20; ++i) CHECK_NOTHROW(random_symplectic(2, rng));
}

TEST_CASE("evolution") {
  const GaussianMacrostate vac = GaussianMacrostate::vacuum(1);

  const auto unchanged = evolve(vac, SymplecticMatrix::identity(1));
  CHECK((unchanged.cov() - vac.cov()).cwiseAbs().maxCoeff() < 1e-15);

  // Rotations leave the determinant and the margin alone.
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto state = random_rr_valid_state(1, RRScale(0.5), rng);
    const auto rotated = evolve(state, SymplecticMatrix::rotation(rng.uniform(0.0, 2.0 * kPi)));
    CHECK(rotated.cov().determinant() ==
          doctest::Approx(state.cov().determinant()).epsilon(1e-9));
    CHECK(rr_satisfied(rotated, RRScale(0.5)).margin ==
          doctest::Approx(rr_satisfied(state, RRScale(0.5)).margin).epsilon(1e-9));
  }

  // Squeezing the saturated state keeps it saturated.
  const auto squeezed = evolve(vac, SymplecticMatrix::squeeze(3.0));
  CHECK(squeezed.cov()(0, 0) == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(squeezed.cov()(1, 1) == doctest::Approx(0.5 / 9.0).epsilon(1e-12));
  CHECK(rr_satisfied(squeezed, RRScale(0.5)).satisfied);

  CHECK_THROWS_AS(evolve(vac, SymplecticMatrix::beamsplitter_mix(0.3)), std::invalid_argument);
}

TEST_CASE("resolution condition survives random symplectic evolution") {
  Rng rng(4242);
  const RRScale half(0.5);
  for (int i = 0; i < 1000; ++i) {
    const int n_modes = 1 + (i % 2);
    const auto state = random_rr_valid_state(n_modes, half, rng);

    for (double prod : uncertainty_product(state.cov())) CHECK(prod >= half.value - 1e-9);

    const auto evolved = evolve(state, random_symplectic(n_modes, rng));
    const auto rr = rr_satisfied(evolved, half);
    CHECK(rr.satisfied);
    CHECK(rr.margin >= -1e-9);
    for (double prod : uncertainty_product(evolved.cov())) CHECK(prod >= half.value - 1e-9);
  }
}

TEST_CASE("fidelity closed form against the quadrature oracle") {
  Rng rng(1001);

  // Fixed panel: fourteen single-mode pairs, six two-mode pairs.
  std::vector<std::pair<GaussianMacrostate, GaussianMacrostate>> panel;
  for (int i = 0; i < 14; ++i) {
    const auto f = random_rr_valid_state(1, RRScale(0.5), rng);
    const auto g = random_rr_valid_state(1, RRScale(0.5), rng);
    panel.emplace_back(f, g);
  }
  for (int i = 0; i < 6; ++i) {
    const auto f = random_rr_valid_state(2, RRScale(0.5), rng);
    const auto g = random_rr_valid_state(2, RRScale(0.5), rng);
    panel.emplace_back(f, g);
  }

  for (const auto& [f, g] : panel) {
    const double closed = fidelity(f, g);
    const double quad = oracles::bhattacharyya_quadrature(f, g);
    CHECK(std::abs(closed - quad) < 1e-6);
  }
}

TEST_CASE("fidelity pinned values and invariance") {
  // Equal covariances scale*I with means one unit apart in x.
  const auto f = GaussianMacrostate::vacuum(1);
  const auto g = displace(f, (Eigen::VectorXd(2) << 1.0, 0.0).finished());
  const double pinned = fidelity(f, g);
  CHECK(pinned == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
  CHECK(pinned == doctest::Approx(oracles::bhattacharyya_quadrature(f, g)).epsilon(1e-8));

  CHECK(fidelity(f, f) == doctest::Approx(1.0).epsilon(1e-12));

  // Invariance under shared symplectic evolution.
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_rr_valid_state(1, RRScale(0.5), rng);
    const auto b = random_rr_valid_state(1, RRScale(0.5), rng);
    const auto s = random_symplectic(1, rng);
    CHECK(std::abs(fidelity(evolve(a, s), evolve(b, s)) - fidelity(a, b)) < 1e-9);
  }

  // A flat (zero-covariance limit is not constructible, but a singular
  // average is): both inputs concentrated on a line in x.
  const GaussianMacrostate thin(Eigen::VectorXd::Zero(2), diag2(0.0, 1.0));
  CHECK_THROWS_AS(fidelity(thin, thin), std::domain_error);
}

TEST_CASE("no-cloning witness") {
  const auto f = GaussianMacrostate::vacuum(1);
  const auto g = displace(f, (Eigen::VectorXd(2) << 1.0, 0.0).finished());

  const auto witness = no_cloning_witness(f, g);
  CHECK(witness.cloning_impossible);
  CHECK(witness.fidelity_squared == doctest::Approx(witness.fidelity_value *
                                                    witness.fidelity_value));
  CHECK(witness.fidelity_value > 0.0);
  CHECK(witness.fidelity_value < 1.0);

  CHECK_FALSE(no_cloning_witness(f, f).cloning_impossible);

  const auto far = displace(f, (Eigen::VectorXd(2) << 100.0, 0.0).finished());
  const auto distant = no_cloning_witness(f, far);
  CHECK_FALSE(distant.cloning_impossible);
  CHECK(distant.fidelity_value < 1e-15);
}

TEST_CASE("correlated two-particle state") {
  for (double s : {1.0, 0.1, 0.001}) {
    const auto state = epr_state(2.5, s);
    const auto& cov = state.cov();
    const double var_xdiff = cov(0, 0) + cov(2, 2) - 2.0 * cov(0, 2);
    const double var_psum = cov(1, 1) + cov(3, 3) + 2.0 * cov(1, 3);
    const double tol = std::max(1e-12, 1e-14 / (s * s));
    CHECK(std::abs(var_xdiff - s * s) < tol);
    CHECK(std::abs(var_psum - s * s) < tol);
    CHECK(rr_satisfied(state, RRScale(0.5)).satisfied);

    // The lone second particle stays broad as the correlations sharpen.
    const double marginal = (0.5 * s * s + 0.5 / (s * s)) / 2.0;
    CHECK(cov(2, 2) == doctest::Approx(marginal).epsilon(1e-12));
  }
  CHECK_THROWS_AS(epr_state(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(epr_state(0.0, -1.0), std::invalid_argument);
}

TEST_CASE("conditioning on a position record") {
  const double c = 2.5, s = 1e-3;
  const auto state = epr_state(c, s);

  const auto post = condition_on_position(state, 1, 0.0);
  CHECK(post.n_modes() == 1);
  CHECK(post.mean()(0) == doctest::Approx(c).epsilon(1e-6));
  CHECK(std::sqrt(post.cov()(0, 0)) <= 2e-3);

  // Posterior covariance does not depend on the observed value.
  const auto post_other = condition_on_position(state, 1, 17.0);
  CHECK((post.cov() - post_other.cov()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(post_other.mean()(0) == doctest::Approx(17.0 + c).epsilon(1e-6));

  // Conditioning an uncorrelated product leaves the marginal untouched.
  Eigen::MatrixXd prod_cov = Eigen::MatrixXd::Zero(4, 4);
  prod_cov.block<2, 2>(0, 0) = diag2(1.0, 0.5);
  prod_cov.block<2, 2>(2, 2) = diag2(2.0, 0.25);
  const GaussianMacrostate product((Eigen::VectorXd(4) << 0, 0, 3, 0).finished(), prod_cov);
  const auto post_prod = condition_on_position(product, 1, 5.0);
  CHECK(post_prod.mean()(0) == doctest::Approx(3.0));
  CHECK((post_prod.cov() - diag2(2.0, 0.25)).cwiseAbs().maxCoeff() < 1e-12);

  // Degenerate conditioning variance.
  Eigen::MatrixXd degenerate = Eigen::MatrixXd::Zero(4, 4);
  degenerate(1, 1) = degenerate(2, 2) = degenerate(3, 3) = 1.0;
  const GaussianMacrostate flat(Eigen::VectorXd::Zero(4), degenerate);
  CHECK_THROWS_AS(condition_on_position(flat, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(condition_on_position(state, 3, 0.0), std::invalid_argument);
}

TEST_CASE("density and marginals") {
  const auto vac = GaussianMacrostate::vacuum(1);
  CHECK(density(vac, Eigen::VectorXd::Zero(2)) == doctest::Approx(1.0 / kPi).epsilon(1e-12));

  const double mass = oracles::box_integral_2d(
      [&vac](double x, double p) {
        return density(vac, (Eigen::VectorXd(2) << x, p).finished());
      },
      -8.0, 8.0, -8.0, 8.0, 1200);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

  const GaussianMacrostate aniso((Eigen::VectorXd(2) << 1.0, -2.0).finished(), diag2(2.0, 0.7));
  const auto m = marginals(aniso);
  REQUIRE(m.size() == 2);
  CHECK(m[0].mean == doctest::Approx(1.0));
  CHECK(m[0].variance == doctest::Approx(2.0));
  CHECK(m[1].mean == doctest::Approx(-2.0));
  CHECK(m[1].variance == doctest::Approx(0.7));

  const GaussianMacrostate thin(Eigen::VectorXd::Zero(2), diag2(0.0, 1.0));
  CHECK_THROWS_AS(density(thin, Eigen::VectorXd::Zero(2)), std::domain_error);
}

TEST_CASE("gaussian state json round trip") {
  const auto state = epr_state(1.5, 0.1);
  const auto j = io::gaussian_to_json(state);
  const auto back = io::gaussian_from_json(j);
  CHECK(back.n_modes() == 2);
  CHECK((back.mean() - state.mean()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((back.cov() - state.cov()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("covariance validation") {
  CHECK_THROWS_AS(GaussianMacrostate(Eigen::VectorXd::Zero(2), diag2(1.0, -0.5)),
                  std::invalid_argument);
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.5, -0.5, 1.0;
  CHECK_THROWS_AS(GaussianMacrostate(Eigen::VectorXd::Zero(2), asym), std::invalid_argument);
  CHECK_THROWS_AS(GaussianMacrostate(Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Identity(3, 3)),
                  std::invalid_argument);
}
