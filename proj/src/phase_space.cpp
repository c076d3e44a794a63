#include "qfound/phase_space.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qfound::phase {

namespace {

constexpr double kPi = std::numbers::pi;

double scale_of(const Eigen::MatrixXd& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

void check_even_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square with even dimension");
}

}  // namespace

RRScale::RRScale(double v) : value(v) {
  if (v < 0.0) throw std::invalid_argument("RRScale: scale must be nonnegative");
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  if (n_modes <= 0) throw std::invalid_argument("symplectic_form: need at least one mode");
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    sigma(2 * k, 2 * k + 1) = -1.0;
    sigma(2 * k + 1, 2 * k) = 1.0;
  }
  return sigma;
}

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd a) : a_(std::move(a)) {
  check_even_square(a_, "SymplecticMatrix");
  const Eigen::MatrixXd sigma = symplectic_form(n_modes());
  const double err = (a_.transpose() * sigma * a_ - sigma).cwiseAbs().maxCoeff();
  if (err > kTolAlgebra * scale_of(a_) * scale_of(a_))
    throw std::invalid_argument("SymplecticMatrix: A^T Sigma A != Sigma");
}

SymplecticMatrix SymplecticMatrix::identity(int n_modes) {
  return SymplecticMatrix(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticMatrix SymplecticMatrix::rotation(double theta) {
  Eigen::MatrixXd a(2, 2);
  a << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return SymplecticMatrix(std::move(a));
}

SymplecticMatrix SymplecticMatrix::squeeze(double s) {
  if (s == 0.0) throw std::invalid_argument("SymplecticMatrix::squeeze: s must be nonzero");
  Eigen::MatrixXd a(2, 2);
  a << s, 0.0, 0.0, 1.0 / s;
  return SymplecticMatrix(std::move(a));
}

SymplecticMatrix SymplecticMatrix::beamsplitter_mix(double theta) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  const double c = std::cos(theta), s = std::sin(theta);
  a.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
  a.block<2, 2>(0, 2) = s * Eigen::Matrix2d::Identity();
  a.block<2, 2>(2, 0) = -s * Eigen::Matrix2d::Identity();
  a.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
  return SymplecticMatrix(std::move(a));
}

SymplecticMatrix SymplecticMatrix::embed(const SymplecticMatrix& single, int mode, int n_modes) {
  if (single.n_modes() != 1)
    throw std::invalid_argument("SymplecticMatrix::embed: expected a single-mode operation");
  if (mode < 0 || mode >= n_modes)
    throw std::invalid_argument("SymplecticMatrix::embed: mode index out of range");
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  a.block<2, 2>(2 * mode, 2 * mode) = single.entries();
  return SymplecticMatrix(std::move(a));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (n_modes() != rhs.n_modes())
    throw std::invalid_argument("SymplecticMatrix*: mode count mismatch");
  return SymplecticMatrix(a_ * rhs.a_);
}

GaussianMacrostate::GaussianMacrostate(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  check_even_square(cov_, "GaussianMacrostate");
  if (mean_.size() != cov_.rows())
    throw std::invalid_argument("GaussianMacrostate: mean/covariance size mismatch");
  const double scale = scale_of(cov_);
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kTolAlgebra * scale)
    throw std::invalid_argument("GaussianMacrostate: covariance must be symmetric");
  cov_ = 0.5 * (cov_ + cov_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kTolPsd * scale)
    throw std::invalid_argument("GaussianMacrostate: covariance is not positive semidefinite");
}

GaussianMacrostate GaussianMacrostate::vacuum(int n_modes, double rr_scale) {
  return GaussianMacrostate(Eigen::VectorXd::Zero(2 * n_modes),
                            rr_scale * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

RRReport rr_satisfied(const Eigen::MatrixXd& gamma, RRScale lam) {
  check_even_square(gamma, "rr_satisfied");
  const double scale = scale_of(gamma);
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > kTolAlgebra * scale)
    throw std::invalid_argument("rr_satisfied: gamma must be symmetric");
  const int n_modes = static_cast<int>(gamma.rows()) / 2;
  Eigen::MatrixXcd m = gamma.cast<std::complex<double>>() +
                       std::complex<double>(0.0, lam.value) *
                           symplectic_form(n_modes).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  RRReport report;
  report.margin = es.eigenvalues().minCoeff();
  report.satisfied = report.margin >= -kTolPsd * std::max(scale, lam.value);
  return report;
}

RRReport rr_satisfied(const GaussianMacrostate& state, RRScale lam) {
  return rr_satisfied(state.cov(), lam);
}

std::vector<double> uncertainty_product(const Eigen::MatrixXd& gamma) {
  check_even_square(gamma, "uncertainty_product");
  std::vector<double> out;
  for (int k = 0; k < gamma.rows() / 2; ++k)
    out.push_back(std::sqrt(gamma(2 * k, 2 * k) * gamma(2 * k + 1, 2 * k + 1)));
  return out;
}

GaussianMacrostate evolve(const GaussianMacrostate& state, const SymplecticMatrix& a) {
  if (state.n_modes() != a.n_modes())
    throw std::invalid_argument("evolve: mode count mismatch");
  const Eigen::MatrixXd& m = a.entries();
  return GaussianMacrostate(m.transpose() * state.mean(), m.transpose() * state.cov() * m);
}

GaussianMacrostate displace(const GaussianMacrostate& state, const Eigen::VectorXd& shift) {
  if (shift.size() != state.mean().size())
    throw std::invalid_argument("displace: shift size mismatch");
  return GaussianMacrostate(state.mean() + shift, state.cov());
}

double fidelity(const GaussianMacrostate& f, const GaussianMacrostate& g) {
  if (f.n_modes() != g.n_modes()) throw std::invalid_argument("fidelity: mode count mismatch");
  const Eigen::MatrixXd avg = 0.5 * (f.cov() + g.cov());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_avg(avg, Eigen::EigenvaluesOnly);
  const double avg_min = es_avg.eigenvalues().minCoeff();
  if (avg_min <= kTolPsd * scale_of(avg))
    throw std::domain_error("fidelity: average covariance is singular");

  auto log_det_psd = [](const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double ev = es.eigenvalues()(i);
      if (ev <= 0.0) return -std::numeric_limits<double>::infinity();
      acc += std::log(ev);
    }
    return acc;
  };

  const double ld_f = log_det_psd(f.cov());
  const double ld_g = log_det_psd(g.cov());
  if (std::isinf(ld_f) || std::isinf(ld_g)) return 0.0;  // degenerate (delta-like) input

  const Eigen::VectorXd dmu = f.mean() - g.mean();
  const double quad = dmu.dot(avg.ldlt().solve(dmu));
  const double log_fid = 0.25 * (ld_f + ld_g) - 0.5 * log_det_psd(avg) - 0.125 * quad;
  return std::exp(log_fid);
}

CloningWitness no_cloning_witness(const GaussianMacrostate& f, const GaussianMacrostate& g) {
  CloningWitness w;
  w.fidelity_value = fidelity(f, g);
  w.fidelity_squared = w.fidelity_value * w.fidelity_value;
  w.cloning_impossible =
      w.fidelity_value > kTolAlgebra && w.fidelity_value < 1.0 - kTolAlgebra;
  return w;
}

GaussianMacrostate epr_state(double c, double s) {
  if (s <= 0.0) throw std::invalid_argument("epr_state: squeezing width must be positive");

  // In the +/- coordinates u = (x1-x2)/sqrt2, v = (x1+x2)/sqrt2 (and the
  // matching momenta) the covariance is diagonal with both blocks
  // saturating the resolution bound at scale 1/2.
  Eigen::MatrixXd gamma_pm = Eigen::MatrixXd::Zero(4, 4);
  gamma_pm(0, 0) = 0.5 * s * s;        // Var(u)
  gamma_pm(1, 1) = 0.5 / (s * s);      // Var(p_u)
  gamma_pm(2, 2) = 0.5 / (s * s);      // Var(v)
  gamma_pm(3, 3) = 0.5 * s * s;        // Var(p_v)

  // z = B z_pm with z = (x1, p1, x2, p2).
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd b(4, 4);
  b << r, 0, r, 0,
       0, r, 0, r,
      -r, 0, r, 0,
       0, -r, 0, r;

  Eigen::VectorXd mean(4);
  mean << 0.0, 0.0, c, 0.0;  // x2 sits at x1 + c
  return GaussianMacrostate(std::move(mean), b * gamma_pm * b.transpose());
}

GaussianMacrostate condition_on_position(const GaussianMacrostate& state, int particle,
                                         double observed_x) {
  if (state.n_modes() != 2)
    throw std::invalid_argument("condition_on_position: expected a two-mode state");
  if (particle != 1 && particle != 2)
    throw std::invalid_argument("condition_on_position: particle must be 1 or 2");

  const int obs = particle == 1 ? 0 : 2;
  const int rest0 = particle == 1 ? 2 : 0;
  const Eigen::Vector2i rest(rest0, rest0 + 1);

  const double var_obs = state.cov()(obs, obs);
  if (var_obs <= kTolPsd * scale_of(state.cov()))
    throw std::domain_error("condition_on_position: conditioning variance is degenerate");

  Eigen::Vector2d cross;
  cross << state.cov()(rest(0), obs), state.cov()(rest(1), obs);

  Eigen::Vector2d mean_post;
  mean_post << state.mean()(rest(0)), state.mean()(rest(1));
  mean_post += cross * ((observed_x - state.mean()(obs)) / var_obs);

  Eigen::Matrix2d cov_post;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      cov_post(i, j) = state.cov()(rest(i), rest(j)) - cross(i) * cross(j) / var_obs;

  return GaussianMacrostate(mean_post, cov_post);
}

double density(const GaussianMacrostate& state, const Eigen::VectorXd& z) {
  if (z.size() != state.mean().size())
    throw std::invalid_argument("density: point has wrong dimension");
  const Eigen::Index d = z.size();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(state.cov());
  const double det = state.cov().determinant();
  if (!(det > 0.0))
    throw std::domain_error("density: covariance is singular, pointwise density undefined");
  const Eigen::VectorXd dz = z - state.mean();
  const double quad = dz.dot(ldlt.solve(dz));
  return std::exp(-0.5 * quad) / std::pow(2.0 * kPi, static_cast<double>(d) / 2.0) / std::sqrt(det);
}

std::vector<MarginalParams> marginals(const GaussianMacrostate& state) {
  std::vector<MarginalParams> out;
  for (Eigen::Index i = 0; i < state.mean().size(); ++i)
    out.push_back({state.mean()(i), state.cov()(i, i)});
  return out;
}

GaussianMacrostate random_rr_valid_state(int n_modes, RRScale lam, Rng& rng) {
  // Thermal diagonal nu_k * lambda >= lambda per mode, then a random
  // symplectic conjugation; positivity of gamma + i*lambda*Sigma is
  // preserved by congruence.  A third of the modes saturate (nu = 1) so
  // sweeps exercise the boundary of the valid set.
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double nu = rng.bernoulli(1.0 / 3.0) ? 1.0 : 1.0 + 3.0 * rng.uniform();
    gamma(2 * k, 2 * k) = nu * std::max(lam.value, 1e-3);
    gamma(2 * k + 1, 2 * k + 1) = nu * std::max(lam.value, 1e-3);
  }
  const SymplecticMatrix a = random_symplectic(n_modes, rng);
  Eigen::VectorXd mean(2 * n_modes);
  for (Eigen::Index i = 0; i < mean.size(); ++i) mean(i) = rng.uniform(-2.0, 2.0);
  return GaussianMacrostate(std::move(mean), a.entries().transpose() * gamma * a.entries());
}

SymplecticMatrix random_symplectic(int n_modes, Rng& rng) {
  SymplecticMatrix acc = SymplecticMatrix::identity(n_modes);
  const int factors = 2 + static_cast<int>(rng.index(4));
  for (int f = 0; f < factors; ++f) {
    // Beamsplitter mixing only for the exact two-mode case.
    const std::size_t kind = rng.index(n_modes == 2 ? 3 : 2);
    if (kind == 0) {
      const int mode = static_cast<int>(rng.index(static_cast<std::size_t>(n_modes)));
      acc = acc * SymplecticMatrix::embed(SymplecticMatrix::rotation(rng.uniform(0.0, 2.0 * kPi)),
                                          mode, n_modes);
    } else if (kind == 1) {
      const int mode = static_cast<int>(rng.index(static_cast<std::size_t>(n_modes)));
      acc = acc * SymplecticMatrix::embed(SymplecticMatrix::squeeze(std::exp(rng.uniform(-0.8, 0.8))),
                                          mode, n_modes);
    } else {
      acc = acc * SymplecticMatrix::beamsplitter_mix(rng.uniform(0.0, 2.0 * kPi));
    }
  }
  return acc;
}

}  // namespace qfound::phase
