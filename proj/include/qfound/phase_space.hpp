// phase_space.hpp
// Gaussian statistical mechanics on phase space under a resolution
// restriction: covariance (fluctuation) matrices, the gamma + i*lambda*Sigma
// positivity condition, symplectic evolution, Bhattacharyya fidelity and the
// no-cloning witness, the two-particle correlated state with Gaussian
// conditioning, and pointwise densities/marginals of the Gaussian family.
// Units: hbar = 1; the default resolution scale is 1/2.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qfound/common.hpp"

namespace qfound::phase {

// Nonnegative phase-space area bounding how sharp macrostates may be.
struct RRScale {
  double value = 0.5;

  explicit RRScale(double v = 0.5);
};

// Block-diagonal symplectic form with 2x2 blocks [[0,-1],[1,0]], mode
// ordering (x1, p1, x2, p2, ...).
Eigen::MatrixXd symplectic_form(int n_modes);

// Real 2N x 2N matrix A with A^T Sigma A = Sigma.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Eigen::MatrixXd a);

  static SymplecticMatrix identity(int n_modes);
  static SymplecticMatrix rotation(double theta);          // single mode
  static SymplecticMatrix squeeze(double s);               // diag(s, 1/s), s != 0
  static SymplecticMatrix beamsplitter_mix(double theta);  // two modes
  // Embeds a single-mode operation at the given mode of an N-mode system.
  static SymplecticMatrix embed(const SymplecticMatrix& single, int mode, int n_modes);

  int n_modes() const { return static_cast<int>(a_.rows()) / 2; }
  const Eigen::MatrixXd& entries() const { return a_; }

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

 private:
  Eigen::MatrixXd a_;
};

// Maximum-entropy phase-space distribution with the given first and second
// moments; when the resolution condition holds this doubles as the Wigner
// function of a Gaussian quantum state.
class GaussianMacrostate {
 public:
  GaussianMacrostate(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  static GaussianMacrostate vacuum(int n_modes, double rr_scale = 0.5);

  int n_modes() const { return static_cast<int>(mean_.size()) / 2; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

struct RRReport {
  bool satisfied = false;
  double margin = 0.0;  // smallest eigenvalue of gamma + i*lambda*Sigma
};

// Forms the Hermitian matrix gamma + i*lambda*Sigma and tests positive
// semidefiniteness (margin >= -kTolPsd, relative to the matrix scale).
RRReport rr_satisfied(const Eigen::MatrixXd& gamma, RRScale lam);
RRReport rr_satisfied(const GaussianMacrostate& state, RRScale lam);

// sqrt(gamma_xx * gamma_pp) per mode.
std::vector<double> uncertainty_product(const Eigen::MatrixXd& gamma);

// mean -> A^T mean, gamma -> A^T gamma A.
GaussianMacrostate evolve(const GaussianMacrostate& state, const SymplecticMatrix& a);

GaussianMacrostate displace(const GaussianMacrostate& state, const Eigen::VectorXd& shift);

// Bhattacharyya overlap integral of sqrt(f).sqrt(g), via the Gaussian closed
// form; 1 iff f = g, 0 only in degenerate limits.  Throws if the average
// covariance is singular.
double fidelity(const GaussianMacrostate& f, const GaussianMacrostate& g);

struct CloningWitness {
  double fidelity_value = 0.0;
  double fidelity_squared = 0.0;
  bool cloning_impossible = false;  // true exactly when 0 < F < 1
};

// A fidelity-preserving evolution would need F(f_S f_C, g_S g_C) to equal
// both F and F^2, so overlapping non-identical inputs admit no cloner.
CloningWitness no_cloning_witness(const GaussianMacrostate& f, const GaussianMacrostate& g);

// Two-mode state with Var(x1 - x2) = Var(p1 + p2) = s^2 and offset c between
// the positions; resolution-valid at scale 1/2 for every s > 0, approaching
// the ideal correlated pair as s -> 0.
GaussianMacrostate epr_state(double c, double s);

// Conditions the two-mode state on x_particle = observed_x and returns the
// remaining particle's one-mode posterior (Schur complement covariance).
GaussianMacrostate condition_on_position(const GaussianMacrostate& state, int particle,
                                         double observed_x);

// Gaussian pdf value at a phase-space point; throws on singular covariance.
double density(const GaussianMacrostate& state, const Eigen::VectorXd& z);

struct MarginalParams {
  double mean = 0.0;
  double variance = 0.0;
};

// Per-coordinate (mean, variance) in the order x1, p1, x2, p2, ...
std::vector<MarginalParams> marginals(const GaussianMacrostate& state);

// Random resolution-valid covariance via thermal diagonal plus random
// rotations, squeezes and mode mixing; valid at the given scale by
// construction.
GaussianMacrostate random_rr_valid_state(int n_modes, RRScale lam, Rng& rng);

// Random element composed from rotations, squeezers and (for n_modes >= 2)
// beamsplitter mixes.
SymplecticMatrix random_symplectic(int n_modes, Rng& rng);

}  // namespace qfound::phase
