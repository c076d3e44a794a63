// ontology.hpp
// Statistical models beneath quantum statistics: finite microstate spaces
// with preparation distributions p(lambda|Psi) and response functions
// p(k|lambda), Born-rule reproduction checking, support/overlap analysis,
// and the Kochen-Specker sphere model for a qubit with quadrature,
// discretization, and exact sampling.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfound/common.hpp"
#include "qfound/hilbert.hpp"

namespace qfound::ontology {

// Finite microstate space Lambda of size N, preparation distributions over
// Lambda keyed by preparation label, and per-measurement response tables
// (N rows, one column per outcome; rows are conditional distributions).
class FiniteOntologicalModel {
 public:
  using PrepMap = std::map<std::string, Eigen::VectorXd>;
  using ResponseMap = std::map<std::string, Eigen::MatrixXd>;

  FiniteOntologicalModel(int lambda_count, PrepMap preparations, ResponseMap responses);

  int lambda_count() const { return lambda_count_; }
  const PrepMap& preparations() const { return preparations_; }
  const ResponseMap& responses() const { return responses_; }

  const Eigen::VectorXd& preparation(const std::string& label) const;
  const Eigen::MatrixXd& response(const std::string& label) const;

 private:
  int lambda_count_;
  PrepMap preparations_;
  ResponseMap responses_;
};

// Binds model labels to the quantum objects whose statistics the model
// claims to reproduce.
struct QuantumAssignment {
  std::map<std::string, hilbert::StateVector> states;
  std::map<std::string, hilbert::MeasurementBasis> bases;
};

// sum_lambda p(outcome|lambda) p(lambda|prep)
double predicted_probability(const FiniteOntologicalModel& model, const std::string& prep,
                             const std::string& meas, int outcome);

struct ReproductionReport {
  bool pass = true;
  double max_deviation = 0.0;
  std::string worst_prep;
  std::string worst_meas;
  int worst_outcome = -1;
};

// Compares predicted_probability to the Born rule for every
// (preparation, measurement, outcome) triple named in the assignment.
ReproductionReport reproduces_quantum(const FiniteOntologicalModel& model,
                                      const QuantumAssignment& qa, double tol);

struct OrthodoxModel {
  FiniteOntologicalModel model;
  QuantumAssignment assignment;
};

// Lambda = one point per (phase-inequivalent) state, preparations are point
// masses, responses carry the Born probabilities; reproduces quantum
// statistics by construction.  Phase-equivalent duplicate states collapse
// onto the same microstate.
OrthodoxModel orthodox_model(const std::vector<std::pair<std::string, hilbert::StateVector>>& states,
                             const std::vector<std::pair<std::string, hilbert::MeasurementBasis>>& bases);

// {lambda : p(lambda|prep) > tol}
std::vector<int> support(const FiniteOntologicalModel& model, const std::string& prep,
                         double tol = kTolSupport);

struct OverlapReport {
  double variational_overlap = 0.0;   // sum_lambda min(p1, p2)
  double common_support_mass = 0.0;   // same sum restricted to the common support
};

OverlapReport overlap(const FiniteOntologicalModel& model, const std::string& prep1,
                      const std::string& prep2, double tol = kTolSupport);

// Unit vector on the sphere of microstates.
struct SpherePoint {
  Eigen::Vector3d v;

  explicit SpherePoint(Eigen::Vector3d value);
  double dot(const hilbert::BlochVector& b) const { return v.x() * b.x + v.y() * b.y + v.z() * b.z; }
};

struct SphereResolution {
  int n_theta = 400;
  int n_phi = 800;
};

// Sphere-model preparation density (1/pi) max(lambda.Psi, 0).  The step
// convention at lambda.Psi = 0 is inclusive (a measure-zero set).
double ks_density(const SpherePoint& lambda, const hilbert::BlochVector& psi);

// Deterministic response: 1 iff lambda.Phi >= 0 (ties resolved to the Phi
// outcome; measure zero under every integral used here).
int ks_response(const hilbert::BlochVector& phi, const SpherePoint& lambda);

// Midpoint product quadrature of ks_response * ks_density over the sphere;
// converges to the Born value (1 + Phi.Psi)/2.  Throws if the resolution is
// below 16 x 32.
double ks_predicted(const hilbert::BlochVector& phi, const hilbert::BlochVector& psi,
                    SphereResolution res);

// Integral of min(p(.|psi1), p(.|psi2)) over the sphere: 0 iff antipodal,
// 1 iff equal.
double ks_overlap(const hilbert::BlochVector& psi1, const hilbert::BlochVector& psi2,
                  SphereResolution res);

// Exact sampler for the sphere-model density: cos(theta) about Psi has
// density 2cos(theta)sin(theta) on [0, pi/2] (inverse CDF: cos(theta) =
// sqrt(u)), azimuth uniform.
SpherePoint sample_ks(const hilbert::BlochVector& psi, Rng& rng);

// Finite model on the (theta, phi) midpoint grid with sin(theta) weights.
// Each measurement axis Phi contributes a two-outcome response (Phi outcome
// first).  Preparation vectors are renormalized to sum exactly to 1.
FiniteOntologicalModel discretize_ks(
    SphereResolution res,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& preparations,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& measurement_axes);

// Assignment matching discretize_ks: states via the Bloch parameterization,
// bases {Phi outcome, antipodal outcome}.
QuantumAssignment ks_assignment(
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& preparations,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& measurement_axes);

}  // namespace qfound::ontology
