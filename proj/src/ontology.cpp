#include "qfound/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfound::ontology {

namespace {
constexpr double kPi = std::numbers::pi;
}

FiniteOntologicalModel::FiniteOntologicalModel(int lambda_count, PrepMap preparations,
                                               ResponseMap responses)
    : lambda_count_(lambda_count),
      preparations_(std::move(preparations)),
      responses_(std::move(responses)) {
  if (lambda_count_ <= 0)
    throw std::invalid_argument("FiniteOntologicalModel: lambda_count must be positive");
  for (const auto& [label, p] : preparations_) {
    if (p.size() != lambda_count_)
      throw std::invalid_argument("FiniteOntologicalModel: preparation '" + label +
                                  "' has wrong length");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p(i) < -kTolAlgebra)
        throw std::invalid_argument("FiniteOntologicalModel: preparation '" + label +
                                    "' has a negative entry at lambda " + std::to_string(i));
      sum += p(i);
    }
    if (std::abs(sum - 1.0) > kTolAlgebra)
      throw std::invalid_argument("FiniteOntologicalModel: preparation '" + label +
                                  "' sums to " + std::to_string(sum) + ", not 1");
  }
  for (const auto& [label, r] : responses_) {
    if (r.rows() != lambda_count_)
      throw std::invalid_argument("FiniteOntologicalModel: response table '" + label +
                                  "' has wrong row count");
    if (r.cols() < 1)
      throw std::invalid_argument("FiniteOntologicalModel: response table '" + label +
                                  "' has no outcomes");
    for (Eigen::Index lam = 0; lam < r.rows(); ++lam) {
      double sum = 0.0;
      for (Eigen::Index k = 0; k < r.cols(); ++k) {
        const double v = r(lam, k);
        if (v < -kTolAlgebra || v > 1.0 + kTolAlgebra)
          throw std::invalid_argument("FiniteOntologicalModel: response '" + label +
                                      "' outside [0,1] at lambda " + std::to_string(lam));
        sum += v;
      }
      if (std::abs(sum - 1.0) > kTolAlgebra)
        throw std::invalid_argument("FiniteOntologicalModel: responses of '" + label +
                                    "' at lambda " + std::to_string(lam) + " sum to " +
                                    std::to_string(sum) + ", not 1");
    }
  }
}

const Eigen::VectorXd& FiniteOntologicalModel::preparation(const std::string& label) const {
  auto it = preparations_.find(label);
  if (it == preparations_.end())
    throw std::invalid_argument("FiniteOntologicalModel: unknown preparation '" + label + "'");
  return it->second;
}

const Eigen::MatrixXd& FiniteOntologicalModel::response(const std::string& label) const {
  auto it = responses_.find(label);
  if (it == responses_.end())
    throw std::invalid_argument("FiniteOntologicalModel: unknown measurement '" + label + "'");
  return it->second;
}

double predicted_probability(const FiniteOntologicalModel& model, const std::string& prep,
                             const std::string& meas, int outcome) {
  const Eigen::VectorXd& p = model.preparation(prep);
  const Eigen::MatrixXd& r = model.response(meas);
  if (outcome < 0 || outcome >= r.cols())
    throw std::invalid_argument("predicted_probability: outcome index out of range for '" +
                                meas + "'");
  return r.col(outcome).dot(p);
}

ReproductionReport reproduces_quantum(const FiniteOntologicalModel& model,
                                      const QuantumAssignment& qa, double tol) {
  ReproductionReport report;
  for (const auto& [prep_label, psi] : qa.states) {
    for (const auto& [meas_label, basis] : qa.bases) {
      const Eigen::MatrixXd& table = model.response(meas_label);
      if (table.cols() != basis.size())
        throw std::invalid_argument("reproduces_quantum: outcome count mismatch for '" +
                                    meas_label + "'");
      const Eigen::VectorXd born = hilbert::born_probabilities(psi, basis);
      for (int k = 0; k < basis.size(); ++k) {
        const double predicted = predicted_probability(model, prep_label, meas_label, k);
        const double dev = std::abs(predicted - born(k));
        if (dev > report.max_deviation) {
          report.max_deviation = dev;
          report.worst_prep = prep_label;
          report.worst_meas = meas_label;
          report.worst_outcome = k;
        }
      }
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

OrthodoxModel orthodox_model(
    const std::vector<std::pair<std::string, hilbert::StateVector>>& states,
    const std::vector<std::pair<std::string, hilbert::MeasurementBasis>>& bases) {
  if (states.empty()) throw std::invalid_argument("orthodox_model: no states");

  // Phase-equivalent states share a microstate.
  std::vector<int> state_to_lambda(states.size());
  std::vector<const hilbert::StateVector*> representatives;
  for (std::size_t i = 0; i < states.size(); ++i) {
    int found = -1;
    for (std::size_t r = 0; r < representatives.size(); ++r) {
      if (hilbert::equal_up_to_phase(*representatives[r], states[i].second)) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) {
      representatives.push_back(&states[i].second);
      found = static_cast<int>(representatives.size()) - 1;
    }
    state_to_lambda[i] = found;
  }

  const int n = static_cast<int>(representatives.size());
  FiniteOntologicalModel::PrepMap preps;
  for (std::size_t i = 0; i < states.size(); ++i) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    p(state_to_lambda[i]) = 1.0;
    preps[states[i].first] = std::move(p);
  }

  FiniteOntologicalModel::ResponseMap resps;
  QuantumAssignment qa;
  for (const auto& [label, basis] : bases) {
    Eigen::MatrixXd table(n, basis.size());
    for (int lam = 0; lam < n; ++lam) {
      const Eigen::VectorXd born = hilbert::born_probabilities(*representatives[static_cast<std::size_t>(lam)], basis);
      // Renormalize away ulp-level residue so rows sum to 1 exactly.
      table.row(lam) = (born / born.sum()).transpose();
    }
    resps[label] = std::move(table);
    qa.bases.insert({label, basis});
  }
  for (const auto& [label, psi] : states) qa.states.insert({label, psi});

  return {FiniteOntologicalModel(n, std::move(preps), std::move(resps)), std::move(qa)};
}

std::vector<int> support(const FiniteOntologicalModel& model, const std::string& prep,
                         double tol) {
  const Eigen::VectorXd& p = model.preparation(prep);
  std::vector<int> out;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > tol) out.push_back(static_cast<int>(i));
  return out;
}

OverlapReport overlap(const FiniteOntologicalModel& model, const std::string& prep1,
                      const std::string& prep2, double tol) {
  const Eigen::VectorXd& p1 = model.preparation(prep1);
  const Eigen::VectorXd& p2 = model.preparation(prep2);
  OverlapReport report;
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    const double m = std::min(p1(i), p2(i));
    report.variational_overlap += m;
    if (p1(i) > tol && p2(i) > tol) report.common_support_mass += m;
  }
  return report;
}

SpherePoint::SpherePoint(Eigen::Vector3d value) : v(std::move(value)) {
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("SpherePoint: vector must be unit length");
}

double ks_density(const SpherePoint& lambda, const hilbert::BlochVector& psi) {
  const double d = lambda.dot(psi);
  return d > 0.0 ? d / kPi : 0.0;
}

int ks_response(const hilbert::BlochVector& phi, const SpherePoint& lambda) {
  return lambda.dot(phi) >= 0.0 ? 1 : 0;
}

namespace {

void check_resolution(SphereResolution res) {
  if (res.n_theta < 16 || res.n_phi < 32)
    throw std::invalid_argument("sphere quadrature: resolution below the 16x32 minimum");
}

// Midpoint product rule over (theta, phi) with sin(theta) weight; the
// summation order is fixed by cell index so results do not depend on any
// parallel partitioning.
template <typename CellFn>
double sphere_quadrature(SphereResolution res, CellFn&& f) {
  check_resolution(res);
  const double dth = kPi / res.n_theta;
  const double dph = 2.0 * kPi / res.n_phi;
  double total = 0.0;
  for (int i = 0; i < res.n_theta; ++i) {
    const double theta = (i + 0.5) * dth;
    const double st = std::sin(theta), ct = std::cos(theta);
    double ring = 0.0;
    for (int j = 0; j < res.n_phi; ++j) {
      const double phi = (j + 0.5) * dph;
      const Eigen::Vector3d lam(st * std::cos(phi), st * std::sin(phi), ct);
      ring += f(lam);
    }
    total += ring * st;
  }
  return total * dth * dph;
}

double dot3(const Eigen::Vector3d& v, const hilbert::BlochVector& b) {
  return v.x() * b.x + v.y() * b.y + v.z() * b.z;
}

void check_unit(const hilbert::BlochVector& b, const char* who) {
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": Bloch vector must be unit length");
}

}  // namespace

double ks_predicted(const hilbert::BlochVector& phi, const hilbert::BlochVector& psi,
                    SphereResolution res) {
  check_unit(phi, "ks_predicted");
  check_unit(psi, "ks_predicted");
  return sphere_quadrature(res, [&](const Eigen::Vector3d& lam) {
    const double dpsi = dot3(lam, psi);
    if (dpsi <= 0.0 || dot3(lam, phi) < 0.0) return 0.0;
    return dpsi / kPi;
  });
}

double ks_overlap(const hilbert::BlochVector& psi1, const hilbert::BlochVector& psi2,
                  SphereResolution res) {
  check_unit(psi1, "ks_overlap");
  check_unit(psi2, "ks_overlap");
  return sphere_quadrature(res, [&](const Eigen::Vector3d& lam) {
    const double d = std::min(dot3(lam, psi1), dot3(lam, psi2));
    return d > 0.0 ? d / kPi : 0.0;
  });
}

SpherePoint sample_ks(const hilbert::BlochVector& psi, Rng& rng) {
  check_unit(psi, "sample_ks");
  const double cos_theta = std::sqrt(rng.uniform());
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double azimuth = rng.uniform(0.0, 2.0 * kPi);

  // Local frame with e3 along Psi.
  const Eigen::Vector3d e3(psi.x, psi.y, psi.z);
  Eigen::Vector3d seed = std::abs(e3.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
  const Eigen::Vector3d e1 = e3.cross(seed).normalized();
  const Eigen::Vector3d e2 = e3.cross(e1);

  Eigen::Vector3d lam = cos_theta * e3 +
                        sin_theta * (std::cos(azimuth) * e1 + std::sin(azimuth) * e2);
  return SpherePoint(lam.normalized());
}

FiniteOntologicalModel discretize_ks(
    SphereResolution res,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& preparations,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& measurement_axes) {
  check_resolution(res);
  const int n = res.n_theta * res.n_phi;
  const double dth = kPi / res.n_theta;
  const double dph = 2.0 * kPi / res.n_phi;

  std::vector<Eigen::Vector3d> centers;
  std::vector<double> weights;
  centers.reserve(static_cast<std::size_t>(n));
  weights.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < res.n_theta; ++i) {
    const double theta = (i + 0.5) * dth;
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < res.n_phi; ++j) {
      const double phi = (j + 0.5) * dph;
      centers.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
      weights.push_back(st * dth * dph);
    }
  }

  FiniteOntologicalModel::PrepMap preps;
  for (const auto& [label, psi] : preparations) {
    check_unit(psi, "discretize_ks");
    Eigen::VectorXd p(n);
    for (int c = 0; c < n; ++c) {
      const double d = dot3(centers[static_cast<std::size_t>(c)], psi);
      p(c) = (d > 0.0 ? d / kPi : 0.0) * weights[static_cast<std::size_t>(c)];
    }
    p /= p.sum();  // quadrature weights sum to 1 only up to grid error
    preps[label] = std::move(p);
  }

  FiniteOntologicalModel::ResponseMap resps;
  for (const auto& [label, axis] : measurement_axes) {
    check_unit(axis, "discretize_ks");
    Eigen::MatrixXd table(n, 2);
    for (int c = 0; c < n; ++c) {
      const int r = dot3(centers[static_cast<std::size_t>(c)], axis) >= 0.0 ? 1 : 0;
      table(c, 0) = r;
      table(c, 1) = 1 - r;
    }
    resps[label] = std::move(table);
  }

  return FiniteOntologicalModel(n, std::move(preps), std::move(resps));
}

QuantumAssignment ks_assignment(
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& preparations,
    const std::vector<std::pair<std::string, hilbert::BlochVector>>& measurement_axes) {
  QuantumAssignment qa;
  for (const auto& [label, psi] : preparations)
    qa.states.insert({label, hilbert::state_from_bloch(psi)});
  for (const auto& [label, axis] : measurement_axes) {
    qa.bases.insert({label, hilbert::MeasurementBasis({hilbert::state_from_bloch(axis),
                                                       hilbert::state_from_bloch(axis.negated())})});
  }
  return qa;
}

}  // namespace qfound::ontology
