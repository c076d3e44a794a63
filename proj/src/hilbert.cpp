#include "qfound/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qfound::hilbert {

namespace {
const Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

StateVector::StateVector(CVector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw std::invalid_argument("StateVector: empty amplitude list");
  const double n = amp_.norm();
  if (n < 1e-9) throw std::invalid_argument("StateVector: amplitudes have (near-)zero norm");
  amp_ /= n;
}

StateVector::StateVector(int dim, std::vector<Complex> amplitudes)
    : StateVector(Eigen::Map<CVector>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()))) {
  if (dim != static_cast<int>(amplitudes.size()))
    throw std::invalid_argument("StateVector: dim does not match amplitude count");
}

StateVector StateVector::basis_state(int dim, int index) {
  if (dim <= 0 || index < 0 || index >= dim)
    throw std::invalid_argument("StateVector::basis_state: index out of range");
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());  // Eigen dot conjugates the left argument
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return std::abs(std::abs(inner_product(a, b)) - 1.0) <= tol;
}

Operator::Operator(CMatrix entries) : mat_(std::move(entries)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw std::invalid_argument("Operator: matrix must be square and nonempty");
}

Operator Operator::identity(int dim) { return Operator(CMatrix::Identity(dim, dim)); }

Operator Operator::adjoint() const { return Operator(mat_.adjoint()); }

bool Operator::is_unitary(double tol) const {
  const CMatrix delta = mat_.adjoint() * mat_ - CMatrix::Identity(dim(), dim());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_selfadjoint(double tol) const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::operator*(const Operator& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("Operator*: dimension mismatch");
  return Operator(mat_ * rhs.mat_);
}

Operator Operator::operator+(const Operator& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("Operator+: dimension mismatch");
  return Operator(mat_ + rhs.mat_);
}

Operator Operator::operator-(const Operator& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("Operator-: dimension mismatch");
  return Operator(mat_ - rhs.mat_);
}

Operator Operator::scaled(Complex factor) const { return Operator(factor * mat_); }

MeasurementBasis::MeasurementBasis(std::vector<StateVector> vectors, double tol)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw std::invalid_argument("MeasurementBasis: no vectors");
  const int d = vectors_.front().dim();
  if (static_cast<int>(vectors_.size()) != d)
    throw std::invalid_argument("MeasurementBasis: need exactly dim vectors for completeness");
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    if (vectors_[j].dim() != d)
      throw std::invalid_argument("MeasurementBasis: mixed dimensions");
    for (std::size_t k = j + 1; k < vectors_.size(); ++k) {
      if (std::abs(inner_product(vectors_[j], vectors_[k])) >= tol)
        throw std::invalid_argument("MeasurementBasis: vectors " + std::to_string(j) + " and " +
                                    std::to_string(k) + " are not orthogonal");
    }
  }
}

MeasurementBasis MeasurementBasis::computational(int dim) {
  std::vector<StateVector> vecs;
  vecs.reserve(dim);
  for (int j = 0; j < dim; ++j) vecs.push_back(StateVector::basis_state(dim, j));
  return MeasurementBasis(std::move(vecs));
}

Eigen::VectorXd born_probabilities(const StateVector& state, const MeasurementBasis& basis) {
  if (state.dim() != basis.dim())
    throw std::invalid_argument("born_probabilities: dimension mismatch");
  Eigen::VectorXd p(basis.size());
  for (int j = 0; j < basis.size(); ++j) p(j) = std::norm(inner_product(basis.vector(j), state));
  return p;
}

StateVector collapse(const StateVector& state, const MeasurementBasis& basis, int outcome) {
  if (outcome < 0 || outcome >= basis.size())
    throw std::invalid_argument("collapse: outcome index out of range");
  const double p = std::norm(inner_product(basis.vector(outcome), state));
  if (p <= kTolAlgebra)
    throw std::domain_error("collapse: requested outcome has zero probability");
  return basis.vector(outcome);
}

StateVector apply_unitary(const Operator& u, const StateVector& state) {
  if (u.dim() != state.dim()) throw std::invalid_argument("apply_unitary: dimension mismatch");
  if (!u.is_unitary()) throw std::invalid_argument("apply_unitary: operator is not unitary");
  return StateVector(u.entries() * state.amplitudes());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  CVector out(static_cast<Eigen::Index>(a.dim()) * b.dim());
  for (int j = 0; j < a.dim(); ++j)
    for (int k = 0; k < b.dim(); ++k)
      out(static_cast<Eigen::Index>(j) * b.dim() + k) = a.amplitude(j) * b.amplitude(k);
  return StateVector(std::move(out));
}

Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim(), db = b.dim();
  CMatrix out(static_cast<Eigen::Index>(da) * db, static_cast<Eigen::Index>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(static_cast<Eigen::Index>(i) * db, static_cast<Eigen::Index>(j) * db, db, db) =
          a.entries()(i, j) * b.entries();
  return Operator(std::move(out));
}

Operator pauli(int axis) {
  CMatrix m(2, 2);
  switch (axis) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: axis must be 1, 2 or 3");
  }
  return Operator(std::move(m));
}

Operator beamsplitter() {
  CMatrix m(2, 2);
  m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return Operator(std::move(m));
}

StateVector singlet() {
  CVector v(4);
  v << 0, kInvSqrt2, -kInvSqrt2, 0;
  return StateVector(std::move(v));
}

StateVector ket0() { return StateVector::basis_state(2, 0); }
StateVector ket1() { return StateVector::basis_state(2, 1); }
StateVector ket_plus() { return StateVector(CVector{{kInvSqrt2, kInvSqrt2}}); }
StateVector ket_minus() { return StateVector(CVector{{kInvSqrt2, -kInvSqrt2}}); }
StateVector ket_plus_i() { return StateVector(CVector{{kInvSqrt2, kI * kInvSqrt2}}); }
StateVector ket_minus_i() { return StateVector(CVector{{kInvSqrt2, -kI * kInvSqrt2}}); }

MeasurementBasis pauli_eigenbasis(int axis) {
  switch (axis) {
    case 1:
      return MeasurementBasis({ket_plus(), ket_minus()});
    case 2:
      return MeasurementBasis({ket_plus_i(), ket_minus_i()});
    case 3:
      return MeasurementBasis({ket0(), ket1()});
    default:
      throw std::invalid_argument("pauli_eigenbasis: axis must be 1, 2 or 3");
  }
}

double expectation(const Operator& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  const Complex value = psi.amplitudes().dot(a.entries() * psi.amplitudes());
  return value.real();
}

BlochVector bloch_from_state(const StateVector& state) {
  if (state.dim() != 2) throw std::invalid_argument("bloch_from_state: state must be a qubit");
  return {expectation(pauli(1), state), expectation(pauli(2), state),
          expectation(pauli(3), state)};
}

StateVector state_from_bloch(const BlochVector& b) {
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("state_from_bloch: Bloch vector must be unit length");
  const double z = std::clamp(b.z, -1.0, 1.0);
  const double theta = std::acos(z);
  const double phi = std::atan2(b.y, b.x);
  CVector v(2);
  v << std::cos(theta / 2.0), std::exp(kI * phi) * std::sin(theta / 2.0);
  return StateVector(std::move(v));
}

double born_bloch(const BlochVector& phi, const BlochVector& psi) {
  if (std::abs(phi.norm() - 1.0) > 1e-9 || std::abs(psi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("born_bloch: inputs must be unit Bloch vectors");
  return 0.5 * (1.0 + phi.dot(psi));
}

std::array<double, 2> mach_zehnder(bool second_beamsplitter) {
  StateVector photon = ket0();
  photon = apply_unitary(beamsplitter(), photon);
  if (second_beamsplitter) photon = apply_unitary(beamsplitter(), photon);
  const Eigen::VectorXd p = born_probabilities(photon, MeasurementBasis::computational(2));
  return {p(0), p(1)};
}

bool cloning_contradiction(const StateVector& psi, const StateVector& phi) {
  const double overlap = std::abs(inner_product(phi, psi));
  return overlap > kTolAlgebra && overlap < 1.0 - kTolAlgebra;
}

}  // namespace qfound::hilbert
