// hilbert.hpp
// Finite-dimensional quantum mechanics core: state vectors, operators,
// orthonormal measurement bases, Born probabilities, collapse, unitary
// dynamics, tensor products, and the qubit/Bloch-sphere machinery.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qfound/common.hpp"

namespace qfound::hilbert {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Unit vector in a finite-dimensional complex Hilbert space.  The
// constructor normalizes, so every instance has norm 1 to machine
// precision; states differing by a global phase are physically equivalent
// (compare with equal_up_to_phase).
class StateVector {
 public:
  explicit StateVector(CVector amplitudes);
  StateVector(int dim, std::vector<Complex> amplitudes);

  // |index> in the computational basis.
  static StateVector basis_state(int dim, int index);

  int dim() const { return static_cast<int>(amp_.size()); }
  const CVector& amplitudes() const { return amp_; }
  Complex amplitude(int j) const { return amp_(j); }

 private:
  CVector amp_;
};

// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);

// True iff a and b agree up to a global phase of unit modulus,
// i.e. |<a|b>| = 1 within tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = kTolAlgebra);

class Operator {
 public:
  explicit Operator(CMatrix entries);
  static Operator identity(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& entries() const { return mat_; }

  Operator adjoint() const;
  bool is_unitary(double tol = kTolAlgebra) const;
  bool is_selfadjoint(double tol = kTolAlgebra) const;

  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator scaled(Complex factor) const;

 private:
  CMatrix mat_;
};

// Complete orthonormal basis {|Phi_j>}: pairwise |<Phi_j|Phi_k>| < tol for
// j != k, each vector normalized, and exactly dim vectors.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(std::vector<StateVector> vectors,
                            double tol = kTolAlgebra);
  static MeasurementBasis computational(int dim);

  int dim() const { return vectors_.front().dim(); }
  int size() const { return static_cast<int>(vectors_.size()); }
  const StateVector& vector(int j) const { return vectors_.at(j); }

 private:
  std::vector<StateVector> vectors_;
};

// Real three-vector on (or inside numerically) the Bloch sphere.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector negated() const { return {-x, -y, -z}; }
};

// (|<Phi_j|Psi>|^2)_j; entries >= 0, sums to 1 within kTolAlgebra.
Eigen::VectorXd born_probabilities(const StateVector& state,
                                   const MeasurementBasis& basis);

// State update on obtaining `outcome`; throws if that outcome has
// probability <= kTolAlgebra.
StateVector collapse(const StateVector& state, const MeasurementBasis& basis,
                     int outcome);

StateVector apply_unitary(const Operator& u, const StateVector& state);

StateVector tensor(const StateVector& a, const StateVector& b);
Operator tensor(const Operator& a, const Operator& b);

// Pauli matrices sigma_1, sigma_2, sigma_3 (axis in {1,2,3}).
Operator pauli(int axis);

// 50/50 beamsplitter, (1/sqrt2) [[1,1],[1,-1]]; involutive.
Operator beamsplitter();

// (|0>|1> - |1>|0>)/sqrt2
StateVector singlet();

StateVector ket0();
StateVector ket1();
StateVector ket_plus();
StateVector ket_minus();
StateVector ket_plus_i();
StateVector ket_minus_i();

// Eigenbasis of pauli(axis), ordered (+1 eigenstate, -1 eigenstate).
MeasurementBasis pauli_eigenbasis(int axis);

// <psi|A|psi> (real part; intended for self-adjoint A).
double expectation(const Operator& a, const StateVector& psi);

// Bloch vector (<sigma_1>, <sigma_2>, <sigma_3>) of a qubit state.
BlochVector bloch_from_state(const StateVector& state);

// Reconstructs cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>; inverse of
// bloch_from_state up to global phase.
StateVector state_from_bloch(const BlochVector& b);

// (1 + Phi.Psi)/2 for unit Bloch vectors.
double born_bloch(const BlochVector& phi, const BlochVector& psi);

// Detector distribution (D0, D1) of the two-arm interferometer, computed by
// composing beamsplitter unitaries and born_probabilities.
std::array<double, 2> mach_zehnder(bool second_beamsplitter);

// True exactly when 0 < |<phi|psi>| < 1 (within kTolAlgebra), i.e. when a
// unitary cloner for the pair would contradict inner-product preservation.
bool cloning_contradiction(const StateVector& psi, const StateVector& phi);

}  // namespace qfound::hilbert
