#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qfound/hilbert.hpp"

using namespace qfound;
using namespace qfound::hilbert;

namespace {

constexpr double kPi = std::numbers::pi;

BlochVector random_bloch(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

StateVector random_qubit(Rng& rng) { return state_from_bloch(random_bloch(rng)); }

}  // namespace

TEST_CASE("born probabilities on standard states") {
  const MeasurementBasis z = MeasurementBasis::computational(2);

  const Eigen::VectorXd plus = born_probabilities(ket_plus(), z);
  CHECK(plus(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(plus(1) == doctest::Approx(0.5).epsilon(1e-12));

  const Eigen::VectorXd zero = born_probabilities(ket0(), z);
  CHECK(zero(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zero(1) == doctest::Approx(0.0).epsilon(1e-12));

  const StateVector tilted(CVector{{std::cos(kPi / 8.0), std::sin(kPi / 8.0)}});
  const Eigen::VectorXd p = born_probabilities(tilted, z);
  CHECK(p(0) == doctest::Approx(0.8535533905932737).epsilon(1e-12));
  CHECK(p(1) == doctest::Approx(0.1464466094067263).epsilon(1e-12));
  // Cross-check through the Bloch form.
  CHECK(p(0) ==
        doctest::Approx(born_bloch(bloch_from_state(ket0()), bloch_from_state(tilted)))
            .epsilon(1e-12));

  CHECK(std::abs(p.sum() - 1.0) < kTolAlgebra);
}

TEST_CASE("born probabilities input validation") {
  const MeasurementBasis z = MeasurementBasis::computational(2);
  CHECK_THROWS_AS(born_probabilities(StateVector::basis_state(3, 0), z), std::invalid_argument);
  // Non-orthogonal vectors are rejected at basis construction.
  CHECK_THROWS_AS(MeasurementBasis({ket0(), ket_plus()}), std::invalid_argument);
  // Too few vectors cannot form a complete basis.
  CHECK_THROWS_AS(MeasurementBasis({StateVector::basis_state(3, 0),
                                    StateVector::basis_state(3, 1)}),
                  std::invalid_argument);
}

TEST_CASE("collapse") {
  const MeasurementBasis z = MeasurementBasis::computational(2);
  CHECK(equal_up_to_phase(collapse(ket_plus(), z, 0), ket0()));
  CHECK(equal_up_to_phase(collapse(ket0(), z, 0), ket0()));
  CHECK_THROWS_AS(collapse(ket0(), z, 1), std::domain_error);
  CHECK_THROWS_AS(collapse(ket0(), z, 5), std::invalid_argument);
}

TEST_CASE("apply_unitary") {
  const StateVector psi = ket_plus();
  CHECK(equal_up_to_phase(apply_unitary(Operator::identity(2), psi), psi));
  CHECK(equal_up_to_phase(apply_unitary(beamsplitter(), ket0()), ket_plus()));
  CHECK(equal_up_to_phase(apply_unitary(pauli(1), ket0()), ket1()));

  const Operator not_unitary = pauli(3) + pauli(1);
  CHECK_FALSE(not_unitary.is_unitary());
  CHECK_THROWS_AS(apply_unitary(not_unitary, ket0()), std::invalid_argument);
}

TEST_CASE("unitary evolution preserves inner products") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    // Random word in the Paulis and the beamsplitter.
    Operator u = Operator::identity(2);
    const int len = 1 + static_cast<int>(rng.index(5));
    for (int i = 0; i < len; ++i) {
      const std::size_t pick = rng.index(4);
      u = u * (pick < 3 ? pauli(static_cast<int>(pick) + 1) : beamsplitter());
    }
    REQUIRE(u.is_unitary());
    const StateVector a = random_qubit(rng), b = random_qubit(rng);
    const double before = std::abs(inner_product(a, b));
    const double after = std::abs(inner_product(apply_unitary(u, a), apply_unitary(u, b)));
    CHECK(std::abs(after - before) < kTolAlgebra);
    CHECK(std::abs(apply_unitary(u, a).amplitudes().norm() - 1.0) < kTolAlgebra);
  }
}

TEST_CASE("tensor products") {
  const StateVector zero_one = tensor(ket0(), ket1());
  CHECK(equal_up_to_phase(zero_one, StateVector::basis_state(4, 1)));

  CHECK(expectation(tensor(pauli(3), Operator::identity(2)), singlet()) ==
        doctest::Approx(0.0).epsilon(1e-12));

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const StateVector t = tensor(random_qubit(rng), random_qubit(rng));
    CHECK(std::abs(t.amplitudes().norm() - 1.0) < kTolAlgebra);
  }
}

TEST_CASE("pauli matrices and singlet") {
  // Commutator from the matrices themselves: [s1, s2] = 2i s3.
  const Operator comm = pauli(1) * pauli(2) - pauli(2) * pauli(1);
  const CMatrix expected = Complex(0.0, 2.0) * pauli(3).entries();
  CHECK((comm.entries() - expected).cwiseAbs().maxCoeff() < kTolAlgebra);

  for (int axis : {1, 2, 3}) {
    CHECK(pauli(axis).is_selfadjoint());
    CHECK(pauli(axis).is_unitary());  // involutive and self-adjoint: eigenvalues +/-1
    CHECK(std::abs(pauli(axis).entries().trace()) < kTolAlgebra);
  }
  CHECK_THROWS_AS(pauli(0), std::invalid_argument);

  CHECK(std::abs(std::abs(inner_product(singlet(), singlet())) - 1.0) < kTolAlgebra);
}

TEST_CASE("bloch round trip") {
  const BlochVector b0 = bloch_from_state(ket0());
  CHECK(b0.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b0.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b0.z == doctest::Approx(1.0).epsilon(1e-12));

  const BlochVector bp = bloch_from_state(ket_plus());
  CHECK(bp.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(bp.y) < kTolAlgebra);
  CHECK(std::abs(bp.z) < kTolAlgebra);

  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const StateVector psi = random_qubit(rng);
    CHECK(equal_up_to_phase(state_from_bloch(bloch_from_state(psi)), psi, 1e-9));
  }

  CHECK_THROWS_AS(bloch_from_state(StateVector::basis_state(4, 0)), std::invalid_argument);
}

TEST_CASE("born_bloch matches the Hilbert-space rule") {
  const BlochVector up{0, 0, 1};
  CHECK(born_bloch(up, up) == doctest::Approx(1.0));
  CHECK(born_bloch(up, up.negated()) == doctest::Approx(0.0));

  // Axes at 45 degrees: dot 1/sqrt2.
  const BlochVector tilted{1.0 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0)};
  CHECK(born_bloch(up, tilted) == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(born_bloch(up, BlochVector{0, 0, 2}), std::invalid_argument);

  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector phi = random_bloch(rng), psi = random_bloch(rng);
    const MeasurementBasis basis({state_from_bloch(phi), state_from_bloch(phi.negated())});
    const double via_hilbert = born_probabilities(state_from_bloch(psi), basis)(0);
    CHECK(std::abs(born_bloch(phi, psi) - via_hilbert) < 1e-10);
  }
}

TEST_CASE("complementarity of the pauli bases") {
  for (int prep_axis : {1, 2, 3}) {
    const MeasurementBasis prep_basis = pauli_eigenbasis(prep_axis);
    for (int meas_axis : {1, 2, 3}) {
      if (meas_axis == prep_axis) continue;
      for (int v = 0; v < 2; ++v) {
        const Eigen::VectorXd p =
            born_probabilities(prep_basis.vector(v), pauli_eigenbasis(meas_axis));
        CHECK(std::abs(p(0) - 0.5) < kTolAlgebra);
        CHECK(std::abs(p(1) - 0.5) < kTolAlgebra);
      }
    }
  }
}

TEST_CASE("mach-zehnder detector statistics") {
  const auto with_bs2 = mach_zehnder(true);
  CHECK(with_bs2[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(with_bs2[1] == doctest::Approx(0.0).epsilon(1e-12));

  const auto without = mach_zehnder(false);
  CHECK(without[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(without[1] == doctest::Approx(0.5).epsilon(1e-12));

  const Operator bs2 = beamsplitter() * beamsplitter();
  CHECK((bs2.entries() - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < kTolAlgebra);
}

TEST_CASE("cloning contradiction region") {
  CHECK(cloning_contradiction(ket0(), ket_plus()));
  CHECK_FALSE(cloning_contradiction(ket0(), ket0()));
  CHECK_FALSE(cloning_contradiction(ket0(), ket1()));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const StateVector psi = random_qubit(rng), phi = random_qubit(rng);
    const double ip = std::abs(inner_product(phi, psi));
    if (ip > kTolAlgebra && ip < 1.0 - kTolAlgebra) {
      CHECK(cloning_contradiction(psi, phi));
      CHECK(std::abs(ip - ip * ip) > 0.0);  // the two evaluation routes disagree
    }
  }
}

TEST_CASE("state vector validation") {
  CHECK_THROWS_AS(StateVector(CVector::Zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis_state(2, 2), std::invalid_argument);
  // Construction normalizes.
  const StateVector s(CVector{{2.0, 0.0}});
  CHECK(std::abs(s.amplitude(0) - Complex(1.0, 0.0)) < kTolAlgebra);
}
