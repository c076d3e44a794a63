// nonclassicality.hpp
// The three no-go verifiers: the CHSH game with exhaustive classical
// analysis, locally-causal model evaluation and the entangled quantum
// strategy; the finite-microstate support-counting bound for families of
// pairwise non-orthogonal states; and the two-system overlap contradiction
// under preparation independence.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qfound/common.hpp"
#include "qfound/hilbert.hpp"
#include "qfound/ontology.hpp"

namespace qfound::nonclassical {

// Pre-agreed answers; true = "yes".
struct DeterministicStrategy {
  bool a0 = false;
  bool a1 = false;
  bool b0 = false;
  bool b1 = false;
};

// Win iff answers differ on the (1,1) question pair and agree on the rest.
bool winning_predicate(int x, int y, bool ax, bool by);

// Win probability under uniformly random questions; always in
// {0, 1/4, 1/2, 3/4} (the four constraints cannot all hold).
double evaluate_deterministic(const DeterministicStrategy& s);

std::array<DeterministicStrategy, 16> all_deterministic_strategies();

// Shared randomness lambda with locally factorized response tables:
// alice_yes(x, lambda) = P(A_x = yes | x, lambda), same for Bob.
struct LHVModel {
  Eigen::VectorXd weights;     // p(lambda)
  Eigen::MatrixXd alice_yes;   // 2 x N
  Eigen::MatrixXd bob_yes;     // 2 x N

  void validate() const;
};

double evaluate_lhv(const LHVModel& model);

// Entangled two-qubit strategy: per-question +/-1-valued observables and
// answer maps from the outcome sign.
struct QuantumStrategy {
  hilbert::StateVector shared;
  std::array<hilbert::Operator, 2> alice_obs;
  std::array<hilbert::Operator, 2> bob_obs;
  std::array<bool, 2> alice_yes_on_plus;  // per question: does +1 mean "yes"?
  std::array<bool, 2> bob_yes_on_plus;

  void validate() const;
};

// Singlet shared state; Alice measures sigma_3 / sigma_1 answering yes on
// -1; Bob measures (sigma_3 +/- sigma_1)/sqrt2 answering yes on +1.
QuantumStrategy canonical_quantum_strategy();

// Joint outcome distribution from the commuting eigenprojectors
// (1 +/- A)/2 (x) (1 +/- B)/2 on the shared state, answer maps applied,
// averaged over uniform questions.
double evaluate_quantum(const QuantumStrategy& qs);

using Strategy = std::variant<DeterministicStrategy, LHVModel, QuantumStrategy>;

struct SimulationResult {
  double frequency = 0.0;
  double analytic = 0.0;
  double sigma = 0.0;  // binomial standard deviation of the frequency
  long long wins = 0;
  long long rounds = 0;

  bool within_3_sigma() const { return std::abs(frequency - analytic) <= 3.0 * sigma; }
};

// Per-round sampling of questions, hidden variables / outcomes and answers.
// Rounds are processed in fixed-size chunks whose generators are seeded as
// seed + chunk_index, so the result is independent of any parallel split.
SimulationResult simulate_game(const Strategy& strategy, long long rounds, std::uint64_t seed);

// |Psi_j> = cos(j pi / 2M)|0> + sin(j pi / 2M)|1>, j = 0..M-1; pairwise
// non-orthogonal and non-identical for every finite M >= 2.
std::vector<hilbert::StateVector> hardy_states(int m);

// Assignment for hardy_states(m): preparations "psi0".."psi{M-1}" and bases
// "meas0".."meas{M-1}", where basis j lists |Psi_j> first.
ontology::QuantumAssignment hardy_assignment(int m);

struct HardyWitness {
  enum class Kind { StatisticsDeviation, CertaintyViolation, SupportEquality };
  Kind kind;
  int j = -1;
  int k = -1;        // second state for SupportEquality; lambda for CertaintyViolation
  double deviation = 0.0;
  std::string describe() const;
};

struct HardyVerdict {
  bool reproduces = false;          // statistics + certainty conditions hold
  int distinct_support_count = 0;
  int required_bound = 0;           // ceil(log2 M)
  bool bound_satisfied = false;     // 2^N >= M
  bool accepted = false;            // reproduces, all supports distinct, bound holds
  std::optional<HardyWitness> witness;
};

// Checks (i) Born reproduction within tol, (ii) the certainty condition
// p(Psi_j | lambda) = 1 on the support of p(lambda | Psi_j), (iii) pairwise
// distinctness of the M supports, (iv) 2^N >= M.  The assignment must bind
// M preparations to hardy_states(m) and, for each state, a basis containing
// it.
HardyVerdict hardy_check(const ontology::FiniteOntologicalModel& model,
                         const ontology::QuantumAssignment& qa, int m, double tol);

// The entangled two-qubit basis whose outcome jk is orthogonal to the
// product preparation jk.
hilbert::MeasurementBasis pbr_basis();

// {|0>,|+>} (x) {|0>,|+>} in the order 11, 12, 21, 22.
std::array<hilbert::StateVector, 4> pbr_preparations();

// Preparation independence applied literally: Lambda x Lambda with
// factorized distributions Psi11..Psi22 built from single-system
// preparations Psi1, Psi2.
ontology::FiniteOntologicalModel pbr_product_model(
    const ontology::FiniteOntologicalModel& single);

struct PBRReport {
  double p_star = 0.0;    // common-support min-mass of Psi1 vs Psi2
  double deficit = 0.0;   // joint mass guaranteed to admit no valid outcome
  bool inconsistent = false;

  struct OutcomeRow {
    std::string outcome;
    std::string forbidding_preparation;
    double born_probability = 0.0;  // |<Phi_jk|Psi_jk>|^2, zero by construction
    double forbidden_mass = 0.0;    // common-support-square mass under Psi_jk
  };
  std::array<OutcomeRow, 4> table;
};

// On the common-support square every one of the four outcomes is forbidden
// by one of the four preparations, yet responses must sum to 1; the report
// carries the guaranteed stuck mass (>= P_star^2).
PBRReport pbr_contradiction(const ontology::FiniteOntologicalModel& single, double tol);

// Single-system assignment used by pbr_contradiction: Psi1 -> |0>,
// Psi2 -> |+>, bases z and x.
ontology::QuantumAssignment pbr_single_assignment();

// Smallest n with overlap_sq^n strictly below 1/2; the reduction maps the
// n-copy pair onto the |0>,|+> configuration (existence of that map is
// cited, not constructed; only the inner-product bookkeeping is done here).
int moseley_copies(double overlap_sq);

// Random locally-causal model: Lambda size <= max_lambda, random weights
// and response tables.
LHVModel random_lhv_model(Rng& rng, int max_lambda = 32);

// Random finite model with overlapping Psi1/Psi2 supports that reproduces
// the z and x basis statistics of |0> and |+> exactly by construction.
ontology::FiniteOntologicalModel random_overlapping_model(Rng& rng);

// Random product-state quantum strategy (no entanglement): random qubit
// pair, random +/-1 observables, random answer maps.
QuantumStrategy random_product_strategy(Rng& rng);

}  // namespace qfound::nonclassical
