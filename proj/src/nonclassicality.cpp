#include "qfound/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qfound::nonclassical {

namespace {
constexpr double kPi = std::numbers::pi;
using hilbert::Operator;
using hilbert::StateVector;
using ontology::FiniteOntologicalModel;
using ontology::QuantumAssignment;
}  // namespace

bool winning_predicate(int x, int y, bool ax, bool by) {
  if ((x != 0 && x != 1) || (y != 0 && y != 1))
    throw std::invalid_argument("winning_predicate: questions must be 0 or 1");
  return (x == 1 && y == 1) ? (ax != by) : (ax == by);
}

double evaluate_deterministic(const DeterministicStrategy& s) {
  const bool a[2] = {s.a0, s.a1};
  const bool b[2] = {s.b0, s.b1};
  int wins = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      if (winning_predicate(x, y, a[x], b[y])) ++wins;
  return wins / 4.0;
}

std::array<DeterministicStrategy, 16> all_deterministic_strategies() {
  std::array<DeterministicStrategy, 16> out;
  for (int bits = 0; bits < 16; ++bits)
    out[static_cast<std::size_t>(bits)] = {(bits & 1) != 0, (bits & 2) != 0,
                                           (bits & 4) != 0, (bits & 8) != 0};
  return out;
}

void LHVModel::validate() const {
  const Eigen::Index n = weights.size();
  if (n == 0) throw std::invalid_argument("LHVModel: empty hidden-variable space");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights(i) < -kTolAlgebra) throw std::invalid_argument("LHVModel: negative weight");
    sum += weights(i);
  }
  if (std::abs(sum - 1.0) > kTolAlgebra)
    throw std::invalid_argument("LHVModel: weights must sum to 1");
  for (const Eigen::MatrixXd* t : {&alice_yes, &bob_yes}) {
    if (t->rows() != 2 || t->cols() != n)
      throw std::invalid_argument("LHVModel: response table must be 2 x N");
    if ((t->array() < -kTolAlgebra).any() || (t->array() > 1.0 + kTolAlgebra).any())
      throw std::invalid_argument("LHVModel: response outside [0,1]");
  }
}

double evaluate_lhv(const LHVModel& model) {
  model.validate();
  double win = 0.0;
  for (Eigen::Index lam = 0; lam < model.weights.size(); ++lam) {
    double per_lambda = 0.0;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const double pa = model.alice_yes(x, lam);
        const double pb = model.bob_yes(y, lam);
        const double agree = pa * pb + (1.0 - pa) * (1.0 - pb);
        per_lambda += (x == 1 && y == 1) ? (1.0 - agree) : agree;
      }
    }
    win += model.weights(lam) * per_lambda / 4.0;
  }
  return win;
}

void QuantumStrategy::validate() const {
  if (shared.dim() != 4)
    throw std::invalid_argument("QuantumStrategy: shared state must be two qubits");
  for (const auto* obs : {&alice_obs, &bob_obs}) {
    for (const Operator& o : *obs) {
      if (o.dim() != 2) throw std::invalid_argument("QuantumStrategy: observables must be qubit-sized");
      if (!o.is_selfadjoint())
        throw std::invalid_argument("QuantumStrategy: observables must be self-adjoint");
      // Spectrum in {+1,-1} for a self-adjoint O is equivalent to O^2 = 1.
      const double sq_dev =
          ((o * o).entries() - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff();
      if (sq_dev > 1e-10)
        throw std::invalid_argument("QuantumStrategy: observables must be +/-1 valued");
    }
  }
}

QuantumStrategy canonical_quantum_strategy() {
  const double r = 1.0 / std::sqrt(2.0);
  QuantumStrategy qs{
      hilbert::singlet(),
      {hilbert::pauli(3), hilbert::pauli(1)},
      {(hilbert::pauli(3) + hilbert::pauli(1)).scaled(r),
       (hilbert::pauli(3) - hilbert::pauli(1)).scaled(r)},
      {false, false},  // Alice: +1 -> "no"
      {true, true},    // Bob:   +1 -> "yes"
  };
  qs.validate();
  return qs;
}

namespace {

// Joint probabilities of the four sign outcomes for commuting local
// observables, indexed [sa][sb] with 0 = +1 and 1 = -1.
std::array<std::array<double, 2>, 2> joint_sign_distribution(const StateVector& shared,
                                                             const Operator& a,
                                                             const Operator& b) {
  const Operator id = Operator::identity(2);
  std::array<std::array<double, 2>, 2> p{};
  for (int sa = 0; sa < 2; ++sa) {
    for (int sb = 0; sb < 2; ++sb) {
      const double fa = sa == 0 ? 1.0 : -1.0;
      const double fb = sb == 0 ? 1.0 : -1.0;
      const Operator proj_a = (id + a.scaled(fa)).scaled(0.5);
      const Operator proj_b = (id + b.scaled(fb)).scaled(0.5);
      const Operator joint = tensor(proj_a, proj_b);
      p[static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)] =
          std::max(0.0, hilbert::expectation(joint, shared));
    }
  }
  return p;
}

}  // namespace

double evaluate_quantum(const QuantumStrategy& qs) {
  qs.validate();
  double win = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto p = joint_sign_distribution(qs.shared, qs.alice_obs[static_cast<std::size_t>(x)],
                                             qs.bob_obs[static_cast<std::size_t>(y)]);
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
          const bool ax = (sa == 0) == qs.alice_yes_on_plus[static_cast<std::size_t>(x)];
          const bool by = (sb == 0) == qs.bob_yes_on_plus[static_cast<std::size_t>(y)];
          if (winning_predicate(x, y, ax, by))
            win += p[static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)];
        }
      }
    }
  }
  return win / 4.0;
}

SimulationResult simulate_game(const Strategy& strategy, long long rounds, std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("simulate_game: need at least one round");

  SimulationResult result;
  result.rounds = rounds;

  // Precompute whatever the per-round sampler needs.
  struct QuantumTables {
    std::array<std::array<std::array<double, 4>, 2>, 2> cumulative;  // [x][y][joint outcome]
    std::array<bool, 2> ayes, byes;
  };
  QuantumTables qt{};
  const DeterministicStrategy* det = std::get_if<DeterministicStrategy>(&strategy);
  const LHVModel* lhv = std::get_if<LHVModel>(&strategy);
  const QuantumStrategy* q = std::get_if<QuantumStrategy>(&strategy);

  if (det != nullptr) {
    result.analytic = evaluate_deterministic(*det);
  } else if (lhv != nullptr) {
    lhv->validate();
    result.analytic = evaluate_lhv(*lhv);
  } else {
    q->validate();
    result.analytic = evaluate_quantum(*q);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const auto p = joint_sign_distribution(q->shared, q->alice_obs[static_cast<std::size_t>(x)],
                                               q->bob_obs[static_cast<std::size_t>(y)]);
        double acc = 0.0;
        for (int o = 0; o < 4; ++o) {
          acc += p[static_cast<std::size_t>(o / 2)][static_cast<std::size_t>(o % 2)];
          qt.cumulative[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
                       [static_cast<std::size_t>(o)] = acc;
        }
      }
    }
    qt.ayes = q->alice_yes_on_plus;
    qt.byes = q->bob_yes_on_plus;
  }

  constexpr long long kChunk = 1 << 16;
  long long done = 0;
  std::uint64_t chunk_index = 0;
  long long wins = 0;
  while (done < rounds) {
    Rng rng(seed + chunk_index);
    const long long todo = std::min(kChunk, rounds - done);
    for (long long r = 0; r < todo; ++r) {
      const int x = rng.uniform() < 0.5 ? 0 : 1;
      const int y = rng.uniform() < 0.5 ? 0 : 1;
      bool ax = false, by = false;
      if (det != nullptr) {
        ax = x == 0 ? det->a0 : det->a1;
        by = y == 0 ? det->b0 : det->b1;
      } else if (lhv != nullptr) {
        // Sample lambda, then local answers.
        const double u = rng.uniform();
        Eigen::Index lam = 0;
        double acc = 0.0;
        for (; lam < lhv->weights.size(); ++lam) {
          acc += lhv->weights(lam);
          if (u < acc) break;
        }
        if (lam == lhv->weights.size()) lam -= 1;
        ax = rng.bernoulli(lhv->alice_yes(x, lam));
        by = rng.bernoulli(lhv->bob_yes(y, lam));
      } else {
        const double u = rng.uniform();
        int o = 0;
        while (o < 3 && u >= qt.cumulative[static_cast<std::size_t>(x)]
                                          [static_cast<std::size_t>(y)]
                                          [static_cast<std::size_t>(o)])
          ++o;
        const int sa = o / 2, sb = o % 2;
        ax = (sa == 0) == qt.ayes[static_cast<std::size_t>(x)];
        by = (sb == 0) == qt.byes[static_cast<std::size_t>(y)];
      }
      if (winning_predicate(x, y, ax, by)) ++wins;
    }
    done += todo;
    ++chunk_index;
  }

  result.wins = wins;
  result.frequency = static_cast<double>(wins) / static_cast<double>(rounds);
  result.sigma = std::sqrt(result.analytic * (1.0 - result.analytic) /
                           static_cast<double>(rounds));
  return result;
}

std::vector<StateVector> hardy_states(int m) {
  if (m < 2) throw std::invalid_argument("hardy_states: need M >= 2");
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double angle = j * kPi / (2.0 * m);
    states.push_back(StateVector(hilbert::CVector{{std::cos(angle), std::sin(angle)}}));
  }
  return states;
}

QuantumAssignment hardy_assignment(int m) {
  QuantumAssignment qa;
  const auto states = hardy_states(m);
  for (int j = 0; j < m; ++j) {
    const double angle = j * kPi / (2.0 * m);
    const StateVector perp(hilbert::CVector{{-std::sin(angle), std::cos(angle)}});
    qa.states.insert({"psi" + std::to_string(j), states[static_cast<std::size_t>(j)]});
    qa.bases.insert({"meas" + std::to_string(j),
                     hilbert::MeasurementBasis({states[static_cast<std::size_t>(j)], perp})});
  }
  return qa;
}

std::string HardyWitness::describe() const {
  switch (kind) {
    case Kind::StatisticsDeviation:
      return "statistics deviation at (prep " + std::to_string(j) + ", meas " +
             std::to_string(k) + "), |error| = " + std::to_string(deviation);
    case Kind::CertaintyViolation:
      return "certainty violation: p(psi" + std::to_string(j) + "|lambda=" + std::to_string(k) +
             ") = " + std::to_string(1.0 - deviation) + " on the support";
    case Kind::SupportEquality:
      return "pigeonhole: preparations " + std::to_string(j) + " and " + std::to_string(k) +
             " have identical supports";
  }
  return "";
}

HardyVerdict hardy_check(const FiniteOntologicalModel& model, const QuantumAssignment& qa,
                         int m, double tol) {
  if (m < 2) throw std::invalid_argument("hardy_check: need M >= 2");
  const auto states = hardy_states(m);

  // Map j -> preparation label and j -> (basis label, outcome index of
  // |Psi_j> within that basis) by phase-equality against the assignment.
  std::vector<std::string> prep_labels(static_cast<std::size_t>(m));
  std::vector<std::pair<std::string, int>> own_meas(static_cast<std::size_t>(m), {"", -1});
  for (int j = 0; j < m; ++j) {
    for (const auto& [label, psi] : qa.states) {
      if (hilbert::equal_up_to_phase(psi, states[static_cast<std::size_t>(j)])) {
        prep_labels[static_cast<std::size_t>(j)] = label;
        break;
      }
    }
    if (prep_labels[static_cast<std::size_t>(j)].empty())
      throw std::invalid_argument("hardy_check: assignment lacks a preparation for state " +
                                  std::to_string(j));
    for (const auto& [label, basis] : qa.bases) {
      for (int k = 0; k < basis.size(); ++k) {
        if (hilbert::equal_up_to_phase(basis.vector(k), states[static_cast<std::size_t>(j)])) {
          own_meas[static_cast<std::size_t>(j)] = {label, k};
          break;
        }
      }
      if (own_meas[static_cast<std::size_t>(j)].second >= 0) break;
    }
    if (own_meas[static_cast<std::size_t>(j)].second < 0)
      throw std::invalid_argument("hardy_check: assignment lacks a basis containing state " +
                                  std::to_string(j));
  }

  HardyVerdict verdict;
  verdict.required_bound = static_cast<int>(std::ceil(std::log2(static_cast<double>(m))));
  const int n = model.lambda_count();
  verdict.bound_satisfied = n >= 64 || (1LL << n) >= m;

  // (i) Born reproduction over every assigned triple.
  const auto repro = reproduces_quantum(model, qa, tol);
  if (!repro.pass) {
    int wj = -1, wk = -1;
    for (int j = 0; j < m; ++j) {
      if (prep_labels[static_cast<std::size_t>(j)] == repro.worst_prep) wj = j;
      if (own_meas[static_cast<std::size_t>(j)].first == repro.worst_meas) wk = j;
    }
    verdict.witness = HardyWitness{HardyWitness::Kind::StatisticsDeviation, wj, wk,
                                   repro.max_deviation};
    verdict.reproduces = false;
    return verdict;
  }

  // (ii) Certainty: responses for a state's own outcome must be 1 across its
  // support, forced by sum_lambda p(Psi|lambda) p(lambda|Psi) = 1.
  for (int j = 0; j < m; ++j) {
    const auto& [meas_label, outcome] = own_meas[static_cast<std::size_t>(j)];
    const Eigen::MatrixXd& table = model.response(meas_label);
    for (int lam : support(model, prep_labels[static_cast<std::size_t>(j)], tol)) {
      const double r = table(lam, outcome);
      if (r < 1.0 - tol) {
        verdict.witness = HardyWitness{HardyWitness::Kind::CertaintyViolation, j, lam, 1.0 - r};
        verdict.reproduces = false;
        return verdict;
      }
    }
  }
  verdict.reproduces = true;

  // (iii) Supports must be pairwise distinct.
  std::vector<std::vector<int>> supports;
  supports.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    supports.push_back(support(model, prep_labels[static_cast<std::size_t>(j)], tol));
  std::set<std::vector<int>> distinct(supports.begin(), supports.end());
  verdict.distinct_support_count = static_cast<int>(distinct.size());
  for (int j = 0; j < m && !verdict.witness.has_value(); ++j)
    for (int k = j + 1; k < m; ++k)
      if (supports[static_cast<std::size_t>(j)] == supports[static_cast<std::size_t>(k)]) {
        verdict.witness = HardyWitness{HardyWitness::Kind::SupportEquality, j, k, 0.0};
        break;
      }

  verdict.accepted = verdict.reproduces && verdict.distinct_support_count == m &&
                     verdict.bound_satisfied && !verdict.witness.has_value();
  return verdict;
}

hilbert::MeasurementBasis pbr_basis() {
  using hilbert::ket0;
  using hilbert::ket1;
  using hilbert::ket_minus;
  using hilbert::ket_plus;
  using hilbert::tensor;
  const double r = 1.0 / std::sqrt(2.0);
  auto combine = [r](const StateVector& a1, const StateVector& b1, const StateVector& a2,
                     const StateVector& b2) {
    return StateVector(r * tensor(a1, b1).amplitudes() + r * tensor(a2, b2).amplitudes());
  };
  return hilbert::MeasurementBasis({
      combine(ket0(), ket1(), ket1(), ket0()),
      combine(ket0(), ket_minus(), ket1(), ket_plus()),
      combine(ket_plus(), ket1(), ket_minus(), ket0()),
      combine(ket_plus(), ket_minus(), ket_minus(), ket_plus()),
  });
}

std::array<StateVector, 4> pbr_preparations() {
  using hilbert::tensor;
  return {tensor(hilbert::ket0(), hilbert::ket0()), tensor(hilbert::ket0(), hilbert::ket_plus()),
          tensor(hilbert::ket_plus(), hilbert::ket0()),
          tensor(hilbert::ket_plus(), hilbert::ket_plus())};
}

FiniteOntologicalModel pbr_product_model(const FiniteOntologicalModel& single) {
  const Eigen::VectorXd& p1 = single.preparation("Psi1");
  const Eigen::VectorXd& p2 = single.preparation("Psi2");
  const int n = single.lambda_count();

  FiniteOntologicalModel::PrepMap joint;
  const std::array<std::pair<std::string, std::pair<const Eigen::VectorXd*, const Eigen::VectorXd*>>, 4>
      combos = {{{"Psi11", {&p1, &p1}},
                 {"Psi12", {&p1, &p2}},
                 {"Psi21", {&p2, &p1}},
                 {"Psi22", {&p2, &p2}}}};
  for (const auto& [label, pair] : combos) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(n) * n);
    for (int l1 = 0; l1 < n; ++l1)
      for (int l2 = 0; l2 < n; ++l2)
        p(static_cast<Eigen::Index>(l1) * n + l2) = (*pair.first)(l1) * (*pair.second)(l2);
    p /= p.sum();
    joint[label] = std::move(p);
  }
  return FiniteOntologicalModel(n * n, std::move(joint), {});
}

QuantumAssignment pbr_single_assignment() {
  QuantumAssignment qa;
  qa.states.insert({"Psi1", hilbert::ket0()});
  qa.states.insert({"Psi2", hilbert::ket_plus()});
  qa.bases.insert({"z", hilbert::pauli_eigenbasis(3)});
  qa.bases.insert({"x", hilbert::pauli_eigenbasis(1)});
  return qa;
}

PBRReport pbr_contradiction(const FiniteOntologicalModel& single, double tol) {
  const Eigen::VectorXd& p1 = single.preparation("Psi1");
  const Eigen::VectorXd& p2 = single.preparation("Psi2");

  PBRReport report;
  double mass1 = 0.0, mass2 = 0.0;
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    if (p1(i) > tol && p2(i) > tol) {
      report.p_star += std::min(p1(i), p2(i));
      mass1 += p1(i);
      mass2 += p2(i);
    }
  }

  // Every (lambda1, lambda2) in the common-support square lies in the
  // support of all four product preparations, so all four outcomes are
  // Born-forbidden there while their responses must still sum to 1.  The
  // stuck mass under preparation jk is mass_j * mass_k; the deficit reports
  // the preparation-independent guarantee.
  const auto preps = pbr_preparations();
  const auto basis = pbr_basis();
  const std::array<std::string, 4> outcome_names = {"Phi11", "Phi12", "Phi21", "Phi22"};
  const std::array<std::string, 4> prep_names = {"Psi11", "Psi12", "Psi21", "Psi22"};
  const std::array<double, 4> square_mass = {mass1 * mass1, mass1 * mass2, mass2 * mass1,
                                             mass2 * mass2};
  for (int i = 0; i < 4; ++i) {
    report.table[static_cast<std::size_t>(i)] = {
        outcome_names[static_cast<std::size_t>(i)], prep_names[static_cast<std::size_t>(i)],
        std::norm(hilbert::inner_product(basis.vector(i), preps[static_cast<std::size_t>(i)])),
        square_mass[static_cast<std::size_t>(i)]};
  }
  const double guaranteed = std::min(mass1, mass2);
  report.deficit = guaranteed * guaranteed;
  report.inconsistent = report.p_star > tol;
  return report;
}

int moseley_copies(double overlap_sq) {
  if (!(overlap_sq > 0.0 && overlap_sq < 1.0))
    throw std::invalid_argument("moseley_copies: overlap must lie strictly between 0 and 1");
  int n = 1;
  double power = overlap_sq;
  while (power >= 0.5) {  // strict inequality required of the target
    power *= overlap_sq;
    ++n;
  }
  return n;
}

LHVModel random_lhv_model(Rng& rng, int max_lambda) {
  const int n = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_lambda)));
  LHVModel model;
  model.weights = Eigen::VectorXd(n);
  for (int i = 0; i < n; ++i) model.weights(i) = rng.uniform() + 1e-12;
  model.weights /= model.weights.sum();
  model.alice_yes = Eigen::MatrixXd(2, n);
  model.bob_yes = Eigen::MatrixXd(2, n);
  // A third of the hidden variables answer deterministically, so the sweep
  // actually probes the top of the winning-probability range.
  for (int i = 0; i < n; ++i) {
    const bool sharp = rng.bernoulli(1.0 / 3.0);
    for (int x = 0; x < 2; ++x) {
      model.alice_yes(x, i) = sharp ? (rng.bernoulli(0.5) ? 1.0 : 0.0) : rng.uniform();
      model.bob_yes(x, i) = sharp ? (rng.bernoulli(0.5) ? 1.0 : 0.0) : rng.uniform();
    }
  }
  return model;
}

namespace {

// Random response column on the given cells with a prescribed weighted mean,
// staying inside [0,1].
void fill_with_weighted_mean(Eigen::VectorXd& column, const std::vector<int>& cells,
                             const Eigen::VectorXd& weights, double target, Rng& rng) {
  double wsum = 0.0;
  for (int c : cells) wsum += weights(c);
  std::vector<double> raw(cells.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    raw[i] = rng.uniform();
    mean += raw[i] * weights(cells[i]) / wsum;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    double v;
    if (mean <= 0.0) {
      v = target;
    } else if (mean >= target) {
      v = raw[i] * target / mean;
    } else {
      v = 1.0 - (1.0 - raw[i]) * (1.0 - target) / (1.0 - mean);
    }
    column(cells[i]) = v;
  }
}

}  // namespace

ontology::FiniteOntologicalModel random_overlapping_model(Rng& rng) {
  // Lambda splits into an overlap block O (supporting both preparations)
  // and private blocks S1, S2.  On each preparation's support its own
  // sharp outcome is certain; the free responses on the other block are
  // tuned so the cross statistics come out at exactly 1/2.
  const int n_o = 1 + static_cast<int>(rng.index(3));
  const int n_1 = 1 + static_cast<int>(rng.index(3));
  const int n_2 = 1 + static_cast<int>(rng.index(3));
  const int n = n_o + n_1 + n_2;

  const double w1 = rng.uniform(0.05, 0.5);  // overlap mass under Psi1
  const double w2 = rng.uniform(0.05, 0.5);  // overlap mass under Psi2

  std::vector<int> block_o, block_1, block_2;
  for (int i = 0; i < n_o; ++i) block_o.push_back(i);
  for (int i = 0; i < n_1; ++i) block_1.push_back(n_o + i);
  for (int i = 0; i < n_2; ++i) block_2.push_back(n_o + n_1 + i);

  auto spread = [&rng](Eigen::VectorXd& p, const std::vector<int>& cells, double total) {
    std::vector<double> raw(cells.size());
    double sum = 0.0;
    for (double& v : raw) {
      v = rng.uniform() + 1e-6;
      sum += v;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) p(cells[i]) = total * raw[i] / sum;
  };

  Eigen::VectorXd p1 = Eigen::VectorXd::Zero(n), p2 = Eigen::VectorXd::Zero(n);
  spread(p1, block_o, w1);
  spread(p1, block_1, 1.0 - w1);
  spread(p2, block_o, w2);
  spread(p2, block_2, 1.0 - w2);
  p1 /= p1.sum();
  p2 /= p2.sum();

  // z measurement: outcome 0 is certain on supp(Psi1) = O + S1; on S2 the
  // weighted mean must equal (1/2 - w2)/(1 - w2) so that Psi2 sees 1/2.
  Eigen::MatrixXd z_table(n, 2);
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(n);
  for (int c : block_o) z0(c) = 1.0;
  for (int c : block_1) z0(c) = 1.0;
  fill_with_weighted_mean(z0, block_2, p2, (0.5 - w2) / (1.0 - w2), rng);
  z_table.col(0) = z0;
  z_table.col(1) = Eigen::VectorXd::Ones(n) - z0;

  // x measurement: outcome 0 (the |+> side) certain on supp(Psi2) = O + S2.
  Eigen::MatrixXd x_table(n, 2);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  for (int c : block_o) x0(c) = 1.0;
  for (int c : block_2) x0(c) = 1.0;
  fill_with_weighted_mean(x0, block_1, p1, (0.5 - w1) / (1.0 - w1), rng);
  x_table.col(0) = x0;
  x_table.col(1) = Eigen::VectorXd::Ones(n) - x0;

  FiniteOntologicalModel::PrepMap preps;
  preps["Psi1"] = std::move(p1);
  preps["Psi2"] = std::move(p2);
  FiniteOntologicalModel::ResponseMap resps;
  resps["z"] = std::move(z_table);
  resps["x"] = std::move(x_table);
  return FiniteOntologicalModel(n, std::move(preps), std::move(resps));
}

QuantumStrategy random_product_strategy(Rng& rng) {
  auto random_bloch = [&rng]() {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return hilbert::BlochVector{s * std::cos(phi), s * std::sin(phi), z};
  };
  auto random_obs = [&]() {
    const auto axis = random_bloch();
    return (hilbert::pauli(1).scaled(axis.x) + hilbert::pauli(2).scaled(axis.y) +
            hilbert::pauli(3).scaled(axis.z));
  };
  QuantumStrategy qs{
      hilbert::tensor(hilbert::state_from_bloch(random_bloch()),
                      hilbert::state_from_bloch(random_bloch())),
      {random_obs(), random_obs()},
      {random_obs(), random_obs()},
      {rng.bernoulli(0.5), rng.bernoulli(0.5)},
      {rng.bernoulli(0.5), rng.bernoulli(0.5)},
  };
  qs.validate();
  return qs;
}

}  // namespace qfound::nonclassical
