#include "qfound/toy_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfound/hilbert.hpp"

namespace qfound::toy {

ToyMacrostate::ToyMacrostate(std::array<double, 4> p) : p_(p) {
  double sum = 0.0;
  for (double v : p_) {
    if (v < -kTolAlgebra) throw std::invalid_argument("ToyMacrostate: negative probability");
    if (v > 0.5 + kTolAlgebra)
      throw std::invalid_argument("ToyMacrostate: cell probability exceeds 1/2 (one-bit bound)");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kTolAlgebra)
    throw std::invalid_argument("ToyMacrostate: probabilities must sum to 1");
}

ToyMeasurement ToyMeasurement::A() { return {MeasLabel::A, {{{0, 1}, {2, 3}}}}; }
ToyMeasurement ToyMeasurement::B() { return {MeasLabel::B, {{{0, 2}, {1, 3}}}}; }
ToyMeasurement ToyMeasurement::C() { return {MeasLabel::C, {{{0, 3}, {1, 2}}}}; }

ToyMeasurement ToyMeasurement::from_label(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return A();
    case 'B':
    case 'b':
      return B();
    case 'C':
    case 'c':
      return C();
    default:
      throw std::invalid_argument(std::string("ToyMeasurement: unknown label '") + c + "'");
  }
}

char ToyMeasurement::name() const {
  switch (label) {
    case MeasLabel::A:
      return 'A';
    case MeasLabel::B:
      return 'B';
    default:
      return 'C';
  }
}

const std::array<ToyMacrostate, 6>& extremal_macrostates() {
  static const std::array<ToyMacrostate, 6> states = {
      ToyMacrostate({0.5, 0.5, 0.0, 0.0}),  // a
      ToyMacrostate({0.5, 0.0, 0.5, 0.0}),  // b
      ToyMacrostate({0.5, 0.0, 0.0, 0.5}),  // c
      ToyMacrostate({0.0, 0.0, 0.5, 0.5}),  // a_bar
      ToyMacrostate({0.0, 0.5, 0.0, 0.5}),  // b_bar
      ToyMacrostate({0.0, 0.5, 0.5, 0.0}),  // c_bar
  };
  return states;
}

const ToyMacrostate& extremal(Extremal which) {
  return extremal_macrostates()[static_cast<std::size_t>(which)];
}

std::string extremal_name(Extremal which) {
  static const char* names[] = {"a", "b", "c", "abar", "bbar", "cbar"};
  return names[static_cast<std::size_t>(which)];
}

ToyMacrostate extremal_by_name(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (extremal_name(static_cast<Extremal>(i)) == name)
      return extremal(static_cast<Extremal>(i));
  }
  if (name == "uniform") return ToyMacrostate({0.25, 0.25, 0.25, 0.25});
  throw std::invalid_argument("extremal_by_name: unknown macrostate '" + name + "'");
}

std::pair<double, double> measurement_statistics(const ToyMacrostate& m,
                                                 const ToyMeasurement& meas) {
  const auto& cells = meas.outcome_cells;
  return {m[cells[0][0]] + m[cells[0][1]], m[cells[1][0]] + m[cells[1][1]]};
}

ToyMacrostate posterior(const ToyMeasurement& meas, int outcome) {
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("posterior: outcome must be 0 or 1");
  std::array<double, 4> p = {0.0, 0.0, 0.0, 0.0};
  p[static_cast<std::size_t>(meas.outcome_cells[outcome][0])] = 0.5;
  p[static_cast<std::size_t>(meas.outcome_cells[outcome][1])] = 0.5;
  return ToyMacrostate(p);
}

MeasureResult measure(const ToyMacrostate& m, const ToyMeasurement& meas, Rng& rng) {
  const double p0 = measurement_statistics(m, meas).first;
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  return {outcome, posterior(meas, outcome)};
}

ToyMacrostate permute(const ToyMacrostate& m, const std::array<int, 4>& perm) {
  std::array<bool, 4> seen = {false, false, false, false};
  for (int t : perm) {
    if (t < 0 || t > 3 || seen[static_cast<std::size_t>(t)])
      throw std::invalid_argument("permute: map is not a bijection of the four cells");
    seen[static_cast<std::size_t>(t)] = true;
  }
  std::array<double, 4> p = {0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(perm[i])] = m[i];
  return ToyMacrostate(p);
}

double overlap(const ToyMacrostate& m1, const ToyMacrostate& m2) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::min(m1[i], m2[i]);
  return s;
}

double single_shot_distinguish_bound(const ToyMacrostate& m1, const ToyMacrostate& m2) {
  return 1.0 - 0.5 * overlap(m1, m2);
}

namespace {

// Born values for Pauli eigenstates in Pauli bases are exactly 0, 1/2 or 1;
// complex arithmetic leaves ulp-level residue, so snap before comparing.
double snap_dyadic(double x) {
  for (double v : {0.0, 0.25, 0.5, 0.75, 1.0})
    if (std::abs(x - v) <= kTolAlgebra) return v;
  return x;
}

}  // namespace

CorrespondenceReport qubit_correspondence_report() {
  using hilbert::born_probabilities;
  using hilbert::pauli_eigenbasis;
  using hilbert::StateVector;

  // A<->z, B<->x, C<->y; unbarred macrostates map to the +1 eigenstates.
  const std::array<ToyMeasurement, 3> meas = {ToyMeasurement::A(), ToyMeasurement::B(),
                                              ToyMeasurement::C()};
  const std::array<int, 3> axes = {3, 1, 2};
  const std::array<StateVector, 6> eigenstates = {
      hilbert::ket0(),     hilbert::ket_plus(),  hilbert::ket_plus_i(),
      hilbert::ket1(),     hilbert::ket_minus(), hilbert::ket_minus_i()};
  const std::array<std::string, 6> eig_names = {"z+", "x+", "y+", "z-", "x-", "y-"};

  CorrespondenceReport report;
  for (int s = 0; s < 6; ++s) {
    const ToyMacrostate& macro = extremal_macrostates()[static_cast<std::size_t>(s)];
    for (int mi = 0; mi < 3; ++mi) {
      const auto toy_stats = measurement_statistics(macro, meas[static_cast<std::size_t>(mi)]);
      const Eigen::VectorXd born = born_probabilities(
          eigenstates[static_cast<std::size_t>(s)],
          pauli_eigenbasis(axes[static_cast<std::size_t>(mi)]));
      const std::pair<double, double> born_stats = {snap_dyadic(born(0)), snap_dyadic(born(1))};
      CorrespondenceRow row;
      row.macrostate = extremal_name(static_cast<Extremal>(s));
      row.measurement = meas[static_cast<std::size_t>(mi)].name();
      row.eigenstate = eig_names[static_cast<std::size_t>(s)];
      row.pauli_axis = axes[static_cast<std::size_t>(mi)];
      row.toy_stats = toy_stats;
      row.born_stats = born_stats;
      row.match = (toy_stats.first == born_stats.first && toy_stats.second == born_stats.second);
      report.all_match = report.all_match && row.match;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace qfound::toy
