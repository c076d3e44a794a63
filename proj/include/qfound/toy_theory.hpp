// toy_theory.hpp
// A four-cell statistical toy universe with a one-bit knowledge bound: six
// extremal macrostates, three coarse measurements that disturb, reversible
// cell permutations, distinguishability bounds, and the statistics-level
// match with a single qubit.
//
// Cells of the 2x2 grid are indexed 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1).
// All reachable probabilities are dyadic rationals (0, 1/4, 1/2, 1), which
// IEEE doubles represent exactly, so sums and halvings below are exact and
// equality comparisons are legitimate.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qfound/common.hpp"

namespace qfound::toy {

// Probability 4-vector constrained to the one-bit hull: entries >= 0 summing
// to 1, each entry <= 1/2 (no cell may ever be pinned down).
class ToyMacrostate {
 public:
  explicit ToyMacrostate(std::array<double, 4> p);

  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& probabilities() const { return p_; }

  bool operator==(const ToyMacrostate& o) const { return p_ == o.p_; }

 private:
  std::array<double, 4> p_;
};

enum class MeasLabel { A, B, C };

// Two-outcome coarse measurement given by a partition of the four cells.
struct ToyMeasurement {
  MeasLabel label;
  std::array<std::array<int, 2>, 2> outcome_cells;  // [outcome][cell index]

  static ToyMeasurement A();  // {(0,0),(0,1)} vs {(1,0),(1,1)}
  static ToyMeasurement B();  // {(0,0),(1,0)} vs {(0,1),(1,1)}
  static ToyMeasurement C();  // {(0,0),(1,1)} vs {(0,1),(1,0)}
  static ToyMeasurement from_label(char c);

  char name() const;
};

enum class Extremal { a, b, c, a_bar, b_bar, c_bar };

// The six minimal-uncertainty macrostates, ordered a, b, c, a_bar, b_bar, c_bar.
const std::array<ToyMacrostate, 6>& extremal_macrostates();
const ToyMacrostate& extremal(Extremal which);
ToyMacrostate extremal_by_name(const std::string& name);  // "a".."cbar"
std::string extremal_name(Extremal which);

// (p0, p1): sums of the macrostate over the two outcome cell pairs.
std::pair<double, double> measurement_statistics(const ToyMacrostate& m,
                                                 const ToyMeasurement& meas);

// Post-measurement macrostate on obtaining `outcome`: the extremal state
// uniform over that outcome's two cells (the macrostate-level consequence of
// the half-stay/half-swap update).
ToyMacrostate posterior(const ToyMeasurement& meas, int outcome);

struct MeasureResult {
  int outcome;
  ToyMacrostate post;
};

MeasureResult measure(const ToyMacrostate& m, const ToyMeasurement& meas, Rng& rng);

// Reversible dynamics: cell i moves to cell perm[i].  Throws unless perm is
// a bijection of {0,1,2,3}.
ToyMacrostate permute(const ToyMacrostate& m, const std::array<int, 4>& perm);

// Sum_i min(m1_i, m2_i).
double overlap(const ToyMacrostate& m1, const ToyMacrostate& m2);

// Optimal equal-prior success probability of guessing which of the two
// macrostates was prepared given the microstate: 1 - (1/2) sum_i min(m1, m2).
double single_shot_distinguish_bound(const ToyMacrostate& m1, const ToyMacrostate& m2);

// Statistics-level comparison of the 6 extremal macrostates x 3 toy
// measurements against the 6 Pauli eigenstates x 3 Pauli bases, under the
// fixed convention A<->z, B<->x, C<->y with (a,b,c) the +1 eigenstates.
struct CorrespondenceRow {
  std::string macrostate;
  char measurement;
  std::string eigenstate;
  int pauli_axis;
  std::pair<double, double> toy_stats;
  std::pair<double, double> born_stats;  // snapped to exact dyadics
  bool match;                            // exact equality after snapping
};

struct CorrespondenceReport {
  std::vector<CorrespondenceRow> rows;
  bool all_match = true;
};

CorrespondenceReport qubit_correspondence_report();

}  // namespace qfound::toy
