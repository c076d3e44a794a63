// common.hpp
// Shared numeric tolerances and the deterministic random source used by every
// stochastic operation in the library.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace qfound {

// Algebraic identities on matrices/vectors of dimension <= 16.
inline constexpr double kTolAlgebra = 1e-12;

// Slack for positive-semidefiniteness checks (smallest eigenvalue bound).
inline constexpr double kTolPsd = 1e-10;

// Default threshold separating "in the support" from numerical zero.
inline constexpr double kTolSupport = 1e-12;

// Deterministic random source.  mt19937_64 is fully specified by the
// standard and the uniform doubles are derived by hand from raw 64-bit
// draws, so a fixed seed gives bit-identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: empty range");
    std::size_t i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qfound
