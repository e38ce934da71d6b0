#pragma once

#include <cstdint>
#include <functional>

#include "qmask/matrix.hpp"

namespace qmask {

/// Splittable counter-based generator keyed by a 64-bit seed (splitmix64
/// finalizer over key + counter). Identical streams on every platform.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  /// Independent stream derived from this generator's key; does not disturb
  /// the parent's counter.
  SplitRng split(std::uint64_t stream) const;

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double gaussian();
  cplx complex_gaussian();

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Pure seed derivation for (seed, index)-keyed samplers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class StateKind { PureComplex, PureReal, MixedComplex, MixedReal };

/// Deterministic seeded state sampler. Pure-real states are Haar on the real
/// sphere (their matrices are exactly real); mixed states are GG†/tr
/// Wishart-style constructions.
DensityMatrix random_state(std::size_t dim, StateKind kind, std::uint64_t seed);

Ket random_ket(std::size_t dim, bool real, std::uint64_t seed);

/// Pure function of the sample index; reproducible reports by contract.
using StateSampler = std::function<DensityMatrix(std::uint64_t)>;

StateSampler seeded_state_sampler(std::size_t dim, StateKind kind,
                                  std::uint64_t seed);

}  // namespace qmask
