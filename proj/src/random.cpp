#include "qmask/random.hpp"

#include <cmath>
#include <numbers>

namespace qmask {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t SplitRng::mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitRng::SplitRng(std::uint64_t seed) : key_(mix(seed)) {}

SplitRng SplitRng::split(std::uint64_t stream) const {
  return SplitRng(key_ ^ mix(stream ^ 0xA5A5A5A5A5A5A5A5ull));
}

std::uint64_t SplitRng::next_u64() { return mix(key_ + (++counter_) * kGolden); }

double SplitRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

cplx SplitRng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitRng::mix(seed ^ SplitRng::mix(index + 0x51ED2701ull));
}

Ket random_ket(std::size_t dim, bool real, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_ket: dim must be positive");
  SplitRng rng(seed);
  std::vector<cplx> amp(dim);
  for (auto& a : amp) a = real ? cplx(rng.gaussian(), 0.0) : rng.complex_gaussian();
  return Ket(std::move(amp)).normalized();
}

DensityMatrix random_state(std::size_t dim, StateKind kind, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_state: dim must be positive");
  switch (kind) {
    case StateKind::PureComplex:
      return random_ket(dim, false, seed).to_density();
    case StateKind::PureReal:
      return random_ket(dim, true, seed).to_density();
    case StateKind::MixedComplex:
    case StateKind::MixedReal: {
      const bool real = kind == StateKind::MixedReal;
      SplitRng rng(seed);
      ComplexMatrix g(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          g(i, j) = real ? cplx(rng.gaussian(), 0.0) : rng.complex_gaussian();
      ComplexMatrix w = g * g.adjoint();
      // Exact hermiticity (and exact realness in the real case).
      for (std::size_t i = 0; i < dim; ++i) {
        w(i, i) = cplx(w(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
          const cplx v = 0.5 * (w(i, j) + std::conj(w(j, i)));
          w(i, j) = real ? cplx(v.real(), 0.0) : v;
          w(j, i) = std::conj(w(i, j));
        }
      }
      const double tr = w.trace().real();
      w *= cplx(1.0 / tr, 0.0);
      return DensityMatrix(std::move(w));
    }
  }
  throw std::invalid_argument("random_state: unknown kind");
}

StateSampler seeded_state_sampler(std::size_t dim, StateKind kind,
                                  std::uint64_t seed) {
  return [dim, kind, seed](std::uint64_t index) {
    return random_state(dim, kind, derive_seed(seed, index));
  };
}

}  // namespace qmask
