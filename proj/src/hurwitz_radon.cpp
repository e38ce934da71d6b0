#include "qmask/hurwitz_radon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qmask/linalg.hpp"
#include "qmask/random.hpp"

namespace qmask {

namespace {

const cplx kI(0.0, 1.0);

ComplexMatrix i_sigma_x() { return kI * pauli_x(); }
ComplexMatrix i_sigma_y() { return kI * pauli_y(); }
ComplexMatrix i_sigma_z() { return kI * pauli_z(); }

// Tensor with a left identity block: dim m -> dim pad*m, keeping the family
// block diagonal (pad copies down the diagonal).
HRSet pad_with_identity(HRSet base, std::size_t target_dim) {
  if (target_dim == base.dim) return base;
  const std::size_t pad = target_dim / base.dim;
  const ComplexMatrix eye = ComplexMatrix::identity(pad);
  HRSet out;
  out.dim = target_dim;
  out.real_orthogonal = base.real_orthogonal;
  out.matrices.reserve(base.count());
  for (const auto& u : base.matrices) out.matrices.push_back(tensor_product(eye, u));
  return out;
}

HRSet truncated(HRSet set, std::size_t count) {
  while (set.matrices.size() > count) set.matrices.pop_back();
  return set;
}

// Minimal real-orthogonal family with `count` matrices; dimension comes out
// as kappa_real(count + 1) by the period-8 recursion.
HRSet minimal_real_family(std::size_t count) {
  if (count == 0) return HRSet::empty();
  if (count == 1) return real_orthogonal_base(2);
  if (count <= 3) return truncated(real_orthogonal_base(4), count);
  if (count <= 7) return truncated(real_orthogonal_base(8), count);
  return compose(real_orthogonal_base(8), minimal_real_family(count - 8));
}

// Minimal complex family from the Pauli doubling chain.
HRSet minimal_complex_family(std::size_t count) {
  if (count == 0) return HRSet::empty();
  HRSet chain = pauli_hr();
  while (chain.count() < count) chain = extend_by_doubling(chain);
  return truncated(std::move(chain), count);
}

int levi_civita_123(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) return 0;
  if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3) return 0;
  // Parity of (a, b, c) as a permutation of (1, 2, 3).
  int swaps = 0;
  std::array<std::size_t, 3> v{a, b, c};
  if (v[0] > v[1]) { std::swap(v[0], v[1]); ++swaps; }
  if (v[1] > v[2]) { std::swap(v[1], v[2]); ++swaps; }
  if (v[0] > v[1]) { std::swap(v[0], v[1]); ++swaps; }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

HRSet pauli_hr() {
  return HRSet{2, {i_sigma_x(), i_sigma_y(), i_sigma_z()}, false};
}

HRSet extend_by_doubling(const HRSet& base) {
  HRSet out;
  out.dim = 2 * base.dim;
  out.real_orthogonal = false;  // i sigma_x / i sigma_y are not real
  out.matrices.reserve(base.count() + 2);
  const ComplexMatrix sz = pauli_z();
  for (const auto& u : base.matrices) out.matrices.push_back(tensor_product(u, sz));
  const ComplexMatrix eye = ComplexMatrix::identity(base.dim);
  out.matrices.push_back(tensor_product(eye, i_sigma_x()));
  out.matrices.push_back(tensor_product(eye, i_sigma_y()));
  return out;
}

HRSet compose(const HRSet& u, const HRSet& v) {
  HRSet out;
  out.dim = 2 * u.dim * v.dim;
  out.real_orthogonal = u.real_orthogonal && v.real_orthogonal;
  out.matrices.reserve(u.count() + v.count() + 1);
  const ComplexMatrix eye_u = ComplexMatrix::identity(u.dim);
  const ComplexMatrix eye_v = ComplexMatrix::identity(v.dim);
  for (const auto& uj : u.matrices) {
    out.matrices.push_back(tensor_product(tensor_product(uj, eye_v), pauli_z()));
  }
  for (const auto& vj : v.matrices) {
    out.matrices.push_back(tensor_product(tensor_product(eye_u, vj), pauli_x()));
  }
  out.matrices.push_back(
      tensor_product(tensor_product(eye_u, eye_v), i_sigma_y()));
  return out;
}

HRSet real_orthogonal_base(std::size_t dim) {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  const ComplexMatrix sx = pauli_x();
  const ComplexMatrix sz = pauli_z();
  const ComplexMatrix isy = i_sigma_y();
  switch (dim) {
    case 2:
      return HRSet{2, {isy}, true};
    case 4:
      return HRSet{4,
                   {tensor_product(isy, sz), tensor_product(isy, sx),
                    tensor_product(eye, isy)},
                   true};
    case 8: {
      auto t3 = [](const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
        return tensor_product(tensor_product(a, b), c);
      };
      return HRSet{8,
                   {t3(sx, isy, eye), t3(sx, sz, isy), t3(sx, sx, isy),
                    t3(isy, eye, eye), t3(sz, eye, isy), t3(sz, isy, sz),
                    t3(sz, isy, sx)},
                   true};
    }
    default:
      throw std::invalid_argument(
          "real_orthogonal_base: explicit families exist for dim 2, 4, 8 only");
  }
}

std::size_t kappa(std::size_t d) {
  if (d < 2) throw std::invalid_argument("kappa: requires d >= 2");
  const std::size_t exp = (d - 1) / 2;
  if (exp >= 63) throw resource_limit_error("kappa: value overflows 64 bits");
  return std::size_t{1} << exp;
}

std::size_t kappa_real(std::size_t d) {
  const std::size_t k = kappa(d);
  const std::size_t r = d % 8;
  return (r == 0 || r == 1 || r == 7) ? k : 2 * k;
}

std::size_t kappa_tilde(std::size_t d) { return std::max<std::size_t>(kappa(d), 2); }

HRSet build_hr(std::size_t count, std::size_t dim, bool real) {
  if (dim == 0) throw std::invalid_argument("build_hr: dim must be positive");
  if (count == 0) {
    HRSet out = HRSet::empty();
    out.dim = dim;
    return out;
  }
  const std::size_t d = count + 1;
  const std::size_t min_dim = real ? kappa_real(d) : kappa(d);
  if (dim % min_dim != 0) {
    throw std::invalid_argument(
        "build_hr: " + std::to_string(count) + (real ? " real" : " complex") +
        " HR matrices need a dimension divisible by " + std::to_string(min_dim) +
        ", got " + std::to_string(dim));
  }
  if (!real && count == 1) {
    // Balanced +-i diagonal so the single matrix is traceless.
    if (dim % 2 != 0) {
      throw std::invalid_argument(
          "build_hr: a traceless single HR matrix needs an even dimension");
    }
    std::vector<cplx> diag(dim);
    for (std::size_t i = 0; i < dim; ++i) diag[i] = (i < dim / 2) ? kI : -kI;
    return HRSet{dim, {ComplexMatrix::diagonal(diag)}, false};
  }
  HRSet base = real ? minimal_real_family(count) : minimal_complex_family(count);
  return pad_with_identity(std::move(base), dim);
}

double HRRelationsReport::max_deviation() const {
  return std::max({max_anticommutator, max_unitarity, max_anti_hermiticity,
                   max_cross_trace, max_trace, max_imag_if_real});
}

HRRelationsReport verify_hr_relations(const HRSet& set, double tol) {
  HRRelationsReport report;
  report.tol = tol;
  const std::size_t s = set.count();
  const std::size_t m = set.dim;
  const ComplexMatrix eye = ComplexMatrix::identity(m);
  for (std::size_t j = 0; j < s; ++j) {
    const ComplexMatrix& uj = set.matrices[j];
    if (uj.rows() != m || uj.cols() != m) {
      throw std::invalid_argument("verify_hr_relations: member dimension mismatch");
    }
    const ComplexMatrix ujd = uj.adjoint();
    report.max_unitarity = std::max(report.max_unitarity, hs_norm(ujd * uj - eye));
    report.max_anti_hermiticity =
        std::max(report.max_anti_hermiticity, hs_norm(ujd + uj));
    if (s >= 2) {
      report.max_trace = std::max(report.max_trace, std::abs(uj.trace()));
    }
    if (set.real_orthogonal) {
      report.max_imag_if_real = std::max(report.max_imag_if_real, max_abs_imag(uj));
    }
    for (std::size_t k = j; k < s; ++k) {
      const ComplexMatrix& uk = set.matrices[k];
      ComplexMatrix anti = uj * uk + uk * uj;
      if (j == k) anti += 2.0 * eye;
      report.max_anticommutator = std::max(report.max_anticommutator, hs_norm(anti));
      if (k > j) {
        report.max_cross_trace =
            std::max(report.max_cross_trace, std::abs((ujd * uk).trace()));
      }
    }
  }
  report.passed = report.max_deviation() <= tol;
  return report;
}

LinearCombinationReport verify_linear_combination_unitarity(const HRSet& set,
                                                            std::size_t trials,
                                                            std::uint64_t seed,
                                                            double tol) {
  LinearCombinationReport report;
  report.trials = trials;
  report.tol = tol;
  const std::size_t s = set.count();
  const std::size_t m = set.dim;
  const ComplexMatrix eye = ComplexMatrix::identity(m);
  SplitRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> c(s + 1);
    double norm2 = 0.0;
    for (auto& v : c) {
      v = rng.gaussian();
      norm2 += v * v;
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix u = cplx(c[0] * inv, 0.0) * eye;
    for (std::size_t j = 0; j < s; ++j) {
      u += cplx(c[j + 1] * inv, 0.0) * set.matrices[j];
    }
    report.max_real_deviation =
        std::max(report.max_real_deviation, hs_norm(u.adjoint() * u - eye));
  }
  if (s >= 1) {
    // c = (1/sqrt2, i/sqrt2) over {I, U_1}: unitarity must fail.
    const double r = 1.0 / std::sqrt(2.0);
    const ComplexMatrix u = cplx(r, 0.0) * eye + cplx(0.0, r) * set.matrices[0];
    report.complex_witness_deviation = hs_norm(u.adjoint() * u - eye);
  }
  report.passed = report.max_real_deviation <= tol &&
                  (s == 0 || report.complex_witness_deviation > 0.5);
  return report;
}

TraceIdentityReport verify_trace_identities(const HRSet& set,
                                            const ComplexMatrix& tau, double alpha,
                                            double tol) {
  const std::size_t s = set.count();
  if (s < 2) {
    throw std::invalid_argument("verify_trace_identities: needs s >= 2");
  }
  if (alpha <= 0.0) {
    throw std::invalid_argument("verify_trace_identities: alpha must be positive");
  }
  if (tau.rows() != set.dim || tau.cols() != set.dim) {
    throw std::invalid_argument("verify_trace_identities: tau dimension mismatch");
  }
  const double scale = std::max(1.0, hs_norm(tau));
  if (hermiticity_deviation(tau) > kTolHerm * scale) {
    throw std::invalid_argument("verify_trace_identities: tau is not hermitian");
  }
  for (const auto& u : set.matrices) {
    if (hs_norm(u * tau - tau * u) > 1e-9 * scale) {
      throw std::invalid_argument(
          "verify_trace_identities: tau does not commute with the family");
    }
  }

  TraceIdentityReport report;
  report.tol = tol;
  const ComplexMatrix tau_alpha = hermitian_power(tau, alpha);
  const double tau_alpha_trace = tau_alpha.trace().real();

  // Extended family with U_0 = I; pairs indexed 0 <= j < k <= s.
  std::vector<const ComplexMatrix*> u(s + 1);
  const ComplexMatrix eye = ComplexMatrix::identity(set.dim);
  u[0] = &eye;
  for (std::size_t j = 1; j <= s; ++j) u[j] = &set.matrices[j - 1];

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j <= s; ++j)
    for (std::size_t k = j + 1; k <= s; ++k) pairs.emplace_back(j, k);

  std::vector<ComplexMatrix> products;
  products.reserve(pairs.size());
  for (const auto& [j, k] : pairs) products.push_back((*u[j]) * (*u[k]));

  cplx correction = 0.0;
  if (s == 3) {
    correction = ((*u[1]) * (*u[2]) * (*u[3]) * tau_alpha).trace();
    report.correction_trace = std::abs(correction);
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const cplx pair_trace = (products[p] * tau_alpha).trace();
    report.max_pair_deviation =
        std::max(report.max_pair_deviation, std::abs(pair_trace));
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto [j, k] = pairs[p];
      const auto [j2, k2] = pairs[q];
      const cplx quartic = (products[p] * products[q] * tau_alpha).trace();
      cplx expected = (j == j2 && k == k2) ? cplx(-tau_alpha_trace, 0.0) : 0.0;
      if (s == 3) {
        const int eps = (j == 0 ? levi_civita_123(k, j2, k2) : 0) +
                        (j2 == 0 ? levi_civita_123(j, k, k2) : 0);
        expected += static_cast<double>(eps) * correction;
      }
      report.max_quartic_deviation =
          std::max(report.max_quartic_deviation, std::abs(quartic - expected));
    }
  }
  report.passed =
      std::max(report.max_pair_deviation, report.max_quartic_deviation) <= tol;
  return report;
}

}  // namespace qmask
