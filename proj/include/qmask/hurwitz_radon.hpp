#pragma once

#include <cstdint>
#include <vector>

#include "qmask/matrix.hpp"

namespace qmask {

/// A family {U_j} of anticommuting anti-hermitian unitaries:
/// U_j U_k + U_k U_j = -2 delta_jk I. The real_orthogonal flag is tracked
/// structurally (set by construction, never by thresholding).
struct HRSet {
  std::size_t dim = 1;
  std::vector<ComplexMatrix> matrices;
  bool real_orthogonal = false;

  std::size_t count() const { return matrices.size(); }

  static HRSet empty() { return HRSet{1, {}, true}; }
};

/// {i sigma_x, i sigma_y, i sigma_z} in dimension 2.
HRSet pauli_hr();

/// U_j -> U_j (x) sigma_z, then append I (x) i sigma_x and I (x) i sigma_y:
/// s + 2 matrices in dimension 2m.
HRSet extend_by_doubling(const HRSet& base);

/// Three-case composition of an r-family in dim m1 with an s-family in dim
/// m2 into r+s+1 matrices in dim 2*m1*m2. Works with r = 0, m1 = 1.
HRSet compose(const HRSet& u, const HRSet& v);

/// The explicit real-orthogonal families in dimensions 2, 4, 8 (maximal:
/// 1, 3, 7 matrices).
HRSet real_orthogonal_base(std::size_t dim);

/// Minimal dimension supporting d-1 complex HR matrices: 2^floor((d-1)/2).
std::size_t kappa(std::size_t d);
/// Real-orthogonal variant; equals kappa(d) for d = 0,1,7 mod 8 and
/// 2*kappa(d) otherwise.
std::size_t kappa_real(std::size_t d);
/// max(kappa(d), 2).
std::size_t kappa_tilde(std::size_t d);

/// Builds exactly `count` traceless HR matrices in dimension `dim`
/// (deterministic construction: base family, doubling/composition to the
/// minimal dimension, then identity padding). Errors when dim is not
/// divisible by kappa(count+1) (kappa_real for real families).
HRSet build_hr(std::size_t count, std::size_t dim, bool real);

struct HRRelationsReport {
  double max_anticommutator = 0.0;   // ||U_j U_k + U_k U_j + 2 delta_jk I||_hs
  double max_unitarity = 0.0;        // ||U_j† U_j - I||_hs
  double max_anti_hermiticity = 0.0; // ||U_j† + U_j||_hs
  double max_cross_trace = 0.0;      // |tr(U_j† U_k)|, j != k
  double max_trace = 0.0;            // |tr U_j| (only checked when s >= 2)
  double max_imag_if_real = 0.0;     // entries' |Im| when flagged real
  double tol = kTolHr;
  bool passed = false;

  double max_deviation() const;
};

HRRelationsReport verify_hr_relations(const HRSet& set, double tol = kTolHr);

struct LinearCombinationReport {
  std::size_t trials = 0;
  double max_real_deviation = 0.0;       // ||U(c)†U(c) - I|| over real unit c
  double complex_witness_deviation = 0.0; // same for one complex c (should fail)
  double tol = kTolHr;
  bool passed = false;
};

/// Lemma-style check that U(c) = c_0 I + sum_j c_j U_j is unitary for random
/// normalized real c, and that one deliberately complex c breaks unitarity.
LinearCombinationReport verify_linear_combination_unitarity(
    const HRSet& set, std::size_t trials, std::uint64_t seed, double tol = kTolHr);

struct TraceIdentityReport {
  double max_pair_deviation = 0.0;    // |tr(U_j U_k tau^alpha)|, j < k
  double max_quartic_deviation = 0.0; // quartic identity incl. s=3 correction
  double correction_trace = 0.0;      // |tr(U_1 U_2 U_3 tau^alpha)| when s = 3
  double tol = kTolHr;
  bool passed = false;
};

/// Trace identities for an HR family commuting with a hermitian tau
/// (U_0 = I is prepended): tr(U_j U_k tau^a) = 0 and the quartic rule
/// -tr(tau^a) delta_jj' delta_kk', with the Levi-Civita correction at s = 3.
TraceIdentityReport verify_trace_identities(const HRSet& set,
                                            const ComplexMatrix& tau, double alpha,
                                            double tol = kTolHr);

}  // namespace qmask
