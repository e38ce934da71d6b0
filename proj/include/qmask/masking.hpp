#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qmask/hurwitz_radon.hpp"
#include "qmask/matrix.hpp"
#include "qmask/random.hpp"

namespace qmask {

struct SpectrumEntry {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
};

/// Isometry M from dimension d into dA x dB together with the cached common
/// reduced states of M|0><0|M†, their grouped spectrum and purity, and, when
/// the masker was built from an explicit HR family, that family (A side;
/// the B-side partners are the transposes for every construction here).
struct Masker {
  std::size_t input_dim = 0;
  BipartiteShape shape;
  ComplexMatrix isometry;  // (dA*dB) x d, columns are the images M|j>
  DensityMatrix tau_a;
  DensityMatrix tau_b;
  std::vector<SpectrumEntry> spectrum;
  double purity = 0.0;
  std::optional<HRSet> hr_family;

  Ket column(std::size_t j) const;
};

struct MaskReport {
  std::size_t checked_states = 0;
  double max_dev_a = 0.0;
  double max_dev_b = 0.0;
  bool is_masker = false;
  bool is_partial_masker_a = false;
  std::optional<DensityMatrix> witness_state;
  double tol = kTolNorm;
};

/// M|j> = (U_j (x) I)|Phi> with |Phi> the canonical maximally entangled state
/// of rank m and {U_j} a traceless HR family with U_0 = I. Masks the real
/// states; marginals are I/m. Requires m even and divisible by kappa(d)
/// (kappa_real(d) when real).
Masker canonical_real_masker(std::size_t d, std::size_t m, bool real = false);

/// The explicit d = 4 -> 2x2 masker through the two-qubit magic basis.
Masker magic_basis_masker();

/// Masker for the real states with a prescribed masking spectrum
/// {(lambda_o, m_o)}; each multiplicity must be divisible by kappa(d)
/// (kappa_real(d) when real). Complex d = 2 is handled by
/// qubit_complex_masker instead.
Masker masker_from_spectrum(std::size_t d, std::vector<SpectrumEntry> spectrum,
                            bool real = false);

/// d = 2 masker |Psi_0> = sum_l sqrt(mu_l)|ll>, |Psi_1> = i sum_l v_l
/// sqrt(mu_l)|ll>; requires the sign balance sum_l v_l mu_l = 0.
Masker qubit_complex_masker(const std::vector<double>& mu,
                            const std::vector<int>& signs);

/// The diagonal embedding |j> -> |jj>; masks every phase-parameterized set
/// with fixed amplitude profile (marginals diag(c_j^2)).
Masker phase_masker(std::size_t d);

DensityMatrix apply(const Masker& masker, const DensityMatrix& rho);
Ket apply(const Masker& masker, const Ket& psi);

/// Samples n states, compares both marginals of M(rho) against the reference
/// marginals (the masker's cached tau by default), and reports the maximal
/// hs-norm deviations together with the worst witness state.
MaskReport verify_masker(const Masker& masker, const StateSampler& sampler,
                         std::size_t n, double tol = kTolNorm,
                         const DensityMatrix* ref_a = nullptr,
                         const DensityMatrix* ref_b = nullptr);

/// Closed-form marginal: tau + sum_{j<k} (rho_kj - rho_jk) U_j U_k tau,
/// never forming the composite state. Requires the HR metadata.
DensityMatrix reduced_state_fast(const Masker& masker, const DensityMatrix& rho,
                                 Subsystem side);

/// Recovers the HR families on both sides from the isometry alone via the
/// unique local-unitary formula U = M_j M_0† tau_A^{-1} (after restricting to
/// the marginal supports). Throws when the recovered families fail the HR
/// relations, which signals that the input does not mask the real states.
std::pair<HRSet, HRSet> extract_hr(const Masker& masker, double tol = 1e-9);

struct CounterexampleD2 {
  Masker masker;            // mu = (1/4, 1/4, 1/2), signs (+, +, -)
  Ket psi;                  // the displayed d = 2 input state
  Ket output;               // M|psi> = (|00> + |11> - |22>)/sqrt(3)
  double concurrence_out = 0.0;  // 2/sqrt(3)
  double bound = 0.0;            // sqrt(2(1 - purity)) = sqrt(5)/2
};

/// The d = 2 counterexample where the output concurrence exceeds the
/// sqrt(2(1-purity)) bound that holds for every d >= 3.
CounterexampleD2 counterexample_d2();

/// Groups eigenvalues (relative tolerance 1e-8, zero threshold 1e-10) into
/// (eigenvalue, multiplicity) pairs, descending.
std::vector<SpectrumEntry> group_spectrum(const std::vector<double>& eigenvalues);

}  // namespace qmask
