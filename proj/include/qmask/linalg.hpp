#pragma once

#include <span>
#include <vector>

#include "qmask/matrix.hpp"

namespace qmask {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

/// Hermitian eigendecomposition by cyclic Jacobi sweeps; iterates until the
/// off-diagonal hs-norm drops below 1e-12 * ||H||.
EigResult hermitian_eig(const ComplexMatrix& h, double tol_herm = kTolHerm);

/// Singular values, descending. Computed as square roots of the eigenvalues
/// of M†M (negative round-off clamped to zero).
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values. Requires a square matrix.
double schatten_1_norm(const ComplexMatrix& m);

/// Spectral power of a PSD hermitian matrix; eigenvalues in [-tol_psd, 0)
/// are clamped to zero, more negative ones are an error.
ComplexMatrix hermitian_power(const ComplexMatrix& h, double alpha,
                              double tol_psd = kTolPsd);

ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteShape& shape,
                            Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteShape& shape,
                            Subsystem keep);

/// Singular values of the dimA x dimB amplitude matrix, descending.
std::vector<double> schmidt_coefficients(const Ket& psi, const BipartiteShape& shape);

/// True iff sorted-descending partial sums of p dominate those of q.
/// Requires nonnegative entries and equal sums; the shorter list is padded
/// with zeros.
bool majorizes(std::span<const double> p, std::span<const double> q,
               double tol_major = kTolMajor, double tol_norm = kTolNorm);

/// Full density-matrix validation including the PSD eigenvalue check.
void validate_density(const DensityMatrix& rho, double tol_psd = kTolPsd);

/// Hermitian eigenvalues ascending (no eigenvectors kept).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          double tol_herm = kTolHerm);

double purity(const DensityMatrix& rho);

}  // namespace qmask
