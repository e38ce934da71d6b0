#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qmask {

using cplx = std::complex<double>;

// Default tolerances. Every check that consumes one accepts an override.
inline constexpr double kTolNorm = 1e-9;
inline constexpr double kTolHerm = 1e-9;
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolEig = 1e-10;
inline constexpr double kTolMajor = 1e-9;
inline constexpr double kTolHr = 1e-10;
inline constexpr double kTolIso = 1e-10;

// Composite dimensions above this limit signal the resource guard instead of
// attempting the allocation.
inline constexpr std::size_t kMaxDim = 4096;

class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subsystem { A, B };

struct BipartiteShape {
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;

  std::size_t composite() const { return dim_a * dim_b; }
};

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cplx>& entries);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<cplx>& entries() { return data_; }
  const std::vector<cplx>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scalar);

/// Kronecker product with the A-major index convention
/// (i = a_row * b.rows() + b_row); `a` is always the left factor.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius (Hilbert-Schmidt) norm.
double hs_norm(const ComplexMatrix& m);
/// tr(a† b).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_imag(const ComplexMatrix& m);
/// max |m - m†| over entries.
double hermiticity_deviation(const ComplexMatrix& m);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

class DensityMatrix;

/// Normalized pure state.
class Ket {
 public:
  Ket() = default;
  explicit Ket(std::vector<cplx> amplitudes);

  static Ket basis_state(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;
  bool is_normalized(double tol = kTolNorm) const;
  Ket normalized() const;

  /// |psi><psi|.
  ComplexMatrix outer() const;
  DensityMatrix to_density() const;
  /// dimA x dimB matrix of amplitudes, amp[a*dimB + b] at (a, b).
  ComplexMatrix amplitude_matrix(const BipartiteShape& shape) const;

 private:
  std::vector<cplx> amp_;
};

cplx inner(const Ket& a, const Ket& b);

/// Hermitian, PSD, unit-trace matrix. The constructor checks hermiticity and
/// trace; positivity needs an eigensolve and is checked by
/// validate_density() in linalg.hpp at the trusted-input boundaries.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(ComplexMatrix m, double tol_herm = kTolHerm,
                         double tol_norm = kTolNorm);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  /// True when every entry has |imaginary part| <= tol (transpose-invariant
  /// states in the computational basis).
  bool is_real(double tol = 0.0) const;

  static DensityMatrix maximally_mixed(std::size_t dim);

 private:
  ComplexMatrix mat_;
};

}  // namespace qmask
