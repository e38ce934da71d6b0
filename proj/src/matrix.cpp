#include "qmask/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qmask {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count " +
                                std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("ComplexMatrix: ragged initializer");
    }
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = std::conj(data_[k]);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a) {
  a *= cplx(-1.0, 0.0);
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  const std::size_t n = a.rows(), k_dim = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    cplx* out_row = &out(i, 0);
    for (std::size_t k = 0; k < k_dim; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* b_row = &b(k, 0);
      for (std::size_t j = 0; j < m; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, cplx scalar) {
  m *= scalar;
  return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > kMaxDim || cols > kMaxDim) {
    throw resource_limit_error("tensor_product: composite dimension " +
                               std::to_string(rows) + "x" +
                               std::to_string(cols) + " exceeds limit " +
                               std::to_string(kMaxDim));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

double hs_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s += std::norm(v);
  return std::sqrt(s);
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: shape mismatch");
  }
  cplx s = 0.0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::conj(ea[k]) * eb[k];
  return s;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& e : m.entries()) v = std::max(v, std::abs(e));
  return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double v = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    v = std::max(v, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return v;
}

double max_abs_imag(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& e : m.entries()) v = std::max(v, std::abs(e.imag()));
  return v;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      v = std::max(v, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return v;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(
      {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

Ket::Ket(std::vector<cplx> amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.empty()) throw std::invalid_argument("Ket: empty amplitude vector");
}

Ket Ket::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("Ket::basis_state: index out of range");
  std::vector<cplx> amp(dim, cplx(0.0, 0.0));
  amp[index] = 1.0;
  return Ket(std::move(amp));
}

double Ket::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

bool Ket::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("Ket::normalized: zero vector");
  std::vector<cplx> amp(amp_);
  for (auto& a : amp) a /= n;
  return Ket(std::move(amp));
}

ComplexMatrix Ket::outer() const {
  const std::size_t d = dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = amp_[i] * std::conj(amp_[j]);
  return m;
}

DensityMatrix Ket::to_density() const { return DensityMatrix(outer()); }

ComplexMatrix Ket::amplitude_matrix(const BipartiteShape& shape) const {
  if (shape.composite() != dim()) {
    throw std::invalid_argument("Ket::amplitude_matrix: shape mismatch");
  }
  ComplexMatrix m(shape.dim_a, shape.dim_b);
  for (std::size_t a = 0; a < shape.dim_a; ++a)
    for (std::size_t b = 0; b < shape.dim_b; ++b)
      m(a, b) = amp_[a * shape.dim_b + b];
  return m;
}

cplx inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol_herm, double tol_norm)
    : mat_(std::move(m)) {
  if (!mat_.is_square()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!mat_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  }
  if (hermiticity_deviation(mat_) > tol_herm) {
    throw std::invalid_argument("DensityMatrix: matrix is not hermitian");
  }
  if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > tol_norm) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
}

bool DensityMatrix::is_real(double tol) const { return max_abs_imag(mat_) <= tol; }

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("maximally_mixed: dim must be positive");
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

}  // namespace qmask
