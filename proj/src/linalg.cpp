#include "qmask/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qmask {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h, double tol_herm) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  }
  const std::size_t n = h.rows();
  const double scale = std::max(1.0, hs_norm(h));
  if (hermiticity_deviation(h) > tol_herm * scale) {
    throw std::invalid_argument("hermitian_eig: matrix is not hermitian");
  }

  // Symmetrize to kill representation round-off, then run complex Jacobi
  // rotations until the off-diagonal mass is negligible.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = cplx(h(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-12 * hs_norm(a);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= target || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (r <= 1e-300 ||
            r <= 1e-18 * (std::abs(app) + std::abs(aqq) + 1e-300)) {
          continue;
        }
        const cplx phase = apq / r;

        // Absorb the phase and solve the symmetric 2x2 Schur problem.
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx vpp = phase * c;
        const cplx vpq = phase * s;

        // Columns: A <- A * V2 with V2 = [[e^{i phi} c, e^{i phi} s], [-s, c]].
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = aip * vpp - aiq * s;
          a(i, q) = aip * vpq + aiq * c;
        }
        // Rows: A <- V2† * A.
        const cplx cpp = std::conj(vpp);
        const cplx cpq = std::conj(vpq);
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = cpp * apj - s * aqj;
          a(q, j) = cpq * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        // Accumulate eigenvectors.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = vip * vpp - viq * s;
          v(i, q) = vip * vpq + viq * c;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol_herm) {
  return hermitian_eig(h, tol_herm).eigenvalues;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  // Work with the smaller Gram matrix.
  const bool wide = m.cols() > m.rows();
  const ComplexMatrix gram = wide ? m * m.adjoint() : m.adjoint() * m;
  EigResult eig = hermitian_eig(gram);
  std::vector<double> sv;
  sv.reserve(eig.eigenvalues.size());
  for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it) {
    sv.push_back(std::sqrt(std::max(0.0, *it)));
  }
  return sv;
}

double schatten_1_norm(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("schatten_1_norm: matrix must be square");
  }
  const auto sv = singular_values(m);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix hermitian_power(const ComplexMatrix& h, double alpha, double tol_psd) {
  EigResult eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  std::vector<double> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lam = eig.eigenvalues[i];
    if (lam < -tol_psd) {
      throw std::domain_error("hermitian_power: matrix is not PSD");
    }
    lam = std::max(lam, 0.0);
    powers[i] = (lam == 0.0) ? 0.0 : std::pow(lam, alpha);
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += eig.eigenvectors(i, k) * powers[k] * std::conj(eig.eigenvectors(j, k));
      }
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteShape& shape,
                            Subsystem keep) {
  if (!rho.is_square() || rho.rows() != shape.composite()) {
    throw std::invalid_argument(
        "partial_trace: state dimension does not match dimA x dimB");
  }
  const std::size_t da = shape.dim_a, db = shape.dim_b;
  if (keep == Subsystem::A) {
    ComplexMatrix out(da, da);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        cplx s = 0.0;
        for (std::size_t b = 0; b < db; ++b) s += rho(a * db + b, a2 * db + b);
        out(a, a2) = s;
      }
    return out;
  }
  ComplexMatrix out(db, db);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t b2 = 0; b2 < db; ++b2) {
      cplx s = 0.0;
      for (std::size_t a = 0; a < da; ++a) s += rho(a * db + b, a * db + b2);
      out(b, b2) = s;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteShape& shape,
                            Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), shape, keep));
}

std::vector<double> schmidt_coefficients(const Ket& psi, const BipartiteShape& shape) {
  return singular_values(psi.amplitude_matrix(shape));
}

bool majorizes(std::span<const double> p, std::span<const double> q,
               double tol_major, double tol_norm) {
  auto check_entries = [tol_norm](std::span<const double> x, const char* name) {
    for (double v : x) {
      if (v < -tol_norm) {
        throw std::invalid_argument(std::string("majorizes: negative entry in ") +
                                    name);
      }
    }
  };
  check_entries(p, "p");
  check_entries(q, "q");
  const double sp = std::accumulate(p.begin(), p.end(), 0.0);
  const double sq = std::accumulate(q.begin(), q.end(), 0.0);
  if (std::abs(sp - sq) > tol_norm) {
    throw std::invalid_argument("majorizes: sums differ");
  }
  std::vector<double> ps(p.begin(), p.end());
  std::vector<double> qs(q.begin(), q.end());
  const std::size_t n = std::max(ps.size(), qs.size());
  ps.resize(n, 0.0);
  qs.resize(n, 0.0);
  std::sort(ps.begin(), ps.end(), std::greater<>());
  std::sort(qs.begin(), qs.end(), std::greater<>());
  double cp = 0.0, cq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cp += ps[k];
    cq += qs[k];
    if (cp < cq - tol_major) return false;
  }
  return true;
}

void validate_density(const DensityMatrix& rho, double tol_psd) {
  const auto eigs = hermitian_eigenvalues(rho.matrix());
  if (!eigs.empty() && eigs.front() < -tol_psd) {
    throw std::invalid_argument("validate_density: negative eigenvalue " +
                                std::to_string(eigs.front()));
  }
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = ||rho||_hs^2 for hermitian rho.
  const double n = hs_norm(rho.matrix());
  return n * n;
}

}  // namespace qmask
