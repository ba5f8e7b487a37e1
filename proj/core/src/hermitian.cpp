#include "circlight/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circlight {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const HermitianMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

HermitianMatrix::HermitianMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Complex{});
}

HermitianMatrix HermitianMatrix::circulant(const CVector& first_column) {
  const int n = first_column.length();
  HermitianMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = first_column.cyclic(static_cast<long long>(i) - j);
  }
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  HermitianMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

Complex HermitianMatrix::trace() const noexcept {
  Complex t{};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double HermitianMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double HermitianMatrix::max_asymmetry() const noexcept {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  }
  return worst;
}

void HermitianMatrix::scale(double factor) noexcept {
  for (auto& z : data_) z *= factor;
}

CVector HermitianMatrix::apply(const CVector& x) const {
  if (x.length() != dim_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  CVector y(x.size());
  for (int i = 0; i < dim_; ++i) {
    Complex acc{};
    for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& m) {
  const int n = m.dim();
  if (n < 1) throw std::invalid_argument("eigenproblem of an empty matrix");
  const double scale = m.frobenius_norm();
  const double asym = m.max_asymmetry();
  if (asym > kAsymmetryTolerance * std::max(1.0, scale)) {
    throw std::invalid_argument("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  }

  // Work on the exactly Hermitian part.
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  HermitianMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double target = kJacobiTolerance * scale;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // J = D R D†, D = diag(1, e^{-iφ}), reduces the (p,q) block to the
        // real symmetric case handled by an ordinary Jacobi rotation R.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex j_pq = s * phase;             // J(p,q)
        const Complex j_qp = -s * std::conj(phase);  // J(q,p)

        // A <- A J
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + akq * j_qp;
          a(k, q) = akp * j_pq + c * akq;
        }
        // A <- J† A
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(j_qp) * aqk;
          a(q, k) = std::conj(j_pq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + vkq * j_qp;
          v(k, q) = vkp * j_pq + c * vkq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > target) {
    throw std::runtime_error("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  EigenSystem out;
  out.values.reserve(order.size());
  out.vectors.reserve(order.size());
  for (int idx : order) {
    out.values.push_back(a(idx, idx).real());
    CVector col(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) col[static_cast<std::size_t>(k)] = v(k, idx);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) { return hermitian_eigensystem(m).values; }

ProbDist density_spectrum(const HermitianMatrix& rho) {
  auto values = hermitian_eigenvalues(rho);
  for (double& x : values) {
    if (x < 0.0) {
      if (x < -kClipTolerance) {
        throw DomainError("density matrix has a negative eigenvalue " + std::to_string(x));
      }
      x = 0.0;
    }
  }
  return ProbDist(std::move(values));
}

}  // namespace circlight
