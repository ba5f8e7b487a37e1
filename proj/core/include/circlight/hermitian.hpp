// Dense complex Hermitian matrices and a cyclic Jacobi eigensolver.
#pragma once

#include "circlight/spectral.hpp"

#include <cstddef>
#include <vector>

namespace circlight {

/// Square dense complex matrix, row-major. Hermiticity is a property of the
/// contents, checked by the eigensolver rather than enforced on every write.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int dim);

  /// Circulant matrix M_{mn} = first_column(m − n mod N).
  static HermitianMatrix circulant(const CVector& first_column);
  static HermitianMatrix diagonal(std::span<const double> values);

  int dim() const noexcept { return dim_; }

  Complex& operator()(int i, int j) { return data_[index(i, j)]; }
  const Complex& operator()(int i, int j) const { return data_[index(i, j)]; }

  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  /// max_{i,j} |M_ij − conj(M_ji)|.
  double max_asymmetry() const noexcept;
  void scale(double factor) noexcept;

  /// y = M x.
  CVector apply(const CVector& x) const;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  std::vector<Complex> data_;
};

struct EigenSystem {
  std::vector<double> values;   // descending
  std::vector<CVector> vectors;  // vectors[i] pairs with values[i], unit norm
};

inline constexpr double kAsymmetryTolerance = 1e-9;
inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr double kClipTolerance = 1e-12;

/// All eigenpairs of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws std::invalid_argument when the input is not Hermitian within
/// kAsymmetryTolerance, and std::runtime_error if the sweeps fail to reduce
/// the off-diagonal norm below kJacobiTolerance·‖M‖.
EigenSystem hermitian_eigensystem(const HermitianMatrix& m);

/// Eigenvalues only, in descending order.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// Spectrum of a density matrix: eigenvalues in [−kClipTolerance, 0) are set
/// to zero and the rest must be non-negative (DomainError otherwise).
ProbDist density_spectrum(const HermitianMatrix& rho);

}  // namespace circlight
