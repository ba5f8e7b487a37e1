// Spectral numerics shared by every circular-state computation: a cyclic
// complex vector, the 1/N-normalized DFT pair, the Gram vector of N coherent
// states on a circle and its Poisson-residue spectrum, and entropies.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlight {

using Complex = std::complex<double>;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (zero amplitude for a RICS, negative mean photon number, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-negative residue of `i` modulo `n` (n > 0).
constexpr int wrap(long long i, int n) noexcept {
  const long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Fixed-length complex vector whose indices are taken modulo its length.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t n, Complex fill = {}) : data_(n, fill) {}
  CVector(std::initializer_list<Complex> init) : data_(init) {}
  explicit CVector(std::vector<Complex> data) : data_(std::move(data)) {}

  std::size_t size() const noexcept { return data_.size(); }
  int length() const noexcept { return static_cast<int>(data_.size()); }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  /// Element at `i mod N`; negative indices wrap.
  const Complex& cyclic(long long i) const { return data_[static_cast<std::size_t>(wrap(i, length()))]; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  std::span<const Complex> view() const noexcept { return data_; }
  const std::vector<Complex>& values() const noexcept { return data_; }

  double norm_squared() const noexcept;

 private:
  std::vector<Complex> data_;
};

/// Discrete probability distribution. Weights are non-negative and sum to
/// one within 1e-10; violations throw DomainError at construction.
class ProbDist {
 public:
  ProbDist() : weights_{1.0} {}
  explicit ProbDist(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  /// Weight at `i mod size()`.
  double cyclic(long long i) const { return weights_[static_cast<std::size_t>(wrap(i, static_cast<int>(size())))]; }

  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }
  const std::vector<double>& weights() const noexcept { return weights_; }

  static constexpr double kSumTolerance = 1e-10;

 private:
  std::vector<double> weights_;
};

/// Forward transform ṽ(k) = (1/N) Σ_m v(m) e^{-i2πkm/N}. Throws
/// std::invalid_argument on an empty vector.
CVector dft(const CVector& v);

/// Inverse transform v(m) = Σ_k ṽ(k) e^{i2πkm/N}; exact inverse of dft().
CVector idft(const CVector& v);

/// Overlaps g(m) = ⟨α_0|α_m⟩ = exp{|α₀|²(e^{i2πm/N} − 1)} of N coherent
/// states equidistant on a circle of radius |α₀|. The Gram matrix of that set
/// is the circulant G_{mn} = g(m − n).
CVector gram_vector(Complex alpha0, int n);

/// Poisson(mu) probability mass collected by residue class k = j mod N,
/// g̃(k) = e^{-μ} Σ_l μ^{k+lN}/(k+lN)!. Equals dft(gram_vector) for μ = |α₀|².
/// Throws DomainError for mu < 0 or n < 1.
ProbDist g_tilde(double mu, int n);

/// Base-2 Shannon entropy; weights below kEntropyFloor contribute nothing.
double shannon_entropy(const ProbDist& p);
double shannon_entropy(std::span<const double> weights);

inline constexpr double kEntropyFloor = 1e-15;

/// Binomial(q, 1/2): P(k) = C(q,k) 2^{-q}, k = 0..q.
ProbDist binomial_dist(int q);

}  // namespace circlight
