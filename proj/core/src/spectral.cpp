#include "circlight/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace circlight {

namespace {

// e^{sign·i2πr/N} for r = 0..N-1; callers reduce k·m modulo N first so the
// angle never loses precision for large products.
std::vector<Complex> twiddles(int n, double sign) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const double angle = sign * 2.0 * std::numbers::pi * r / n;
    w[static_cast<std::size_t>(r)] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

CVector transform(const CVector& v, double sign, double scale) {
  if (v.empty()) throw std::invalid_argument("DFT of an empty vector");
  const int n = v.length();
  const auto w = twiddles(n, sign);
  CVector out(v.size());
  for (int k = 0; k < n; ++k) {
    Complex acc{};
    for (int m = 0; m < n; ++m) {
      acc += v[static_cast<std::size_t>(m)] *
             w[static_cast<std::size_t>((static_cast<long long>(k) * m) % n)];
    }
    out[static_cast<std::size_t>(k)] = acc * scale;
  }
  return out;
}

}  // namespace

double CVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("probability distribution must be non-empty");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("probability weights must be finite and non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError("probability weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

CVector dft(const CVector& v) { return transform(v, -1.0, 1.0 / static_cast<double>(v.size())); }

CVector idft(const CVector& v) { return transform(v, +1.0, 1.0); }

CVector gram_vector(Complex alpha0, int n) {
  if (n < 1) throw DomainError("component count must be at least 1");
  const double mu = std::norm(alpha0);
  CVector g(static_cast<std::size_t>(n));
  g[0] = 1.0;
  // g(-m) = conj(g(m)) is imposed exactly rather than left to rounding.
  for (int m = 1; 2 * m <= n; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / n;
    const Complex value = std::exp(Complex{mu * (std::cos(theta) - 1.0), mu * std::sin(theta)});
    g[static_cast<std::size_t>(m)] = value;
    g[static_cast<std::size_t>(n - m)] = std::conj(value);
  }
  if (n % 2 == 0) {
    // m = N/2 is its own mirror image; it must be real.
    g[static_cast<std::size_t>(n / 2)] = std::exp(-2.0 * mu);
  }
  return g;
}

ProbDist g_tilde(double mu, int n) {
  if (n < 1) throw DomainError("component count must be at least 1");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mean photon number must be finite and non-negative");

  std::vector<double> residues(static_cast<std::size_t>(n), 0.0);
  if (mu == 0.0 || n == 1) {
    residues[0] = 1.0;
    return ProbDist(std::move(residues));
  }

  const auto j_max = static_cast<long long>(std::ceil(mu + 40.0 * std::sqrt(mu + 1.0) + n));
  // Forward recurrence from p_0 = e^{-μ}. Past kUnderflowMu that start would
  // underflow, so the walk begins at the mode and runs in both directions.
  constexpr double kUnderflowMu = 600.0;
  const auto j0 = mu < kUnderflowMu ? 0LL : static_cast<long long>(std::floor(mu));
  const double p0 = j0 == 0 ? std::exp(-mu)
                            : std::exp(-mu + static_cast<double>(j0) * std::log(mu) -
                                       std::lgamma(static_cast<double>(j0) + 1.0));

  double p = p0;
  for (long long j = j0; j <= j_max; ++j) {
    residues[static_cast<std::size_t>(j % n)] += p;
    p *= mu / static_cast<double>(j + 1);
  }
  p = p0;
  for (long long j = j0; j > 0; --j) {
    p *= static_cast<double>(j) / mu;
    residues[static_cast<std::size_t>((j - 1) % n)] += p;
  }
  return ProbDist(std::move(residues));
}

double shannon_entropy(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w >= kEntropyFloor) h -= w * std::log2(w);
  }
  return h <= 0.0 ? 0.0 : h;
}

double shannon_entropy(const ProbDist& p) { return shannon_entropy(std::span<const double>(p.weights())); }

ProbDist binomial_dist(int q) {
  if (q < 0) throw DomainError("binomial order must be non-negative");
  // Pascal's rule with a halving per row keeps every entry a probability.
  std::vector<double> row{1.0};
  row.reserve(static_cast<std::size_t>(q) + 1);
  for (int r = 1; r <= q; ++r) {
    row.push_back(0.0);
    for (std::size_t k = row.size() - 1; k > 0; --k) row[k] = 0.5 * (row[k] + row[k - 1]);
    row[0] *= 0.5;
  }
  return ProbDist(std::move(row));
}

}  // namespace circlight
