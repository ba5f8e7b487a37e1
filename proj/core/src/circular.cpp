#include "circlight/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace circlight {

namespace {

double radius_squared(Complex alpha0) { return std::norm(alpha0); }

void require_nonzero(Complex alpha0) {
  if (alpha0 == Complex{}) throw DomainError("circle radius alpha0 must be non-zero");
}

double residue_weight(const ProbDist& gt, int q) {
  const double w = gt[static_cast<std::size_t>(q)];
  if (w <= 0.0) throw DomainError("residue weight g~(" + std::to_string(q) + ") underflows to zero");
  return w;
}

// e^{-|α|²/2} αⁿ/√n!, evaluated in log space.
Complex coherent_amplitude(Complex alpha, int n, double half_mu) {
  if (alpha == Complex{}) return n == 0 ? Complex{1.0, 0.0} : Complex{};
  const double log_mag = -half_mu + n * std::log(std::abs(alpha)) - 0.5 * std::lgamma(n + 1.0);
  return std::polar(std::exp(log_mag), n * std::arg(alpha));
}

// log Σ_{j ≡ r (mod n)} μʲ/j!, by log-sum-exp over the residue class.
double log_residue_sum(double mu, int n, int r) {
  const int j_max = static_cast<int>(std::ceil(mu + 40.0 * std::sqrt(mu + 1.0))) + n;
  const double log_mu = std::log(mu);
  std::vector<double> terms;
  for (int j = r; j <= j_max; j += n) terms.push_back(j * log_mu - std::lgamma(j + 1.0));
  const double peak = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - peak);
  return peak + std::log(s);
}

void require_cutoff(Complex alpha0, int n, int cutoff) {
  const int needed = min_fock_cutoff(alpha0, n);
  if (cutoff < needed) {
    throw DomainError("Fock cutoff " + std::to_string(cutoff) + " is below the mass cutoff " + std::to_string(needed));
  }
}

}  // namespace

void RicsLabel::validate() const {
  if (n < 1) throw DomainError("component count must be at least 1");
  if (q < 0 || q >= n) {
    throw DomainError("RICS index q=" + std::to_string(q) + " outside [0, " + std::to_string(n - 1) + "]");
  }
}

CircularState CircularState::from_coefficients(Complex alpha0, const CVector& coeffs) {
  if (coeffs.empty()) throw DomainError("a circular state needs at least one component");
  return from_spectral(alpha0, dft(coeffs));
}

CircularState CircularState::from_spectral(Complex alpha0, CVector spectral) {
  if (spectral.empty()) throw DomainError("a circular state needs at least one component");
  CircularState s(alpha0, std::move(spectral));
  const double nrm = s.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw DomainError("circular state has zero or non-finite norm");
  const double scale = 1.0 / std::sqrt(nrm);
  for (auto& z : s.spectral_) z *= scale;
  return s;
}

double CircularState::norm() const {
  const int n = size();
  const auto gt = g_tilde(radius_squared(alpha0_), n);
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += gt[static_cast<std::size_t>(k)] * std::norm(spectral_[static_cast<std::size_t>(k)]);
  return static_cast<double>(n) * n * s;
}

double CircularState::gram_norm() const {
  const int n = size();
  const auto c = coefficients();
  const auto g = gram_vector(alpha0_, n);
  Complex acc{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc += std::conj(c[static_cast<std::size_t>(i)]) * g.cyclic(static_cast<long long>(i) - j) *
             c[static_cast<std::size_t>(j)];
    }
  }
  return acc.real();
}

double FockVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return s;
}

FockVector FockVector::annihilate() const {
  std::vector<Complex> out(amps_.size(), Complex{});
  for (std::size_t n = 0; n + 1 < amps_.size(); ++n) out[n] = std::sqrt(static_cast<double>(n + 1)) * amps_[n + 1];
  return FockVector(std::move(out));
}

double FockVector::overlap(const FockVector& other) const {
  Complex acc{};
  const std::size_t len = std::min(amps_.size(), other.amps_.size());
  for (std::size_t n = 0; n < len; ++n) acc += std::conj(amps_[n]) * other.amps_[n];
  return std::abs(acc);
}

int min_fock_cutoff(Complex alpha0, int n) {
  const double mu = radius_squared(alpha0);
  return static_cast<int>(std::floor(2.0 * mu + 10.0 * std::sqrt(mu + 1.0) + n)) + 1;
}

int default_fock_cutoff(Complex alpha0, int n) { return min_fock_cutoff(alpha0, n) + 10; }

CircularState rics_coefficients(const RicsLabel& label) {
  label.validate();
  require_nonzero(label.alpha0);
  const auto gt = g_tilde(radius_squared(label.alpha0), label.n);
  CVector spectral(static_cast<std::size_t>(label.n));
  spectral[static_cast<std::size_t>(label.q)] = 1.0 / (label.n * std::sqrt(residue_weight(gt, label.q)));
  return CircularState::from_spectral(label.alpha0, std::move(spectral));
}

CircularState kerr_state(int n, Complex alpha0) {
  if (n < 1) throw DomainError("component count must be at least 1");
  const int parity = n % 2;
  const long long period = 2LL * n;
  CVector spectral(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // k(k−p) is reduced modulo 2N before forming the angle.
    const long long r = (static_cast<long long>(k) * (k - parity)) % period;
    spectral[static_cast<std::size_t>(k)] = std::polar(1.0 / n, -std::numbers::pi * static_cast<double>(r) / n);
  }
  return CircularState::from_spectral(alpha0, std::move(spectral));
}

CircularState in_state(const CircularState& two_mode) {
  return CircularState::from_spectral(std::numbers::sqrt2 * two_mode.alpha0(), two_mode.spectral());
}

FockVector fock_expansion(const RicsLabel& label, int cutoff) {
  label.validate();
  require_nonzero(label.alpha0);
  require_cutoff(label.alpha0, label.n, cutoff);
  const double mu = radius_squared(label.alpha0);
  const double inv_root = 1.0 / std::sqrt(residue_weight(g_tilde(mu, label.n), label.q));
  std::vector<Complex> amps(static_cast<std::size_t>(cutoff), Complex{});
  for (int n = label.q; n < cutoff; n += label.n) {
    amps[static_cast<std::size_t>(n)] = coherent_amplitude(label.alpha0, n, 0.5 * mu) * inv_root;
  }
  return FockVector(std::move(amps));
}

FockVector circular_fock_expansion(const CircularState& s, int cutoff) {
  require_cutoff(s.alpha0(), s.size(), cutoff);
  const double half_mu = 0.5 * radius_squared(s.alpha0());
  const double n_comp = s.size();
  std::vector<Complex> amps(static_cast<std::size_t>(cutoff), Complex{});
  for (int n = 0; n < cutoff; ++n) {
    amps[static_cast<std::size_t>(n)] = n_comp * s.spectral().cyclic(n) * coherent_amplitude(s.alpha0(), n, half_mu);
  }
  return FockVector(std::move(amps));
}

CVector to_rics_basis(const CircularState& s) {
  const int n = s.size();
  const auto gt = g_tilde(radius_squared(s.alpha0()), n);
  CVector b(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const auto i = static_cast<std::size_t>(q);
    b[i] = static_cast<double>(n) * std::sqrt(gt[i]) * s.spectral()[i];
  }
  return b;
}

CircularState from_rics_basis(Complex alpha0, const CVector& b) {
  if (b.empty()) throw DomainError("a circular state needs at least one component");
  const int n = b.length();
  const auto gt = g_tilde(radius_squared(alpha0), n);
  CVector spectral(b.size());
  for (int q = 0; q < n; ++q) {
    const auto i = static_cast<std::size_t>(q);
    if (b[i] == Complex{}) continue;
    spectral[i] = b[i] / (static_cast<double>(n) * std::sqrt(residue_weight(gt, q)));
  }
  return CircularState::from_spectral(alpha0, std::move(spectral));
}

double mean_photon_number(const RicsLabel& label) {
  label.validate();
  require_nonzero(label.alpha0);
  const double mu = radius_squared(label.alpha0);
  // μ g̃(q−1)/g̃(q) without forming g̃, which underflows for q ≫ μ.
  return mu * std::exp(log_residue_sum(mu, label.n, wrap(label.q - 1, label.n)) - log_residue_sum(mu, label.n, label.q));
}

double projection_probability(const RicsLabel& label) {
  label.validate();
  return g_tilde(radius_squared(label.alpha0), label.n)[static_cast<std::size_t>(label.q)];
}

}  // namespace circlight
