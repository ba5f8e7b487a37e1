#include "circlight/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace circlight {

namespace {

constexpr double kInputNormTolerance = 1e-6;

void require_nonzero(Complex alpha0) {
  if (alpha0 == Complex{}) throw DomainError("circle radius alpha0 must be non-zero");
}

void normalize_trace(HermitianMatrix& r) {
  const double tr = r.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr)) throw DomainError("reduced density matrix has non-positive trace");
  r.scale(1.0 / tr);
}

// log(1 + e^x) without overflow.
double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

EntanglementReport report_from(const HermitianMatrix& rho, Method method, int n, Complex alpha0, std::string state) {
  auto spectrum = density_spectrum(rho);
  const double e = shannon_entropy(spectrum);
  return {e, method, n, alpha0, std::move(state), std::move(spectrum)};
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::AnalyticRics:
      return "analytic-rics";
    case Method::RicsBasisEig:
      return "rics-basis-eig";
    case Method::FockOracle:
      return "fock-oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::AnalyticRics, Method::RicsBasisEig, Method::FockOracle}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

SchmidtDecomposition schmidt_rics(const RicsLabel& label) {
  label.validate();
  require_nonzero(label.alpha0);
  const double mu = std::norm(label.alpha0);
  const auto gt = g_tilde(mu, label.n);
  const auto gt_doubled = g_tilde(2.0 * mu, label.n);
  const double denom = gt_doubled[static_cast<std::size_t>(label.q)];
  if (!(denom > 0.0)) throw DomainError("g~1(q) underflows to zero");

  std::vector<double> lambdas(static_cast<std::size_t>(label.n));
  std::vector<std::pair<int, int>> pairing;
  pairing.reserve(lambdas.size());
  for (int k = 0; k < label.n; ++k) {
    const int partner = wrap(label.q - k, label.n);
    lambdas[static_cast<std::size_t>(k)] = gt[static_cast<std::size_t>(k)] * gt[static_cast<std::size_t>(partner)] / denom;
    pairing.emplace_back(k, partner);
  }
  return {ProbDist(std::move(lambdas)), std::move(pairing)};
}

EntanglementReport entanglement_rics(const RicsLabel& label) {
  auto schmidt = schmidt_rics(label);
  const double e = shannon_entropy(schmidt.lambdas);
  return {e, Method::AnalyticRics, label.n, label.alpha0, "rics q=" + std::to_string(label.q),
          std::move(schmidt.lambdas)};
}

HermitianMatrix partial_density_rics_basis(const CircularState& s) {
  if (std::abs(s.norm() - 1.0) > kInputNormTolerance) throw DomainError("circular state is not normalized");
  const int n = s.size();
  const auto gt = g_tilde(std::norm(s.alpha0()), n);
  const auto& ct = s.spectral();

  HermitianMatrix r(n);
  for (int row = 0; row < n; ++row) {
    for (int col = row; col < n; ++col) {
      Complex acc{};
      for (int k = 0; k < n; ++k) {
        acc += ct.cyclic(row + k) * gt[static_cast<std::size_t>(k)] * std::conj(ct.cyclic(k + col));
      }
      const Complex value = acc * std::sqrt(gt[static_cast<std::size_t>(row)] * gt[static_cast<std::size_t>(col)]);
      r(row, col) = value;
      r(col, row) = std::conj(value);
    }
    r(row, row) = r(row, row).real();
  }
  // The N² prefactor and the two-mode normalization constant are absorbed here.
  normalize_trace(r);
  return r;
}

HermitianMatrix partial_density_kerr(int n, Complex alpha0) {
  if (n < 1) throw DomainError("component count must be at least 1");
  const int parity = n % 2;
  const long long period = 2LL * n;
  const auto gt = g_tilde(std::norm(alpha0), n);
  const auto g = gram_vector(alpha0, n);
  auto quad = [&](long long m) { return m * (m - parity); };

  HermitianMatrix r(n);
  for (int row = 0; row < n; ++row) {
    r(row, row) = gt[static_cast<std::size_t>(row)];
    for (int col = row + 1; col < n; ++col) {
      const long long phase_index = ((quad(col) - quad(row)) % period + period) % period;
      const Complex phase = std::polar(1.0, std::numbers::pi * static_cast<double>(phase_index) / n);
      const Complex value =
          std::sqrt(gt[static_cast<std::size_t>(row)] * gt[static_cast<std::size_t>(col)]) * g.cyclic(col - row) * phase;
      r(row, col) = value;
      r(col, row) = std::conj(value);
    }
  }
  normalize_trace(r);
  return r;
}

EntanglementReport entanglement_general(const CircularState& s) {
  return report_from(partial_density_rics_basis(s), Method::RicsBasisEig, s.size(), s.alpha0(), "circular");
}

EntanglementReport entanglement_kerr(int n, Complex alpha0) {
  return report_from(partial_density_kerr(n, alpha0), Method::RicsBasisEig, n, alpha0, "kerr");
}

EntanglementReport fock_oracle(const FockVector& in_state) {
  const double norm = in_state.norm_squared();
  if (std::abs(norm - 1.0) > kFockNormTolerance) {
    throw DomainError("Fock in-state is not normalized (norm " + std::to_string(norm) + ")");
  }
  const int cutoff = in_state.cutoff();

  // psi(m, j): m photons in A, j in B, m + j < cutoff.
  std::vector<Complex> psi(static_cast<std::size_t>(cutoff) * static_cast<std::size_t>(cutoff), Complex{});
  auto at = [cutoff](int m, int j) { return static_cast<std::size_t>(m) * static_cast<std::size_t>(cutoff) + static_cast<std::size_t>(j); };
  for (int total = 0; total < cutoff; ++total) {
    const Complex a = in_state[total];
    if (a == Complex{}) continue;
    const double log_total = std::lgamma(total + 1.0) - total * std::numbers::ln2;
    for (int m = 0; m <= total; ++m) {
      const double log_weight = log_total - std::lgamma(m + 1.0) - std::lgamma(total - m + 1.0);
      psi[at(m, total - m)] = a * std::exp(0.5 * log_weight);
    }
  }

  HermitianMatrix rho(cutoff);
  for (int m = 0; m < cutoff; ++m) {
    for (int mp = m; mp < cutoff; ++mp) {
      Complex acc{};
      for (int j = 0; j + std::max(m, mp) < cutoff; ++j) acc += psi[at(m, j)] * std::conj(psi[at(mp, j)]);
      rho(m, mp) = acc;
      rho(mp, m) = std::conj(acc);
    }
  }
  normalize_trace(rho);
  return report_from(rho, Method::FockOracle, 0, Complex{}, "fock K=" + std::to_string(cutoff));
}

EntanglementReport entanglement_fock(const CircularState& s, int cutoff) {
  const auto in = in_state(s);
  const int k = cutoff > 0 ? cutoff : default_fock_cutoff(in.alpha0(), in.size());
  auto report = fock_oracle(circular_fock_expansion(in, k));
  report.n = s.size();
  report.alpha0 = s.alpha0();
  return report;
}

double log_branch_ratio(int n, Complex alpha0) {
  if (n < 1) throw DomainError("component count must be at least 1");
  const double two_mu = 2.0 * std::norm(alpha0);
  if (two_mu == 0.0) return -std::numeric_limits<double>::infinity();
  return n * std::log(two_mu) - std::lgamma(n + 1.0);
}

double asymptotic_B(int n, Complex alpha0) {
  const double log_x = log_branch_ratio(n, alpha0);
  const double weight = std::exp(-softplus(-log_x));  // X/(1+X)
  return weight * 0.5 * std::log2(std::numbers::pi * std::numbers::e * n / 2.0);
}

double asymptotic_S(int n, Complex alpha0) {
  const double log_x = log_branch_ratio(n, alpha0);
  if (std::isinf(log_x)) return 0.0;
  // ln(1/(1+X)) = −softplus(ln X), ln(X/(1+X)) = −softplus(−ln X).
  const double ln_vacuum = -softplus(log_x);
  const double ln_branch = -softplus(-log_x);
  const double h = -(std::exp(ln_vacuum) * ln_vacuum + std::exp(ln_branch) * ln_branch) / std::numbers::ln2;
  return h <= 0.0 ? 0.0 : h;
}

Thresholds thresholds(Complex alpha0, int q) {
  require_nonzero(alpha0);
  const double r = std::abs(alpha0);
  Thresholds t;
  t.n1 = std::numbers::pi * r;
  t.n2 = 2.0 * std::numbers::e * r * r;
  t.e_bin = q > 0 ? 0.5 * std::log2(std::numbers::pi * std::numbers::e * q / 2.0)
                  : -std::numeric_limits<double>::infinity();
  return t;
}

MaxOverQ max_rics_entanglement(Complex alpha0, int n) {
  MaxOverQ best{-1.0, 0};
  for (int q = 0; q < n; ++q) {
    const double e = entanglement_rics({n, q, alpha0}).e_bits;
    if (e > best.e_bits) best = {e, q};
  }
  return best;
}

BoundsReport bounds_check(Complex alpha0, int n) {
  require_nonzero(alpha0);
  if (n < 1) throw DomainError("component count must be at least 1");
  BoundsReport r;
  r.lower = 0.5 * std::log2(static_cast<double>(n));
  r.upper = std::log2(static_cast<double>(n));
  if (n == 1) {
    r.satisfied = true;
    return r;
  }
  const auto best = max_rics_entanglement(alpha0, n);
  r.max_q_e = best.e_bits;
  r.argmax_q = best.q;
  if (std::abs(alpha0) <= kBoundsVerifiedRadius) {
    r.satisfied = r.lower < r.max_q_e && r.max_q_e <= r.upper + kRankBoundTolerance;
  }
  return r;
}

}  // namespace circlight
