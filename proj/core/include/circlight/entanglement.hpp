// Entanglement of formation of two-mode circular states
//   |Ψ⟩ = Σ_m c_m |α_m⟩_A |α_m⟩_B,
// by three routes:
//   analytic-rics   closed-form Schmidt coefficients of a two-mode RICS;
//   rics-basis-eig  eigenvalues of the N×N one-mode density matrix R′
//                   written in the RICS basis;
//   fock-oracle     beam splitting of the in-state in a truncated Fock basis.
// The last route never uses the Gram spectrum or the RICS machinery and is
// kept as an independent check of the other two.
#pragma once

#include "circlight/circular.hpp"
#include "circlight/hermitian.hpp"
#include "circlight/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circlight {

enum class Method { AnalyticRics, RicsBasisEig, FockOracle };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// |Ψ⟩ = Σ_k √λ_k |c_k⟩_A |c_{pairing[k].second}⟩_B.
struct SchmidtDecomposition {
  ProbDist lambdas;
  std::vector<std::pair<int, int>> pairing;
};

struct EntanglementReport {
  double e_bits = 0.0;
  Method method = Method::AnalyticRics;
  int n = 1;
  Complex alpha0{};
  std::string state;
  ProbDist lambdas;
};

/// λ_k = g̃(k) g̃(q−k) / g̃₁(q), with g̃ at μ = |α₀|² and g̃₁ at μ = 2|α₀|²;
/// mode A's |c_k⟩ pairs with mode B's |c_{q−k}⟩. Throws DomainError for α₀ = 0.
SchmidtDecomposition schmidt_rics(const RicsLabel& label);

/// Shannon entropy of schmidt_rics().
EntanglementReport entanglement_rics(const RicsLabel& label);

/// One-mode reduced density matrix of the two-mode state with coefficients
/// c̃ = s.spectral() and per-mode radius s.alpha0(), in the Fourier-transformed
/// Löwdin basis (the RICS basis):
///   R′_mn = N² √(g̃(m)g̃(n)) Σ_k c̃_{m+k} g̃(k) c̃*_{k+n},
/// rescaled to unit trace. Throws DomainError when `s` is not normalized
/// within 1e-6.
HermitianMatrix partial_density_rics_basis(const CircularState& s);

/// Closed form of R′ for the Kerr state:
///   R′_mn = √(g̃(m)g̃(n)) g(n−m) e^{iπ(n(n−p) − m(m−p))/N}, p = N mod 2.
HermitianMatrix partial_density_kerr(int n, Complex alpha0);

/// Entropy of the spectrum of partial_density_rics_basis().
EntanglementReport entanglement_general(const CircularState& s);
/// Entropy of the spectrum of partial_density_kerr().
EntanglementReport entanglement_kerr(int n, Complex alpha0);

/// Splits `in_state` on a 50:50 beam splitter with vacuum in the other port,
/// ψ(m, n−m) = a_n √C(n,m) 2^{-n/2}, and returns the entropy of
/// ρ_A = ψψ†. Throws DomainError when ‖in_state‖² deviates from 1 by more
/// than kFockNormTolerance.
EntanglementReport fock_oracle(const FockVector& in_state);

/// fock_oracle() applied to the in-state of the two-mode state `s`.
/// A cutoff of 0 selects default_fock_cutoff() for the in-state.
EntanglementReport entanglement_fock(const CircularState& s, int cutoff = 0);

/// Weight of the binomial branch times its entropy in the two-term
/// approximation |c_0⟩ ≈ (|0⟩ + √X |N⟩)/√(1+X), X = (2|α₀|²)^N / N!:
/// B(N) = X/(1+X) · ½ log₂(πeN/2).
double asymptotic_B(int n, Complex alpha0);
/// Entropy of the branch weights {1/(1+X), X/(1+X)}.
double asymptotic_S(int n, Complex alpha0);
/// ln X(N), evaluated without forming X.
double log_branch_ratio(int n, Complex alpha0);

struct Thresholds {
  double n1 = 0.0;     // π|α₀|: components stop being nearly orthogonal
  double n2 = 0.0;     // 2e|α₀|²: onset of the Fock-state plateau
  double e_bin = 0.0;  // ½ log₂(πeq/2), large-q binomial entropy; −∞ for q = 0
};

/// Throws DomainError for α₀ = 0.
Thresholds thresholds(Complex alpha0, int q);

struct MaxOverQ {
  double e_bits = 0.0;
  int q = 0;  // smallest maximizing index
};

/// max_q E(α₀, N, q) by exhaustive sweep over q = 0..N-1.
MaxOverQ max_rics_entanglement(Complex alpha0, int n);

struct BoundsReport {
  double max_q_e = 0.0;
  int argmax_q = 0;
  double lower = 0.0;  // ½ log₂ N (strict)
  double upper = 0.0;  // log₂ N
  /// Whether lower < max_q_e ≤ upper. Empty outside 0 < |α₀| ≤ 4, where the
  /// lower bound has not been established.
  std::optional<bool> satisfied;
};

inline constexpr double kRankBoundTolerance = 1e-9;
inline constexpr double kBoundsVerifiedRadius = 4.0;

BoundsReport bounds_check(Complex alpha0, int n);

}  // namespace circlight
